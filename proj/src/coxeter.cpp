#include "rtl/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rtl {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void check_nodes(const CoxeterDiagram& d, const NodeSet& s, const char* what) {
    for (int v : s)
        if (v < 1 || v > d.rank)
            throw PreconditionError(std::string(what) + ": node " + std::to_string(v) + " not in 1.." +
                                    std::to_string(d.rank));
}

std::string key_of(const std::int8_t* p, int len) {
    return std::string(reinterpret_cast<const char*>(p), static_cast<std::size_t>(len));
}

// Column-major product a*b of rank x rank matrices.
void mat_mul(const std::int8_t* a, const std::int8_t* b, std::int8_t* out, int n) {
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            int acc = 0;
            for (int k = 0; k < n; ++k) acc += a[k * n + i] * b[j * n + k];
            out[j * n + i] = static_cast<std::int8_t>(acc);
        }
}

}  // namespace

char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            case 'E': return Family::E;
            case 'F': return Family::F;
            case 'G': return Family::G;
            default: break;
        }
    }
    throw PreconditionError("unknown Coxeter family '" + s + "'");
}

std::string CoxeterDiagram::name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

CoxeterDiagram build_diagram(Family family, int rank) {
    bool ok = rank >= 1;
    switch (family) {
        case Family::A: break;
        case Family::B:
        case Family::C: ok = ok && rank >= 2; break;
        case Family::D: ok = ok && rank >= 4; break;
        case Family::E: ok = ok && rank >= 6 && rank <= 8; break;
        case Family::F: ok = ok && rank == 4; break;
        case Family::G: ok = ok && rank == 2; break;
    }
    if (!ok)
        throw PreconditionError(std::string("inadmissible rank ") + std::to_string(rank) + " for family " +
                                family_char(family));
    CoxeterDiagram d;
    d.family = family;
    d.rank = rank;
    d.m.assign(rank * rank, 2);
    for (int i = 0; i < rank; ++i) d.m[i * rank + i] = 1;
    auto set = [&](int i, int j, int v) {
        d.m[(i - 1) * rank + (j - 1)] = v;
        d.m[(j - 1) * rank + (i - 1)] = v;
    };
    switch (family) {
        case Family::A:
            for (int i = 1; i < rank; ++i) set(i, i + 1, 3);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i < rank; ++i) set(i, i + 1, 3);
            set(rank - 1, rank, 4);
            break;
        case Family::D:
            for (int i = 1; i <= rank - 2; ++i) set(i, i + 1, 3);
            set(rank - 2, rank, 3);
            break;
        case Family::E:
            set(1, 3, 3);
            for (int i = 3; i < rank; ++i) set(i, i + 1, 3);
            set(2, 4, 3);
            break;
        case Family::F:
            set(1, 2, 3);
            set(2, 3, 4);
            set(3, 4, 3);
            break;
        case Family::G:
            set(1, 2, 6);
            break;
    }
    return d;
}

std::vector<Component> induced_type(const CoxeterDiagram& d, const NodeSet& subset_in) {
    NodeSet subset = normalize(subset_in);
    check_nodes(d, subset, "induced_type");
    std::vector<Component> out;
    std::vector<char> seen(d.rank + 1, 0), in(d.rank + 1, 0);
    for (int v : subset) in[v] = 1;
    for (int start : subset) {
        if (seen[start]) continue;
        NodeSet comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 1; u <= d.rank; ++u)
                if (in[u] && !seen[u] && d.bond(v, u) > 2) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comp = normalize(comp);
        int k = static_cast<int>(comp.size());
        bool bond4 = false, bond6 = false;
        std::vector<int> deg(d.rank + 1, 0);
        for (int a : comp)
            for (int b : comp)
                if (a < b && d.bond(a, b) > 2) {
                    ++deg[a];
                    ++deg[b];
                    bond4 = bond4 || d.bond(a, b) == 4;
                    bond6 = bond6 || d.bond(a, b) == 6;
                }
        Family fam = Family::A;
        if (k == d.rank) {
            fam = d.family;
        } else if (bond6) {
            fam = Family::G;
        } else if (bond4) {
            fam = d.family == Family::C ? Family::C : Family::B;
        } else {
            int branch = 0;
            for (int v : comp)
                if (deg[v] >= 3) branch = v;
            if (branch) {
                // arm lengths from the branch node
                std::vector<int> arms;
                for (int u : comp) {
                    if (d.bond(branch, u) <= 2 || u == branch) continue;
                    int len = 1, prev = branch, cur = u;
                    for (;;) {
                        int next = 0;
                        for (int w : comp)
                            if (w != prev && w != cur && d.bond(cur, w) > 2) next = w;
                        if (!next) break;
                        prev = cur;
                        cur = next;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                fam = (arms[0] == 1 && arms[1] == 1) ? Family::D : Family::E;
            }
        }
        out.push_back({fam, k, comp});
    }
    return out;
}

std::string type_string(const std::vector<Component>& comps) {
    if (comps.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) s += "x";
        s += family_char(comps[i].family) + std::to_string(comps[i].rank);
    }
    return s;
}

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d) {
    std::vector<int> perm(d.rank);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    // Cartan-preserving, so the orientation of bonds 4 and 6 must be kept.
    auto c = cartan_matrix(d);
    do {
        bool ok = true;
        for (int i = 0; i < d.rank && ok; ++i)
            for (int j = 0; j < d.rank && ok; ++j)
                ok = c[i][j] == c[perm[i] - 1][perm[j] - 1];
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NodeSet apply_perm(const std::vector<int>& perm, const NodeSet& s) {
    NodeSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(perm[v - 1]);
    return normalize(out);
}

std::uint64_t group_order(Family family, int rank) {
    switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << rank) * factorial(rank);
        case Family::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
        case Family::E:
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            return 696729600;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

std::uint64_t parabolic_order(const CoxeterDiagram& d, const NodeSet& subset) {
    std::uint64_t order = 1;
    for (const auto& c : induced_type(d, subset)) order *= group_order(c.family, c.rank);
    return order;
}

std::vector<std::vector<int>> cartan_matrix(const CoxeterDiagram& d) {
    int n = d.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int m = d.bond(i, j);
            if (m == 3) {
                c[i - 1][j - 1] = c[j - 1][i - 1] = -1;
            } else if (m == 4) {
                c[i - 1][j - 1] = -1;
                c[j - 1][i - 1] = -2;
            } else if (m == 6) {
                c[i - 1][j - 1] = -1;
                c[j - 1][i - 1] = -3;
            }
        }
    return c;
}

std::vector<std::vector<int>> reflection_generators(const CoxeterDiagram& d) {
    int n = d.rank;
    auto c = cartan_matrix(d);
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> m(n * n, 0);
        for (int j = 0; j < n; ++j) {
            m[j * n + j] = 1;
            m[j * n + i] -= c[i][j];
        }
        gens.push_back(m);
    }
    return gens;
}

std::vector<int> GroupTable::matrix(std::size_t w) const {
    const std::size_t sz = static_cast<std::size_t>(rank_) * rank_;
    return std::vector<int>(mats_.begin() + w * sz, mats_.begin() + (w + 1) * sz);
}

std::size_t GroupTable::longest() const {
    return static_cast<std::size_t>(std::max_element(lengths_.begin(), lengths_.end()) - lengths_.begin());
}

GroupTable enumerate_group(const CoxeterDiagram& d, std::uint64_t cap) {
    const std::uint64_t order = group_order(d.family, d.rank);
    if (order > cap)
        throw CapExceeded("group " + d.name() + " has order " + std::to_string(order) + ", cap is " +
                              std::to_string(cap),
                          order);
    const int n = d.rank;
    const int sz = n * n;
    std::vector<std::vector<std::int8_t>> gens;
    for (const auto& g : reflection_generators(d)) gens.emplace_back(g.begin(), g.end());

    GroupTable t;
    t.rank_ = n;
    t.mats_.reserve(order * sz);
    t.lengths_.reserve(order);
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(order * 2);

    std::vector<std::int8_t> id(sz, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    t.mats_.insert(t.mats_.end(), id.begin(), id.end());
    t.lengths_.push_back(0);
    index.emplace(key_of(id.data(), sz), 0);

    std::vector<std::int8_t> buf(sz);
    t.right_.reserve(order * n);
    for (std::size_t w = 0; w < t.lengths_.size(); ++w) {
        for (int s = 0; s < n; ++s) {
            mat_mul(&t.mats_[w * sz], gens[s].data(), buf.data(), n);
            auto key = key_of(buf.data(), sz);
            auto it = index.find(key);
            std::uint32_t idx;
            if (it == index.end()) {
                idx = static_cast<std::uint32_t>(t.lengths_.size());
                index.emplace(std::move(key), idx);
                t.mats_.insert(t.mats_.end(), buf.begin(), buf.end());
                t.lengths_.push_back(t.lengths_[w] + 1);
            } else {
                idx = it->second;
            }
            t.right_.push_back(idx);
        }
    }
    t.left_.resize(t.lengths_.size() * n);
    for (std::size_t w = 0; w < t.lengths_.size(); ++w)
        for (int s = 0; s < n; ++s) {
            mat_mul(gens[s].data(), &t.mats_[w * sz], buf.data(), n);
            t.left_[w * n + s] = index.at(key_of(buf.data(), sz));
        }
    return t;
}

std::uint64_t compute_r(const CoxeterDiagram& d, const NodeSet& g) {
    return group_order(d.family, d.rank) / parabolic_order(d, g);
}

std::size_t minimal_coset_rep(const GroupTable& t, std::size_t w, const NodeSet& g) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s : g) {
            std::size_t ws = t.right(w, s);
            if (t.length(ws) < t.length(w)) {
                w = ws;
                moved = true;
            }
        }
    }
    return w;
}

CosetChain coset_chain(const GroupTable& t, const NodeSet& g) {
    CosetChain chain;
    for (std::size_t w = 0; w < t.size(); ++w) {
        bool minimal = true;
        for (int s : g)
            if (t.length(t.right(w, s)) < t.length(w)) {
                minimal = false;
                break;
            }
        if (minimal) chain.reps.push_back(w);
    }
    std::stable_sort(chain.reps.begin(), chain.reps.end(),
                     [&](std::size_t a, std::size_t b) { return t.length(a) > t.length(b); });
    for (std::size_t i = 0; i < chain.reps.size(); ++i) {
        chain.lengths.push_back(t.length(chain.reps[i]));
        if (i && chain.lengths[i] == chain.lengths[i - 1])
            throw PreconditionError("coset representative lengths are not pairwise distinct (length " +
                                    std::to_string(chain.lengths[i]) + " repeats)");
    }
    return chain;
}

ChainX compute_chain_X(const GroupTable& t, const NodeSet& g_in, const NodeSet& h_in) {
    NodeSet g = normalize(g_in), h = normalize(h_in);
    CosetChain chain = coset_chain(t, g);
    std::unordered_map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < chain.reps.size(); ++i) pos[chain.reps[i]] = i;

    std::vector<std::size_t> parent(chain.r());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < chain.r(); ++i)
        for (int s : h) {
            std::size_t j = pos.at(minimal_coset_rep(t, t.left(s, chain.reps[i]), g));
            std::size_t a = find(i), b = find(j);
            // keep the smaller position (longer representative) as root
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    ChainX out;
    out.r = chain.r();
    for (std::size_t i = 1; i < chain.r(); ++i)
        if (find(i) == i) out.X.push_back(static_cast<int>(i + 1));
    return out;
}

ChainX compute_chain_X(const CoxeterDiagram& d, const NodeSet& g, const NodeSet& h, std::uint64_t cap) {
    check_nodes(d, g, "g");
    check_nodes(d, h, "h");
    GroupTable t = enumerate_group(d, cap);
    return compute_chain_X(t, g, h);
}

TripleSpec triple_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("rank"))
        throw PreconditionError("triple JSON needs \"family\" and \"rank\"");
    TripleSpec t;
    t.diagram = build_diagram(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>());
    if (j.contains("g")) t.g = normalize(j.at("g").get<std::vector<int>>());
    if (j.contains("h")) t.h = normalize(j.at("h").get<std::vector<int>>());
    check_nodes(t.diagram, t.g, "g");
    check_nodes(t.diagram, t.h, "h");
    return t;
}

nlohmann::json triple_to_json(const TripleSpec& t) {
    return {{"family", std::string(1, family_char(t.diagram.family))},
            {"rank", t.diagram.rank},
            {"g", t.g},
            {"h", t.h}};
}

}  // namespace rtl
