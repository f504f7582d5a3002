#include "rtl/bound_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "rtl/common.hpp"

namespace rtl {

namespace {

constexpr std::size_t kMaxBasis = 200000;

struct WordParser {
    const Quiver& q;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool ident_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
    }
    int power() {
        skip();
        if (pos >= s.size() || s[pos] != '^') return 1;
        ++pos;
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw PreconditionError("word '" + s + "': missing exponent");
        return std::stoi(s.substr(start, pos - start));
    }
    // display order, left to right
    std::vector<int> seq() {
        std::vector<int> out;
        while (true) {
            skip();
            if (pos >= s.size() || s[pos] == ')') return out;
            std::vector<int> item;
            if (s[pos] == '(') {
                ++pos;
                item = seq();
                if (pos >= s.size() || s[pos] != ')') throw PreconditionError("word '" + s + "': unbalanced '('");
                ++pos;
            } else {
                std::size_t start = pos;
                while (pos < s.size() && ident_char(s[pos]) && s[pos] != '^') ++pos;
                if (start == pos) throw PreconditionError("word '" + s + "': unexpected '" + s[pos] + "'");
                item.push_back(q.arrow_index(s.substr(start, pos - start)));
            }
            int k = power();
            for (int i = 0; i < k; ++i) out.insert(out.end(), item.begin(), item.end());
        }
    }
};

void check_path(const Quiver& q, const Path& p) {
    if (p.empty()) throw PreconditionError("relation term with an empty path");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (q.arrow(p[i]).tgt != q.arrow(p[i + 1]).src)
            throw PreconditionError("path '" + display_path(q, p) + "' does not compose");
}

int path_weight(const Path& p, const std::vector<int>& w) {
    int s = 0;
    for (int a : p) s += w[a];
    return s;
}

bool homogeneous(const Presentation& p, const std::vector<int>& w) {
    for (const auto& r : p.relations)
        for (const auto& t : r.terms)
            if (path_weight(t.path, w) != path_weight(r.terms.front().path, w)) return false;
    return true;
}

SparseVec apply_arrow(const std::vector<std::map<int, SparseVec>>& action, int arrow, const SparseVec& v) {
    SparseVec out;
    for (const auto& [m, c] : v) {
        auto it = action[m].find(arrow);
        if (it != action[m].end()) add_scaled(out, it->second, c);
    }
    return out;
}

}  // namespace

Path parse_word(const Quiver& q, const std::string& word) {
    WordParser wp{q, word};
    std::vector<int> disp = wp.seq();
    if (wp.pos != word.size()) throw PreconditionError("word '" + word + "': unbalanced ')'");
    return Path(disp.rbegin(), disp.rend());
}

std::string display_path(const Quiver& q, const Path& p, int vertex) {
    if (p.empty()) return "e_" + (vertex >= 0 ? q.vertex(vertex) : std::string("?"));
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += q.arrow(*it).id;
    }
    return out;
}

std::string display_relation(const Quiver& q, const Relation& r) {
    std::string out;
    for (const auto& t : r.terms) {
        const bool neg = t.c < 0;
        const mpq_class mag = neg ? mpq_class(-t.c) : t.c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != 1) out += mag.get_str() + " ";
        out += display_path(q, t.path);
    }
    return out;
}

Relation make_relation(const Quiver& q, const std::vector<std::pair<mpq_class, std::string>>& terms) {
    std::map<Path, mpq_class> merged;
    for (const auto& [c, w] : terms) {
        Path p = parse_word(q, w);
        check_path(q, p);
        merged[p] += c;
    }
    Relation r;
    for (auto& [p, c] : merged)
        if (c != 0) r.terms.push_back({c, p});
    if (r.terms.empty()) throw PreconditionError("relation has no nonzero terms");
    Presentation tmp{q, {r}};
    validate(tmp);
    return r;
}

void validate(const Presentation& p) {
    const Quiver& q = p.quiver;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        if (r.terms.empty()) throw PreconditionError("relation " + std::to_string(i) + " has no terms");
        for (const auto& t : r.terms) {
            if (t.c == 0) throw PreconditionError("relation " + std::to_string(i) + " has a zero coefficient");
            for (int a : t.path)
                if (a < 0 || a >= static_cast<int>(q.num_arrows()))
                    throw PreconditionError("relation " + std::to_string(i) + " uses an unknown arrow");
            check_path(q, t.path);
            if (p.source(t.path) != p.source(r.terms.front().path) ||
                p.target(t.path) != p.target(r.terms.front().path))
                throw PreconditionError("relation " + std::to_string(i) + " has terms that are not parallel");
        }
    }
}

void add_scaled(SparseVec& acc, const SparseVec& v, const mpq_class& c) {
    if (c == 0 || v.empty()) return;
    SparseVec out;
    out.reserve(acc.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < v.size()) {
        if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || v[j].first < acc[i].first) {
            out.emplace_back(v[j].first, c * v[j].second);
            ++j;
        } else {
            mpq_class s = acc[i].second + c * v[j].second;
            if (s != 0) out.emplace_back(acc[i].first, s);
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

std::vector<int> rref(std::vector<std::vector<mpq_class>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        mpq_class inv = 1 / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            mpq_class f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

SparseVec AlgebraTable::product(int i, int j) const {
    auto it = products_.find({i, j});
    return it == products_.end() ? SparseVec{} : it->second;
}

SparseVec AlgebraTable::multiply(const SparseVec& u, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) {
            auto it = products_.find({i, j});
            if (it != products_.end()) add_scaled(out, it->second, a * b);
        }
    return out;
}

int AlgebraTable::idempotent(int v) const {
    if (v < 0 || v >= static_cast<int>(idem_.size())) throw PreconditionError("vertex index out of range");
    return idem_[v];
}

std::vector<std::vector<int>> AlgebraTable::cartan() const {
    std::vector<std::vector<int>> c(vertices.size(), std::vector<int>(vertices.size(), 0));
    for (const auto& b : basis) ++c[b.tgt][b.src];
    return c;
}

SparseVec AlgebraTable::path_vector(const Path& p, int src) const {
    if (!has_path_action()) throw PreconditionError("table has no path action (built by truncation)");
    if (!p.empty()) src = quiver_.arrow(p.front()).src;
    SparseVec v{{idempotent(src), mpq_class(1)}};
    for (int a : p) {
        if (quiver_.arrow(a).src != src) return {};
        v = apply_arrow(action_, a, v);
        src = quiver_.arrow(a).tgt;
    }
    return v;
}

SparseVec AlgebraTable::relation_vector(const Relation& r) const {
    SparseVec out;
    for (const auto& t : r.terms) add_scaled(out, path_vector(t.path, -1), t.c);
    return out;
}

std::string AlgebraTable::display(int i) const {
    const auto& b = basis[i];
    if (b.path.empty()) return "e_" + vertices[b.src];
    return display_path(quiver_, b.path);
}

std::optional<std::vector<int>> find_positive_grading(const Presentation& p) {
    const int na = static_cast<int>(p.quiver.num_arrows());
    std::vector<int> ones(na, 1);
    if (homogeneous(p, ones)) return ones;
    // homogeneity constraints: arrow count differences between terms
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& r : p.relations)
        for (std::size_t k = 1; k < r.terms.size(); ++k) {
            std::vector<mpq_class> row(na, 0);
            for (int a : r.terms[k].path) row[a] += 1;
            for (int a : r.terms[0].path) row[a] -= 1;
            rows.push_back(row);
        }
    std::vector<int> pivots = rref(rows);
    std::vector<int> free;
    for (int a = 0; a < na; ++a)
        if (!std::count(pivots.begin(), pivots.end(), a)) free.push_back(a);
    // free weights in increasing bound, pivot weights solved
    std::uint64_t budget = 2000000;
    for (int bound = 1; bound <= 12; ++bound) {
        std::vector<int> val(free.size(), 1);
        while (true) {
            if (budget-- == 0) return std::nullopt;
            if (std::any_of(val.begin(), val.end(), [&](int x) { return x == bound; }) || bound == 1) {
                std::vector<int> w(na, 0);
                for (std::size_t f = 0; f < free.size(); ++f) w[free[f]] = val[f];
                bool ok = true;
                for (std::size_t r = 0; r < pivots.size() && ok; ++r) {
                    mpq_class s = 0;
                    for (std::size_t f = 0; f < free.size(); ++f) s -= rows[r][free[f]] * val[f];
                    if (s.get_den() != 1 || s <= 0) ok = false;
                    else w[pivots[r]] = static_cast<int>(s.get_num().get_si());
                }
                if (ok && homogeneous(p, w)) return w;
            }
            std::size_t k = 0;
            while (k < val.size() && val[k] == bound) val[k++] = 1;
            if (k == val.size()) break;
            ++val[k];
        }
    }
    return std::nullopt;
}

AlgebraTable path_basis(const Presentation& p, std::optional<std::vector<int>> weights, int degree_cap) {
    validate(p);
    if (degree_cap < 1) throw PreconditionError("degree cap must be at least 1");
    const Quiver& q = p.quiver;
    const int nv = static_cast<int>(q.num_vertices());
    const int na = static_cast<int>(q.num_arrows());
    if (!weights) weights = find_positive_grading(p);
    if (!weights)
        throw PreconditionError("no positive grading makes the relations homogeneous; pass explicit weights");
    const std::vector<int>& w = *weights;
    if (static_cast<int>(w.size()) != na) throw PreconditionError("weights must have one entry per arrow");
    for (int x : w)
        if (x <= 0) throw PreconditionError("weights must be positive");
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        for (const auto& t : r.terms)
            if (path_weight(t.path, w) != path_weight(r.terms.front().path, w))
                throw PreconditionError("relation " + std::to_string(i) + " is not homogeneous for the weights");
    }
    const int maxw = w.empty() ? 1 : *std::max_element(w.begin(), w.end());

    AlgebraTable t;
    t.vertices = q.vertices();
    t.quiver_ = q;
    std::vector<std::vector<int>> by_degree(1);
    for (int v = 0; v < nv; ++v) {
        t.basis.push_back({v, v, {}});
        t.idem_.push_back(v);
        by_degree[0].push_back(v);
    }
    t.action_.resize(nv);
    std::vector<int> rel_weight;
    for (const auto& r : p.relations) rel_weight.push_back(path_weight(r.terms.front().path, w));

    int zero_run = 0;
    for (int d = 1; zero_run < maxw; ++d) {
        by_degree.emplace_back();
        struct Mono {
            int arrow;
            int m;
            Path path;
        };
        std::map<std::pair<int, int>, std::vector<Mono>> buckets;
        for (int a = 0; a < na; ++a) {
            if (w[a] > d) continue;
            for (int m : by_degree[d - w[a]])
                if (t.basis[m].tgt == q.arrow(a).src) {
                    Path path = t.basis[m].path;
                    path.push_back(a);
                    buckets[{t.basis[m].src, q.arrow(a).tgt}].push_back({a, m, path});
                }
        }
        if (buckets.empty()) {
            ++zero_run;
            continue;
        }
        // column order: longer paths first, then lexicographically larger in display order
        std::map<std::pair<int, int>, int> column;  // (arrow, m) -> column within its bucket
        for (auto& [key, monos] : buckets) {
            auto disp = [&](const Path& pa) {
                std::vector<std::string> s;
                for (auto it = pa.rbegin(); it != pa.rend(); ++it) s.push_back(q.arrow(*it).id);
                return s;
            };
            std::sort(monos.begin(), monos.end(), [&](const Mono& x, const Mono& y) {
                if (x.path.size() != y.path.size()) return x.path.size() > y.path.size();
                return disp(x.path) > disp(y.path);
            });
            for (std::size_t c = 0; c < monos.size(); ++c) column[{monos[c].arrow, monos[c].m}] = static_cast<int>(c);
        }
        std::map<std::pair<int, int>, std::vector<std::vector<mpq_class>>> gens;
        for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
            const auto& r = p.relations[ri];
            if (rel_weight[ri] > d) continue;
            int rs = p.source(r.terms.front().path), rt = p.target(r.terms.front().path);
            for (int qb : by_degree[d - rel_weight[ri]]) {
                if (t.basis[qb].tgt != rs) continue;
                std::pair<int, int> key{t.basis[qb].src, rt};
                auto bit = buckets.find(key);
                if (bit == buckets.end()) continue;
                std::vector<mpq_class> row(bit->second.size(), 0);
                bool nonzero = false;
                for (const auto& term : r.terms) {
                    SparseVec v{{qb, mpq_class(1)}};
                    for (std::size_t k = 0; k + 1 < term.path.size(); ++k) v = apply_arrow(t.action_, term.path[k], v);
                    for (const auto& [m, c] : v) {
                        row[column.at({term.path.back(), m})] += term.c * c;
                        nonzero = true;
                    }
                }
                if (nonzero) gens[key].push_back(std::move(row));
            }
        }
        bool any = false;
        for (auto& [key, monos] : buckets) {
            std::vector<std::vector<mpq_class>> rows = std::move(gens[key]);
            std::vector<int> pivots = rref(rows);
            std::vector<int> pivot_row(monos.size(), -1);
            for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
            std::vector<int> new_index(monos.size(), -1);
            for (std::size_t c = 0; c < monos.size(); ++c) {
                if (pivot_row[c] >= 0) continue;
                new_index[c] = static_cast<int>(t.basis.size());
                t.basis.push_back({key.first, key.second, monos[c].path});
                t.action_.emplace_back();
                by_degree[d].push_back(new_index[c]);
                any = true;
            }
            for (std::size_t c = 0; c < monos.size(); ++c) {
                SparseVec img;
                if (pivot_row[c] < 0) {
                    img.emplace_back(new_index[c], mpq_class(1));
                } else {
                    const auto& row = rows[pivot_row[c]];
                    for (std::size_t j = 0; j < monos.size(); ++j)
                        if (j != c && row[j] != 0) img.emplace_back(new_index[j], -row[j]);
                    std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                }
                t.action_[monos[c].m][monos[c].arrow] = std::move(img);
            }
        }
        if (t.basis.size() > kMaxBasis)
            throw CapExceeded("path basis exceeds " + std::to_string(kMaxBasis) + " elements", t.basis.size());
        if (any && d > degree_cap) {
            std::string msg = "algebra is nonzero beyond degree cap " + std::to_string(degree_cap) + "; surviving:";
            for (std::size_t i = 0; i < by_degree[d].size() && i < 8; ++i)
                msg += " [" + display_path(q, t.basis[by_degree[d][i]].path) + "]";
            throw CapExceeded(msg, static_cast<std::uint64_t>(d));
        }
        zero_run = any ? 0 : zero_run + 1;
    }

    const int dim = static_cast<int>(t.basis.size());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (t.basis[i].src != t.basis[j].tgt) continue;
            SparseVec v{{j, mpq_class(1)}};
            for (int a : t.basis[i].path) v = apply_arrow(t.action_, a, v);
            if (!v.empty()) t.products_[{i, j}] = std::move(v);
        }
    return t;
}

AlgebraTable idempotent_truncation(const AlgebraTable& a, const std::vector<int>& vertex_subset) {
    if (vertex_subset.empty()) throw PreconditionError("idempotent truncation needs a nonempty vertex subset");
    const int nv = static_cast<int>(a.vertices.size());
    std::vector<int> local(nv, -1);
    for (std::size_t i = 0; i < vertex_subset.size(); ++i) {
        int v = vertex_subset[i];
        if (v < 0 || v >= nv) throw PreconditionError("truncation vertex out of range");
        if (local[v] >= 0) throw PreconditionError("truncation vertex repeated");
        local[v] = static_cast<int>(i);
    }
    AlgebraTable t;
    for (int v : vertex_subset) t.vertices.push_back(a.vertices[v]);
    t.quiver_ = a.quiver_;
    std::vector<int> remap(a.dim(), -1);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& b = a.basis[i];
        if (local[b.src] < 0 || local[b.tgt] < 0) continue;
        remap[i] = static_cast<int>(t.basis.size());
        t.basis.push_back({local[b.src], local[b.tgt], b.path});
    }
    for (int v : vertex_subset) t.idem_.push_back(remap[a.idem_[v]]);
    for (const auto& [ij, vec] : a.products_) {
        if (remap[ij.first] < 0 || remap[ij.second] < 0) continue;
        SparseVec out;
        for (const auto& [k, c] : vec) out.emplace_back(remap[k], c);
        t.products_[{remap[ij.first], remap[ij.second]}] = std::move(out);
    }
    return t;
}

Graph separated_quiver(const Presentation& p) {
    const Quiver& q = p.quiver;
    const int n = static_cast<int>(q.num_vertices());
    Graph g;
    g.n = 2 * n;
    for (int v = 0; v < n; ++v) g.labels.push_back(q.vertex(v));
    for (int v = 0; v < n; ++v) g.labels.push_back(q.vertex(v) + "'");
    for (const auto& a : q.arrows()) g.edges.emplace_back(a.src, n + a.tgt);
    return g;
}

RadSquareType rad_square_type(const Presentation& p) {
    for (const auto& c : recognize_graph(separated_quiver(p)))
        if (c.kind != GraphClass::Kind::Dynkin) return RadSquareType::Infinite;
    return RadSquareType::Finite;
}

Presentation rad_square_zero_quotient(const Presentation& p) {
    Presentation out{p.quiver, {}};
    const auto& arrows = p.quiver.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t b = 0; b < arrows.size(); ++b)
            if (arrows[a].tgt == arrows[b].src)
                out.relations.push_back({{{mpq_class(1), {static_cast<int>(a), static_cast<int>(b)}}}});
    return out;
}

Presentation cover_window(const Presentation& p, const DegreeMap& degrees, int lo, int hi) {
    validate(p);
    const Quiver& q = p.quiver;
    const int nv = static_cast<int>(q.num_vertices());
    const int na = static_cast<int>(q.num_arrows());
    if (static_cast<int>(degrees.size()) != na) throw PreconditionError("degree map must have one entry per arrow");
    if (lo > hi) throw PreconditionError("empty cover window");
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        for (const auto& t : r.terms)
            if (path_weight(t.path, degrees) != path_weight(r.terms.front().path, degrees))
                throw PreconditionError("relation " + std::to_string(i) + " (" + display_relation(q, r) +
                                        ") is not homogeneous for the degree map");
    }
    Presentation out;
    for (int k = lo; k <= hi; ++k)
        for (int v = 0; v < nv; ++v) out.quiver.add_vertex(q.vertex(v) + "_" + std::to_string(k));
    auto vid = [&](int v, int k) { return (k - lo) * nv + v; };
    std::vector<std::vector<int>> lifted(na, std::vector<int>(hi - lo + 1, -1));
    for (int k = lo; k <= hi; ++k)
        for (int a = 0; a < na; ++a) {
            int k2 = k + degrees[a];
            if (k2 < lo || k2 > hi) continue;
            lifted[a][k - lo] = out.quiver.add_arrow(q.arrow(a).id + "_" + std::to_string(k), vid(q.arrow(a).src, k),
                                                     vid(q.arrow(a).tgt, k2));
        }
    for (const auto& r : p.relations)
        for (int k = lo; k <= hi; ++k) {
            Relation lr;
            bool inside = true;
            for (const auto& t : r.terms) {
                Path lp;
                int layer = k;
                for (int a : t.path) {
                    if (layer < lo || layer > hi || lifted[a][layer - lo] < 0) {
                        inside = false;
                        break;
                    }
                    lp.push_back(lifted[a][layer - lo]);
                    layer += degrees[a];
                }
                if (!inside) break;
                lr.terms.push_back({t.c, lp});
            }
            if (inside) out.relations.push_back(std::move(lr));
        }
    return out;
}

namespace {

bool acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (auto [s, t] : edges) {
        out[s].push_back(t);
        ++indeg[t];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int u : out[v])
            if (--indeg[u] == 0) stack.push_back(u);
    }
    return seen == n;
}

}  // namespace

std::optional<Fragment> find_wild_hereditary_fragment(const Presentation& p, int max_vertices) {
    if (max_vertices < 1) throw PreconditionError("max_vertices must be at least 1");
    validate(p);
    const Quiver& q = p.quiver;
    const int nv = static_cast<int>(q.num_vertices());
    const int na = static_cast<int>(q.num_arrows());
    // Extended by zero, a fragment representation kills every path leaving the fragment, so a
    // relation constrains it as soon as one of its terms lies inside.
    std::vector<std::vector<int>> support;  // arrows of each relation term
    for (const auto& r : p.relations)
        for (const auto& t : r.terms) {
            std::set<int> s(t.path.begin(), t.path.end());
            support.emplace_back(s.begin(), s.end());
        }
    const std::uint64_t subset_budget = 1u << 20;

    for (int k = 1; k <= std::min(max_vertices, nv); ++k) {
        std::vector<int> sel(k);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            std::vector<int> local(nv, -1);
            for (int i = 0; i < k; ++i) local[sel[i]] = i;
            std::vector<int> es;
            for (int a = 0; a < na; ++a) {
                const auto& ar = q.arrow(a);
                if (ar.src != ar.tgt && local[ar.src] >= 0 && local[ar.tgt] >= 0) es.push_back(a);
            }
            auto graph_of = [&](const std::vector<int>& arrows) {
                Graph g;
                g.n = k;
                for (int a : arrows) g.edges.emplace_back(local[q.arrow(a).src], local[q.arrow(a).tgt]);
                return g;
            };
            Graph full = graph_of(es);
            if (static_cast<int>(es.size()) >= k - 1 && is_connected(full) &&
                recognize_connected(full).kind == GraphClass::Kind::Neither) {
                const int m = static_cast<int>(es.size());
                std::vector<char> in(na, 0);
                std::uint64_t tried = 0;
                for (int removed = 0; removed <= m - (k - 1) && tried < subset_budget; ++removed) {
                    std::vector<int> drop(removed);
                    std::iota(drop.begin(), drop.end(), 0);
                    while (tried++ < subset_budget) {
                        std::vector<int> arrows;
                        std::size_t di = 0;
                        for (int i = 0; i < m; ++i) {
                            if (di < drop.size() && drop[di] == i) ++di;
                            else arrows.push_back(es[i]);
                        }
                        for (int a : arrows) in[a] = 1;
                        bool supports_relation = std::any_of(support.begin(), support.end(), [&](const auto& s) {
                            return std::all_of(s.begin(), s.end(), [&](int a) { return in[a] != 0; });
                        });
                        for (int a : arrows) in[a] = 0;
                        if (!supports_relation) {
                            Graph g = graph_of(arrows);
                            std::vector<std::pair<int, int>> directed = g.edges;
                            if (is_connected(g) && acyclic(k, directed)) {
                                GraphClass c = recognize_connected(g);
                                if (c.kind == GraphClass::Kind::Neither) {
                                    c.vertices = sel;
                                    return Fragment{sel, arrows, c};
                                }
                            }
                        }
                        // next combination of dropped positions
                        int i = removed - 1;
                        while (i >= 0 && drop[i] == m - removed + i) --i;
                        if (i < 0) break;
                        ++drop[i];
                        for (int j = i + 1; j < removed; ++j) drop[j] = drop[j - 1] + 1;
                    }
                }
            }
            int i = k - 1;
            while (i >= 0 && sel[i] == nv - k + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Quiver fragment_quiver(const Presentation& p, const Fragment& f) {
    Quiver out;
    std::vector<int> local(p.quiver.num_vertices(), -1);
    for (int v : f.vertices) local[v] = out.add_vertex(p.quiver.vertex(v));
    for (int a : f.arrows) {
        const auto& ar = p.quiver.arrow(a);
        if (local[ar.src] < 0 || local[ar.tgt] < 0) throw PreconditionError("fragment arrow leaves the fragment");
        out.add_arrow(ar.id, local[ar.src], local[ar.tgt]);
    }
    return out;
}

std::vector<std::vector<long long>> relation_count_matrix(const Presentation& p, const Fragment& f) {
    const int k = static_cast<int>(f.vertices.size());
    std::vector<int> local(p.quiver.num_vertices(), -1);
    for (int i = 0; i < k; ++i) local[f.vertices[i]] = i;
    std::set<int> arrows(f.arrows.begin(), f.arrows.end());
    std::map<std::pair<int, int>, std::vector<const Relation*>> buckets;
    for (const auto& r : p.relations) {
        bool inside = true;
        for (const auto& t : r.terms)
            for (int a : t.path) inside = inside && arrows.count(a);
        if (!inside) continue;
        int s = local[p.source(r.terms.front().path)], t = local[p.target(r.terms.front().path)];
        if (s < 0 || t < 0) continue;
        buckets[{s, t}].push_back(&r);
    }
    std::vector<std::vector<long long>> out(k, std::vector<long long>(k, 0));
    for (const auto& [key, rels] : buckets) {
        std::map<Path, int> col;
        for (const Relation* r : rels)
            for (const auto& t : r->terms) col.emplace(t.path, static_cast<int>(col.size()));
        std::vector<std::vector<mpq_class>> rows;
        for (const Relation* r : rels) {
            std::vector<mpq_class> row(col.size(), 0);
            for (const auto& t : r->terms) row[col[t.path]] += t.c;
            rows.push_back(row);
        }
        out[key.first][key.second] = static_cast<long long>(rref(rows).size());
    }
    return out;
}

}  // namespace rtl
