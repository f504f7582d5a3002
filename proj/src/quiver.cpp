#include "rtl/quiver.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "rtl/common.hpp"

namespace rtl {

int Quiver::add_vertex(const std::string& name) {
    if (vindex_.count(name)) throw PreconditionError("duplicate vertex '" + name + "'");
    vindex_[name] = static_cast<int>(vertices_.size());
    vertices_.push_back(name);
    return vindex_[name];
}

int Quiver::add_arrow(const std::string& id, int src, int tgt) {
    if (aindex_.count(id)) throw PreconditionError("duplicate arrow id '" + id + "'");
    int n = static_cast<int>(vertices_.size());
    if (src < 0 || src >= n || tgt < 0 || tgt >= n)
        throw PreconditionError("arrow '" + id + "' has an endpoint outside the vertex set");
    aindex_[id] = static_cast<int>(arrows_.size());
    arrows_.push_back({id, src, tgt});
    return aindex_[id];
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) throw PreconditionError("unknown vertex '" + name + "'");
    return it->second;
}

int Quiver::arrow_index(const std::string& id) const {
    auto it = aindex_.find(id);
    if (it == aindex_.end()) throw PreconditionError("unknown arrow '" + id + "'");
    return it->second;
}

Graph underlying_graph(const Quiver& q) {
    Graph g;
    g.n = static_cast<int>(q.num_vertices());
    g.labels = q.vertices();
    for (const auto& a : q.arrows()) g.edges.emplace_back(std::min(a.src, a.tgt), std::max(a.src, a.tgt));
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < g.n; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, vs] : by_root) out.push_back(vs);
    std::sort(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.n, -1);
    Graph s;
    s.n = static_cast<int>(vertices.size());
    for (int i = 0; i < s.n; ++i) {
        local[vertices[i]] = i;
        if (!g.labels.empty()) s.labels.push_back(g.labels[vertices[i]]);
    }
    for (auto [u, v] : g.edges)
        if (local[u] >= 0 && local[v] >= 0) s.edges.emplace_back(local[u], local[v]);
    return s;
}

bool is_connected(const Graph& g) { return g.n > 0 && connected_components(g).size() == 1; }

std::string GraphClass::name() const {
    switch (kind) {
        case Kind::Dynkin: return std::string(1, family) + std::to_string(rank);
        case Kind::ExtendedDynkin: return "~" + std::string(1, family) + std::to_string(rank);
        case Kind::Neither: break;
    }
    return "neither";
}

namespace {

GraphClass make(GraphClass::Kind k, char f, int rank) {
    GraphClass c;
    c.kind = k;
    c.family = f;
    c.rank = rank;
    return c;
}

GraphClass classify_shape(const Graph& g) {
    using K = GraphClass::Kind;
    const int n = g.n;
    int loops = 0;
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : g.edges) {
        if (u == v) ++loops;
        else ++mult[{std::min(u, v), std::max(u, v)}];
    }
    if (loops > 0) {
        if (n == 1 && loops == 1 && mult.empty()) return make(K::ExtendedDynkin, 'A', 0);
        return make(K::Neither, '?', 0);
    }
    for (auto& [e, m] : mult)
        if (m > 1) {
            if (n == 2 && m == 2) return make(K::ExtendedDynkin, 'A', 1);
            return make(K::Neither, '?', 0);
        }
    const int e = static_cast<int>(mult.size());
    std::vector<std::vector<int>> adj(n);
    for (auto& [uv, m] : mult) {
        adj[uv.first].push_back(uv.second);
        adj[uv.second].push_back(uv.first);
    }
    if (e == n) {
        for (int v = 0; v < n; ++v)
            if (adj[v].size() != 2) return make(K::Neither, '?', 0);
        return make(K::ExtendedDynkin, 'A', n - 1);
    }
    if (e > n) return make(K::Neither, '?', 0);
    // a tree
    std::vector<int> branches;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() >= 5) return make(K::Neither, '?', 0);
        if (adj[v].size() >= 3) branches.push_back(v);
    }
    if (branches.empty()) return make(K::Dynkin, 'A', n);
    if (branches.size() == 1 && adj[branches[0]].size() == 4)
        return n == 5 ? make(K::ExtendedDynkin, 'D', 4) : make(K::Neither, '?', 0);
    auto leaves_next_to = [&](int v) {
        int c = 0;
        for (int u : adj[v]) c += adj[u].size() == 1;
        return c;
    };
    if (branches.size() == 2) {
        if (adj[branches[0]].size() == 3 && adj[branches[1]].size() == 3 && leaves_next_to(branches[0]) == 2 &&
            leaves_next_to(branches[1]) == 2)
            return make(K::ExtendedDynkin, 'D', n - 1);
        return make(K::Neither, '?', 0);
    }
    if (branches.size() > 2) return make(K::Neither, '?', 0);
    // one trivalent node: arms p <= q <= r counted in vertices
    int b = branches[0];
    std::vector<int> arms;
    for (int u : adj[b]) {
        int len = 1, prev = b, cur = u;
        while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const int p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return make(K::Dynkin, 'D', n);
    if (p == 1 && q == 2 && r <= 4) return make(K::Dynkin, 'E', n);
    if (p == 2 && q == 2 && r == 2) return make(K::ExtendedDynkin, 'E', 6);
    if (p == 1 && q == 3 && r == 3) return make(K::ExtendedDynkin, 'E', 7);
    if (p == 1 && q == 2 && r == 5) return make(K::ExtendedDynkin, 'E', 8);
    return make(K::Neither, '?', 0);
}

}  // namespace

GraphClass recognize_connected(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("recognize_connected: graph is not connected");
    GraphClass c = classify_shape(g);
    for (int v = 0; v < g.n; ++v) c.vertices.push_back(v);
    return c;
}

std::vector<GraphClass> recognize_graph(const Graph& g) {
    std::vector<GraphClass> out;
    for (const auto& comp : connected_components(g)) {
        GraphClass c = classify_shape(induced_subgraph(g, comp));
        c.vertices = comp;
        out.push_back(c);
    }
    return out;
}

FormClass form_definiteness(const Graph& g) {
    const int n = g.n;
    // twice the form: 2 - 2*loops on the diagonal, minus multiplicity off it
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = 2;
    for (auto [u, v] : g.edges) {
        if (u == v) {
            m[u][u] -= 2;
        } else {
            m[u][v] -= 1;
            m[v][u] -= 1;
        }
    }
    int corank = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] < 0) return {Definiteness::Indefinite, 0};
        if (m[k][k] == 0) {
            for (int j = k + 1; j < n; ++j)
                if (m[k][j] != 0) return {Definiteness::Indefinite, 0};
            ++corank;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return {corank == 0 ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite, corank};
}

namespace {

// Colour refinement; colours are ranks of (colour, sorted neighbour colours), so they are isomorphism invariant.
std::vector<int> refine_colours(const std::vector<std::uint32_t>& adj, int n) {
    std::vector<int> col(n, 0);
    int classes = 1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = col[v];
            for (int u = 0; u < n; ++u)
                if (adj[v] >> u & 1) sig[v].second.push_back(col[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        int now = static_cast<int>(sorted.size());
        if (now == classes) return col;
        classes = now;
    }
}

std::uint64_t code_under(const std::vector<std::uint32_t>& adj, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = code << 1 | (adj[order[i]] >> order[j] & 1);
    return code;
}

std::uint64_t canonical_code(const std::vector<std::uint32_t>& adj, int n) {
    std::vector<int> col = refine_colours(adj, n);
    std::vector<std::vector<int>> cells(*std::max_element(col.begin(), col.end()) + 1);
    for (int v = 0; v < n; ++v) cells[col[v]].push_back(v);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> order;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            best = std::min(best, code_under(adj, order));
            return;
        }
        std::vector<int> cell = cells[c];
        do {
            order.insert(order.end(), cell.begin(), cell.end());
            rec(c + 1);
            order.resize(order.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return best;
}

}  // namespace

std::vector<Graph> connected_simple_graphs(int n) {
    if (n < 1 || n > 8) throw PreconditionError("connected_simple_graphs supports 1 <= n <= 8");
    // every connected graph arises from a connected graph on one vertex fewer by adding a non-cut vertex
    std::vector<std::vector<std::uint32_t>> level{{0u}};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& adj : level) {
            for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
                std::vector<std::uint32_t> a = adj;
                a.push_back(mask);
                for (int u = 0; u < k - 1; ++u)
                    if (mask >> u & 1) a[u] |= 1u << (k - 1);
                if (seen.insert(canonical_code(a, k)).second) next.push_back(a);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& adj : level) {
        Graph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i] >> j & 1) g.edges.emplace_back(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

long long tits_form(const Quiver& q, const std::vector<std::vector<long long>>& r, const std::vector<long long>& d) {
    const std::size_t n = q.num_vertices();
    if (d.size() != n)
        throw PreconditionError("dimension vector has " + std::to_string(d.size()) + " entries, quiver has " +
                                std::to_string(n) + " vertices");
    for (long long x : d)
        if (x < 0) throw PreconditionError("dimension vector has a negative entry");
    if (!r.empty() && r.size() != n) throw PreconditionError("relation count matrix has the wrong size");
    long long val = 0;
    for (std::size_t v = 0; v < n; ++v) val += d[v] * d[v];
    for (const auto& a : q.arrows()) val -= d[a.src] * d[a.tgt];
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].size() != n) throw PreconditionError("relation count matrix has the wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            if (r[i][j] < 0) throw PreconditionError("relation count matrix has a negative entry");
            val += r[i][j] * d[i] * d[j];
        }
    }
    return val;
}

}  // namespace rtl
