#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rtl {

struct Arrow {
    std::string id;
    int src;
    int tgt;
};

/// Finite quiver; vertices and arrows are addressed by their position.
class Quiver {
public:
    int add_vertex(const std::string& name);
    int add_arrow(const std::string& id, int src, int tgt);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::string& vertex(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& name) const;  // throws PreconditionError
    int arrow_index(const std::string& id) const;     // throws PreconditionError
    bool has_vertex(const std::string& name) const { return vindex_.count(name) != 0; }
    bool has_arrow(const std::string& id) const { return aindex_.count(id) != 0; }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vindex_;
    std::unordered_map<std::string, int> aindex_;
};

/// Undirected multigraph; an edge (v,v) is a loop.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
};

Graph underlying_graph(const Quiver& q);
std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
bool is_connected(const Graph& g);

struct GraphClass {
    enum class Kind { Dynkin, ExtendedDynkin, Neither };
    Kind kind = Kind::Neither;
    char family = '?';  // A, D, E for the first two kinds
    int rank = 0;       // Dynkin: vertex count; extended: vertex count - 1
    std::vector<int> vertices;
    std::string name() const;  // "A3", "~D4", "neither"
};

/// Shape-based classification of a connected graph.
GraphClass recognize_connected(const Graph& g);
/// One entry per connected component, ordered by smallest vertex.
std::vector<GraphClass> recognize_graph(const Graph& g);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct FormClass {
    Definiteness kind;
    int corank;  // dimension of the radical when semidefinite
};

/// Classifies q(d) = sum d_v^2 - sum_edges d_i d_j by exact symmetric elimination.
FormClass form_definiteness(const Graph& g);

/// All connected simple graphs on exactly n vertices (n <= 8), one per isomorphism class.
std::vector<Graph> connected_simple_graphs(int n);

/// q(d) = sum d_v^2 - sum_arrows d_s d_t + sum_{i,j} r(i,j) d_i d_j. An empty r means zero.
long long tits_form(const Quiver& q, const std::vector<std::vector<long long>>& r, const std::vector<long long>& d);

}  // namespace rtl
