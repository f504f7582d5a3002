#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "rtl/common.hpp"

namespace rtl {

enum class Family { A, B, C, D, E, F, G };

char family_char(Family f);
Family parse_family(const std::string& s);

/**
 * @brief Labelled Dynkin diagram with the fixed node numbering.
 *
 * A_n: path 1-..-n. B_n/C_n: path with m(n-1,n)=4 (same bonds, different label).
 * D_n: edges i-(i+1) for i <= n-2 plus (n-2)-n. E_n: chain 1-3-4-..-n with 2 on 4.
 * F_4: path with m(2,3)=4. G_2: one bond m=6.
 */
struct CoxeterDiagram {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> m;  // rank*rank bond orders, 0-based; diagonal 1, no edge 2

    int bond(int i, int j) const { return m[(i - 1) * rank + (j - 1)]; }
    std::string name() const;
};

struct TripleSpec {
    CoxeterDiagram diagram;
    NodeSet g;
    NodeSet h;
};

struct Component {
    Family family;
    int rank;
    NodeSet nodes;
};

CoxeterDiagram build_diagram(Family family, int rank);

/// Connected components of the induced subdiagram, sorted by smallest node.
std::vector<Component> induced_type(const CoxeterDiagram& d, const NodeSet& subset);
std::string type_string(const std::vector<Component>& comps);

/// Bond-preserving node permutations; perm[i-1] is the image of node i. Identity first.
std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d);
NodeSet apply_perm(const std::vector<int>& perm, const NodeSet& s);

std::uint64_t group_order(Family family, int rank);
std::uint64_t parabolic_order(const CoxeterDiagram& d, const NodeSet& subset);

/**
 * @brief W realised by integer reflection matrices in the simple-root basis.
 *
 * Elements are indexed in BFS order from the identity (index 0) with generators
 * tried in increasing order, so indices and lengths are reproducible.
 */
class GroupTable {
public:
    int rank() const { return rank_; }
    std::size_t size() const { return lengths_.size(); }
    int length(std::size_t w) const { return lengths_[w]; }
    /// Column-major matrix entries of element w (rank*rank ints).
    std::vector<int> matrix(std::size_t w) const;
    std::size_t right(std::size_t w, int s) const { return right_[w * rank_ + (s - 1)]; }
    std::size_t left(int s, std::size_t w) const { return left_[w * rank_ + (s - 1)]; }
    std::size_t longest() const;

    friend GroupTable enumerate_group(const CoxeterDiagram& d, std::uint64_t cap);

private:
    int rank_ = 0;
    std::vector<std::int8_t> mats_;
    std::vector<int> lengths_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> left_;
};

/// Reflection generators s_i(alpha_j) = alpha_j - C_ij alpha_i, column-major.
std::vector<std::vector<int>> reflection_generators(const CoxeterDiagram& d);
std::vector<std::vector<int>> cartan_matrix(const CoxeterDiagram& d);

GroupTable enumerate_group(const CoxeterDiagram& d, std::uint64_t cap = 200000);

std::uint64_t compute_r(const CoxeterDiagram& d, const NodeSet& g);

/// Minimal left-coset representative of wG (greedy right descent).
std::size_t minimal_coset_rep(const GroupTable& t, std::size_t w, const NodeSet& g);

struct CosetChain {
    std::vector<std::size_t> reps;  // decreasing length; reps[0] is the longest
    std::vector<int> lengths;
    std::size_t r() const { return reps.size(); }
};

/// Throws PreconditionError if representative lengths are not pairwise distinct.
CosetChain coset_chain(const GroupTable& t, const NodeSet& g);

struct ChainX {
    std::uint64_t r = 0;
    NodeSet X;
};

ChainX compute_chain_X(const GroupTable& t, const NodeSet& g, const NodeSet& h);
ChainX compute_chain_X(const CoxeterDiagram& d, const NodeSet& g, const NodeSet& h,
                       std::uint64_t cap = 200000);

TripleSpec triple_from_json(const nlohmann::json& j);
nlohmann::json triple_to_json(const TripleSpec& t);

}  // namespace rtl
