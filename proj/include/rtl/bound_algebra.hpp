#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtl/quiver.hpp"

namespace rtl {

/// Arrow indices in order of application (first-applied first). The displayed
/// word "a b" means a after b and is stored as {b, a}.
using Path = std::vector<int>;

struct Term {
    mpq_class c;
    Path path;
};

/// Linear combination of parallel paths that is set to zero.
struct Relation {
    std::vector<Term> terms;
};

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;

    int source(const Path& p) const { return quiver.arrow(p.front()).src; }
    int target(const Path& p) const { return quiver.arrow(p.back()).tgt; }
};

/// Parses a displayed word: space separated arrow ids, read right to left,
/// with "x^3" and "(a b)^2" powers. "a b" becomes {b, a}.
Path parse_word(const Quiver& q, const std::string& word);
/// Inverse of parse_word (no powers); the empty path at v shows as "e_v".
std::string display_path(const Quiver& q, const Path& p, int vertex = -1);

/// "c1 w1 + c2 w2 + ..." with coefficients 1 and -1 shown as signs.
std::string display_relation(const Quiver& q, const Relation& r);
/// Builds a relation from displayed words, merging equal paths. Throws
/// PreconditionError if the terms are not composable, not parallel, or cancel.
Relation make_relation(const Quiver& q, const std::vector<std::pair<mpq_class, std::string>>& terms);
/// Checks the relation invariants (composable, parallel, nonzero coefficients).
void validate(const Presentation& p);

using SparseVec = std::vector<std::pair<int, mpq_class>>;  // sorted by index, no zeros

void add_scaled(SparseVec& acc, const SparseVec& v, const mpq_class& c);

/// In-place reduced row echelon form over Q; zero rows are dropped. Returns pivot columns.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& rows);

struct BasisElement {
    int src;
    int tgt;
    Path path;  // empty: the idempotent at src
};

/// Finite-dimensional algebra with an explicit basis and structure constants.
/// product(i, j) is b_i * b_j, where b_j is applied first.
class AlgebraTable {
public:
    std::vector<std::string> vertices;
    std::vector<BasisElement> basis;

    std::size_t dim() const { return basis.size(); }
    SparseVec product(int i, int j) const;
    SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
    int idempotent(int v) const;  // basis index of e_v
    /// cartan()[w][v] = dim e_w A e_v (paths from v to w).
    std::vector<std::vector<int>> cartan() const;

    /// Only tables built by path_basis can evaluate paths of the quiver.
    bool has_path_action() const { return !action_.empty(); }
    SparseVec path_vector(const Path& p, int src) const;
    SparseVec relation_vector(const Relation& r) const;
    const Quiver* quiver() const { return has_path_action() ? &quiver_ : nullptr; }

    std::string display(int i) const;

private:
    friend AlgebraTable path_basis(const Presentation&, std::optional<std::vector<int>>, int);
    friend AlgebraTable idempotent_truncation(const AlgebraTable&, const std::vector<int>&);

    std::map<std::pair<int, int>, SparseVec> products_;  // nonzero products only
    std::vector<int> idem_;
    Quiver quiver_;
    std::vector<std::map<int, SparseVec>> action_;  // action_[m][arrow] = arrow * b_m
};

/// Positive arrow weights making every multi-term relation homogeneous: path length if that
/// works, otherwise a search with small weights. Empty if none is found.
std::optional<std::vector<int>> find_positive_grading(const Presentation& p);

/// Path basis degree by degree for a positive grading (found if not given). Throws CapExceeded
/// naming surviving paths if the algebra is nonzero in degree `degree_cap`.
AlgebraTable path_basis(const Presentation& p, std::optional<std::vector<int>> weights = std::nullopt,
                        int degree_cap = 64);

/// eAe for e the sum of the idempotents of `vertex_subset` (vertex indices).
AlgebraTable idempotent_truncation(const AlgebraTable& a, const std::vector<int>& vertex_subset);

/// Vertices V then V' (labels v and v'); edge (src(a), tgt(a)') per arrow.
Graph separated_quiver(const Presentation& p);

enum class RadSquareType { Finite, Infinite };
RadSquareType rad_square_type(const Presentation& p);

/// Same quiver, relations replaced by all paths of length two.
Presentation rad_square_zero_quotient(const Presentation& p);

using DegreeMap = std::vector<int>;  // indexed by arrow

/// Window of the Z-cover: vertex "v_k" for k in [lo, hi], arrow "a_k" from v_k to w_{k+deg a}.
/// A relation lifts at layer k when all its lifted terms stay inside the window.
Presentation cover_window(const Presentation& p, const DegreeMap& degrees, int lo, int hi);

struct Fragment {
    std::vector<int> vertices;  // indices into the presentation's quiver
    std::vector<int> arrows;
    GraphClass graph_class;
};

/// First connected loop-free acyclic arrow subset containing no term of any relation whose underlying
/// graph is Neither. Vertex subsets by size then lexicographically; within a vertex subset,
/// arrow subsets by number of removed arrows then lexicographically.
std::optional<Fragment> find_wild_hereditary_fragment(const Presentation& p, int max_vertices);

/// The fragment's quiver (vertex order of fragment.vertices).
Quiver fragment_quiver(const Presentation& p, const Fragment& f);

/// r(i, j) = number of independent relations from fragment vertex i to j whose terms use
/// only fragment arrows.
std::vector<std::vector<long long>> relation_count_matrix(const Presentation& p, const Fragment& f);

}  // namespace rtl
