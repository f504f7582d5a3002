#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rtl/bound_algebra.hpp"
#include "rtl/common.hpp"

namespace rtl {

/// GF(q) for q in {2, 3, 4, 5}; elements are 0..q-1. For q = 4, element 2 is a root of
/// t^2 + t + 1 and 3 = 2 + 1.
class Field {
public:
    static const Field& get(int q);
    int q() const { return q_; }
    int characteristic() const { return p_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;  // throws on 0
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
    std::uint8_t generator() const { return gen_; }  // of the multiplicative group
    /// Image of a rational number; throws if the denominator vanishes in GF(q).
    std::uint8_t from_rational(const mpq_class& c) const;

private:
    explicit Field(int q);
    int q_, p_;
    std::uint8_t gen_ = 1;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static Matrix identity(int n);
    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y);
Matrix mat_add(const Field& f, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Field& f, std::uint8_t c, const Matrix& x);
int mat_rank(const Field& f, Matrix m);

/// One matrix per arrow (d_target x d_source), in the presentation's arrow order.
struct FiniteFieldRep {
    int q = 2;
    std::vector<int> dims;
    std::vector<Matrix> mats;

    int total_dim() const;
    bool operator==(const FiniteFieldRep& o) const { return q == o.q && dims == o.dims && mats == o.mats; }
};

/// Builds a representation, checking shapes and relations. Throws PreconditionError.
FiniteFieldRep make_rep(const Presentation& p, int q, std::vector<int> dims, std::vector<Matrix> mats);
FiniteFieldRep zero_rep(const Presentation& p, int q, std::vector<int> dims);

/// Throws PreconditionError on shape mismatch.
bool check_relations(const Presentation& p, const FiniteFieldRep& rep);

/// Each element is a tuple (phi_v) of d_v x d_v matrices with phi_t M_a = M_a phi_s.
using Endomorphism = std::vector<Matrix>;
std::vector<Endomorphism> endomorphism_basis(const Presentation& p, const FiniteFieldRep& rep);

enum class Indec { Yes, No, Unknown };
std::string indec_name(Indec i);  // "yes", "no", "unknown"

/// No when some endomorphism is neither nilpotent nor invertible (Fitting). Cheap candidates
/// are tried first; the exhaustive idempotent search over End runs only when q^dim End <=
/// idem_cap, otherwise the answer is Unknown. The zero representation is reported as No.
Indec is_indecomposable(const Presentation& p, const FiniteFieldRep& rep, std::uint64_t idem_cap = 1u << 20);

FiniteFieldRep direct_sum(const FiniteFieldRep& x, const FiniteFieldRep& y);

struct EnumCaps {
    std::uint64_t entry = 24;           // q^(matrix entries) <= 2^entry
    std::uint64_t group = 10000000;     // product of |GL(d_v, q)|
    std::uint64_t idempotent = 1u << 20;
    unsigned threads = 0;               // 0: hardware concurrency
};

EnumCaps enum_caps_from_env();

/// Lexicographically smallest tuple in the orbit of the base-change group (bytes of all
/// matrices concatenated in arrow order).
FiniteFieldRep canonical_form(const Presentation& p, const FiniteFieldRep& rep);

struct IsoClass {
    FiniteFieldRep rep;  // canonical representative
    std::uint64_t orbit_size = 0;
    int end_dim = 0;
    Indec indecomposable = Indec::Unknown;
};

struct IsoClassReport {
    std::vector<int> dims;
    int q = 2;
    std::uint64_t solutions = 0;  // relation-satisfying tuples
    std::vector<IsoClass> classes;  // sorted by canonical representative
};

/// All representations with the given dimension vector, grouped into isomorphism classes.
/// Throws CapExceeded naming the required size when a cap is exceeded.
IsoClassReport enumerate_reps(const Presentation& p, const std::vector<int>& dims, int q, const EnumCaps& caps = {});

struct Gap {
    std::vector<int> dims;
    std::string reason;
};

struct IndecomposableList {
    std::vector<IsoClass> classes;  // indecomposable (or Unknown) classes, sorted by dims then canonical form
    std::vector<Gap> gaps;          // dimension vectors skipped because of caps
};

/// Indecomposables of total dimension 1..total_dim. Dimension vectors whose support is not
/// connected in the quiver are skipped, since no indecomposable lives there.
IndecomposableList indecomposables_up_to(const Presentation& p, int total_dim, int q, const EnumCaps& caps = {});

/// Splits along Fitting decompositions until no piece splits further. Pieces whose
/// endomorphism ring is too large to search are returned as they are.
std::vector<FiniteFieldRep> decompose(const Presentation& p, const FiniteFieldRep& rep,
                                      std::uint64_t idem_cap = 1u << 20);

/// The nine string modules of the algebra "Xprime" (loops x, y, arrow u) over GF(2).
std::vector<FiniteFieldRep> xyu_fixture();

/// Matrices as row-major hex strings, one per arrow.
nlohmann::json rep_to_json(const Presentation& p, const FiniteFieldRep& rep);

}  // namespace rtl
