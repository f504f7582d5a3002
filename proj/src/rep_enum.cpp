#include "rtl/rep_enum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <thread>
#include <unordered_set>

namespace rtl {

// ---------------------------------------------------------------------------
// Field

Field::Field(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
        throw PreconditionError("supported fields are GF(2), GF(3), GF(4), GF(5); got q = " + std::to_string(q));
    p_ = q == 4 ? 2 : q;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (q == 4) {
                add_[a * q + b] = static_cast<std::uint8_t>(a ^ b);
                // carry-less product reduced by t^2 = t + 1
                int r = 0;
                for (int i = 0; i < 2; ++i)
                    if (b >> i & 1) r ^= a << i;
                if (r & 4) r ^= 0b111;
                mul_[a * q + b] = static_cast<std::uint8_t>(r);
            } else {
                add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
        }
    for (int g = 1; g < q; ++g) {
        int order = 1;
        for (std::uint8_t x = static_cast<std::uint8_t>(g); x != 1; x = mul(x, static_cast<std::uint8_t>(g))) ++order;
        if (order == q - 1) {
            gen_ = static_cast<std::uint8_t>(g);
            break;
        }
    }
}

const Field& Field::get(int q) {
    static const Field f2(2), f3(3), f4(4), f5(5);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        default: break;
    }
    throw PreconditionError("supported fields are GF(2), GF(3), GF(4), GF(5); got q = " + std::to_string(q));
}

std::uint8_t Field::inv(std::uint8_t a) const {
    if (a == 0) throw PreconditionError("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

std::uint8_t Field::from_rational(const mpq_class& c) const {
    auto reduce = [&](const mpz_class& z) {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint8_t>(r.get_si());
    };
    std::uint8_t den = reduce(c.get_den());
    if (den == 0) throw PreconditionError("coefficient " + c.get_str() + " is undefined in characteristic " +
                                          std::to_string(p_));
    return mul(reduce(c.get_num()), inv(den));
}

// ---------------------------------------------------------------------------
// Matrices

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t x) { return x == 0; });
}

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y) {
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint8_t c = x.at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) = f.add(z.at(i, j), f.mul(c, y.at(k, j)));
        }
    return z;
}

Matrix mat_add(const Field& f, const Matrix& x, const Matrix& y) {
    Matrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = f.add(z.a[i], y.a[i]);
    return z;
}

Matrix mat_scale(const Field& f, std::uint8_t c, const Matrix& x) {
    Matrix z = x;
    for (auto& v : z.a) v = f.mul(c, v);
    return z;
}

namespace {

using Row = std::vector<std::uint8_t>;

// Reduced row echelon form in place; zero rows dropped. Returns pivot columns.
std::vector<int> rref_rows(const Field& f, std::vector<Row>& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        std::uint8_t s = f.inv(rows[r][c]);
        for (auto& v : rows[r]) v = f.mul(s, v);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint8_t m = f.neg(rows[i][c]);
            for (int j = 0; j < ncols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(m, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Row> to_rows(const Matrix& m) {
    std::vector<Row> rows(m.rows, Row(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Matrix inverse(const Field& f, const Matrix& m) {
    const int n = m.rows;
    std::vector<Row> rows(n, Row(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = 1;
    }
    auto piv = rref_rows(f, rows, n);
    if (static_cast<int>(piv.size()) != n) throw PreconditionError("matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = rows[i][n + j];
    return out;
}

// Columns of m spanning its column space, as a d x r matrix.
Matrix column_basis(const Field& f, const Matrix& m) {
    auto rows = to_rows(transpose(m));
    rref_rows(f, rows, m.rows);
    Matrix b(m.rows, static_cast<int>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int i = 0; i < m.rows; ++i) b.at(i, static_cast<int>(k)) = rows[k][i];
    return b;
}

// L with L * b = identity, for b of full column rank.
Matrix left_inverse(const Field& f, const Matrix& b) {
    const int r = b.cols;
    auto rows = to_rows(transpose(b));
    auto piv = rref_rows(f, rows, b.rows);
    Matrix sub(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = b.at(piv[i], j);
    Matrix inv = inverse(f, sub);
    Matrix sel(r, b.rows);
    for (int i = 0; i < r; ++i) sel.at(i, piv[i]) = 1;
    return mat_mul(f, inv, sel);
}

struct Layout {
    std::vector<int> src, tgt, rows, cols, off;
    int total = 0;
};

Layout layout_of(const Presentation& p, const std::vector<int>& dims) {
    const Quiver& q = p.quiver;
    Layout l;
    for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) {
        const Arrow& ar = q.arrow(a);
        l.src.push_back(ar.src);
        l.tgt.push_back(ar.tgt);
        l.rows.push_back(dims[ar.tgt]);
        l.cols.push_back(dims[ar.src]);
        l.off.push_back(l.total);
        l.total += dims[ar.tgt] * dims[ar.src];
    }
    return l;
}

struct FieldRelation {
    std::vector<std::pair<std::uint8_t, Path>> terms;
    int last_arrow = -1;
};

std::vector<FieldRelation> field_relations(const Presentation& p, const Field& f) {
    std::vector<FieldRelation> out;
    for (const auto& r : p.relations) {
        FieldRelation fr;
        for (const auto& t : r.terms) {
            std::uint8_t c = f.from_rational(t.c);
            if (c != 0) fr.terms.push_back({c, t.path});
            for (int a : t.path) fr.last_arrow = std::max(fr.last_arrow, a);
        }
        out.push_back(std::move(fr));
    }
    return out;
}

Matrix slice(const Layout& l, const std::string& tuple, int a) {
    Matrix m(l.rows[a], l.cols[a]);
    std::copy(tuple.begin() + l.off[a], tuple.begin() + l.off[a] + l.rows[a] * l.cols[a], m.a.begin());
    return m;
}

template <class Get>
bool relation_holds(const Field& f, const FieldRelation& r, int rows, int cols, Get&& mat) {
    Matrix sum(rows, cols);
    for (const auto& [c, path] : r.terms) {
        Matrix m = mat(path.front());
        for (std::size_t i = 1; i < path.size(); ++i) m = mat_mul(f, mat(path[i]), m);
        sum = mat_add(f, sum, mat_scale(f, c, m));
    }
    return sum.is_zero();
}

std::string encode(const FiniteFieldRep& r) {
    std::string s;
    for (const auto& m : r.mats) s.append(m.a.begin(), m.a.end());
    return s;
}

FiniteFieldRep decode(const Layout& l, const std::vector<int>& dims, int q, const std::string& s) {
    FiniteFieldRep r;
    r.q = q;
    r.dims = dims;
    for (std::size_t a = 0; a < l.off.size(); ++a) r.mats.push_back(slice(l, s, static_cast<int>(a)));
    return r;
}

std::uint64_t gl_order(int d, int q) {
    std::uint64_t n = 1, qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    std::uint64_t qi = 1;
    for (int i = 0; i < d; ++i) {
        n *= qd - qi;
        qi *= q;
    }
    return n;
}

// One generator of GL(d_v) acting by g M_a g^{-1}: a transvection I + c E_ij or, when i == j,
// the scaling of coordinate i by c.
struct Gen {
    int v, i, j;
    std::uint8_t c;
};

std::vector<Gen> generators(const std::vector<int>& dims, const Field& f) {
    std::vector<Gen> gens;
    std::vector<std::uint8_t> scalars{1};
    if (f.q() == 4) scalars.push_back(2);
    for (int v = 0; v < static_cast<int>(dims.size()); ++v) {
        if (f.q() > 2 && dims[v] > 0) gens.push_back({v, 0, 0, f.generator()});
        for (int i = 0; i < dims[v]; ++i)
            for (int j = 0; j < dims[v]; ++j)
                if (i != j)
                    for (auto c : scalars) gens.push_back({v, i, j, c});
    }
    return gens;
}

void apply_gen(const Field& f, const Layout& l, const Gen& g, std::string& t) {
    for (std::size_t a = 0; a < l.off.size(); ++a) {
        const int rows = l.rows[a], cols = l.cols[a];
        auto at = [&](int r, int c) -> std::uint8_t& {
            return reinterpret_cast<std::uint8_t&>(t[l.off[a] + r * cols + c]);
        };
        if (l.tgt[a] == g.v) {
            if (g.i == g.j) {
                for (int c = 0; c < cols; ++c) at(g.i, c) = f.mul(g.c, at(g.i, c));
            } else {
                for (int c = 0; c < cols; ++c) at(g.i, c) = f.add(at(g.i, c), f.mul(g.c, at(g.j, c)));
            }
        }
        if (l.src[a] == g.v) {
            if (g.i == g.j) {
                std::uint8_t ci = f.inv(g.c);
                for (int r = 0; r < rows; ++r) at(r, g.i) = f.mul(ci, at(r, g.i));
            } else {
                std::uint8_t m = f.neg(g.c);
                for (int r = 0; r < rows; ++r) at(r, g.j) = f.add(at(r, g.j), f.mul(m, at(r, g.i)));
            }
        }
    }
}

// BFS over the orbit of `start`; every visited tuple is added to `seen`. Returns (min, size).
std::pair<std::string, std::uint64_t> orbit(const Field& f, const Layout& l, const std::vector<Gen>& gens,
                                            const std::string& start, std::unordered_set<std::string>& seen) {
    std::deque<std::string> queue{start};
    seen.insert(start);
    std::string best = start;
    std::uint64_t size = 0;
    while (!queue.empty()) {
        std::string cur = std::move(queue.front());
        queue.pop_front();
        ++size;
        if (cur < best) best = cur;
        for (const auto& g : gens) {
            std::string next = cur;
            apply_gen(f, l, g, next);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {best, size};
}

void check_shapes(const Presentation& p, const FiniteFieldRep& rep) {
    const Quiver& q = p.quiver;
    if (static_cast<int>(rep.dims.size()) != static_cast<int>(q.num_vertices()))
        throw PreconditionError("dimension vector has " + std::to_string(rep.dims.size()) + " entries, quiver has " +
                                std::to_string(q.num_vertices()) + " vertices");
    if (static_cast<int>(rep.mats.size()) != static_cast<int>(q.num_arrows()))
        throw PreconditionError("representation has " + std::to_string(rep.mats.size()) + " matrices, quiver has " +
                                std::to_string(q.num_arrows()) + " arrows");
    for (int d : rep.dims)
        if (d < 0) throw PreconditionError("negative dimension");
    for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix& m = rep.mats[a];
        if (m.rows != rep.dims[ar.tgt] || m.cols != rep.dims[ar.src] ||
            m.a.size() != static_cast<std::size_t>(m.rows) * m.cols)
            throw PreconditionError("matrix of arrow " + ar.id + " has shape " + std::to_string(m.rows) + "x" +
                                    std::to_string(m.cols) + ", expected " + std::to_string(rep.dims[ar.tgt]) + "x" +
                                    std::to_string(rep.dims[ar.src]));
        for (auto x : m.a)
            if (x >= rep.q) throw PreconditionError("matrix entry out of range for GF(" + std::to_string(rep.q) + ")");
    }
}

bool is_identity(const Endomorphism& e) {
    for (const auto& m : e)
        if (!(m == Matrix::identity(m.rows))) return false;
    return true;
}

Matrix kernel_basis(const Field& f, const Matrix& m) {
    auto rows = to_rows(m);
    auto piv = rref_rows(f, rows, m.cols);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : piv) is_pivot[c] = 1;
    Matrix k(m.cols, m.cols - static_cast<int>(piv.size()));
    int col = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        k.at(free, col) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k.at(piv[r], col) = f.neg(rows[r][free]);
        ++col;
    }
    return k;
}

// Two complementary subrepresentations, as column bases per vertex.
using Split = std::pair<std::vector<Matrix>, std::vector<Matrix>>;

// Fitting decomposition M = im phi^N + ker phi^N with N the largest dimension; a split
// unless phi is nilpotent or invertible.
std::optional<Split> fitting_split(const Field& f, const Endomorphism& phi) {
    int n = 1;
    for (const auto& m : phi) n = std::max(n, m.rows);
    Split s;
    bool image_nonzero = false, kernel_nonzero = false;
    for (const auto& m : phi) {
        Matrix pw = m;
        for (int k = 1; k < n; ++k) pw = mat_mul(f, pw, m);
        s.first.push_back(column_basis(f, pw));
        s.second.push_back(kernel_basis(f, pw));
        image_nonzero = image_nonzero || s.first.back().cols > 0;
        kernel_nonzero = kernel_nonzero || s.second.back().cols > 0;
    }
    if (image_nonzero && kernel_nonzero) return s;
    return std::nullopt;
}

// Looks for an endomorphism that is neither nilpotent nor invertible: first among cheap
// candidates (basis elements, pairwise sums, seeded random combinations), then among all
// q^dim End elements in a modular Gray code when that is within the cap, testing for
// idempotents. Sets `searched` to false when the exhaustive pass was skipped.
std::optional<Split> find_split(const Presentation& p, const FiniteFieldRep& rep, std::uint64_t cap, bool& searched) {
    const Field& f = Field::get(rep.q);
    auto basis = endomorphism_basis(p, rep);
    const std::size_t e = basis.size();
    searched = true;
    if (e <= 1) return std::nullopt;
    auto combine = [&](const std::vector<std::uint8_t>& c) {
        Endomorphism phi;
        for (const auto& m : basis[0]) phi.push_back(Matrix(m.rows, m.cols));
        for (std::size_t i = 0; i < e; ++i)
            if (c[i])
                for (std::size_t v = 0; v < phi.size(); ++v)
                    phi[v] = mat_add(f, phi[v], mat_scale(f, c[i], basis[i][v]));
        return phi;
    };
    std::vector<std::uint8_t> c(e, 0);
    for (std::size_t i = 0; i < e; ++i) {
        c.assign(e, 0);
        c[i] = 1;
        if (auto s = fitting_split(f, basis[i])) return s;
        for (std::size_t j = i + 1; j < e; ++j) {
            c[j] = 1;
            if (auto s = fitting_split(f, combine(c))) return s;
            c[j] = 0;
        }
    }
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 64; ++trial) {
        for (auto& x : c) x = static_cast<std::uint8_t>(rng() % rep.q);
        if (auto s = fitting_split(f, combine(c))) return s;
    }

    long double total = std::pow(static_cast<long double>(rep.q), static_cast<long double>(e));
    if (total > static_cast<long double>(cap)) {
        searched = false;
        return std::nullopt;
    }
    const std::uint64_t n = static_cast<std::uint64_t>(total);
    Endomorphism phi;
    for (const auto& m : basis[0]) phi.push_back(Matrix(m.rows, m.cols));
    for (std::uint64_t step = 1; step < n; ++step) {
        std::uint64_t x = step;
        std::size_t digit = 0;
        while (x % rep.q == 0) {
            x /= rep.q;
            ++digit;
        }
        for (std::size_t v = 0; v < phi.size(); ++v) phi[v] = mat_add(f, phi[v], basis[digit][v]);
        bool idem = true;
        for (std::size_t v = 0; v < phi.size() && idem; ++v) idem = mat_mul(f, phi[v], phi[v]) == phi[v];
        if (!idem || is_identity(phi)) continue;
        if (auto s = fitting_split(f, phi)) return s;
    }
    return std::nullopt;
}

// Restriction to a subrepresentation given by column bases; any left inverse of the target
// basis recovers the restricted map.
FiniteFieldRep restrict_to(const Presentation& p, const FiniteFieldRep& rep, const std::vector<Matrix>& basis) {
    const Field& f = Field::get(rep.q);
    std::vector<Matrix> left;
    FiniteFieldRep out;
    out.q = rep.q;
    for (const auto& b : basis) {
        left.push_back(b.cols > 0 ? left_inverse(f, b) : Matrix(0, b.rows));
        out.dims.push_back(b.cols);
    }
    for (int a = 0; a < static_cast<int>(p.quiver.num_arrows()); ++a) {
        const Arrow& ar = p.quiver.arrow(a);
        out.mats.push_back(mat_mul(f, left[ar.tgt], mat_mul(f, rep.mats[a], basis[ar.src])));
    }
    return out;
}

bool support_connected(const Presentation& p, const std::vector<int>& dims) {
    std::vector<int> support;
    for (int v = 0; v < static_cast<int>(dims.size()); ++v)
        if (dims[v] > 0) support.push_back(v);
    if (support.empty()) return false;
    std::vector<char> seen(dims.size(), 0);
    std::vector<int> stack{support.front()};
    seen[support.front()] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : p.quiver.arrows()) {
            int w = a.src == v ? a.tgt : a.tgt == v ? a.src : -1;
            if (w >= 0 && dims[w] > 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(support.begin(), support.end(), [&](int v) { return seen[v]; });
}

void dims_with_total(int nv, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == nv - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int d = total; d >= 0; --d) {
        cur.push_back(d);
        dims_with_total(nv, total - d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int mat_rank(const Field& f, Matrix m) {
    auto rows = to_rows(m);
    return static_cast<int>(rref_rows(f, rows, m.cols).size());
}

// ---------------------------------------------------------------------------
// Representations

int FiniteFieldRep::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

bool check_relations(const Presentation& p, const FiniteFieldRep& rep) {
    check_shapes(p, rep);
    const Field& f = Field::get(rep.q);
    for (const auto& r : field_relations(p, f)) {
        if (r.terms.empty()) continue;
        const Path& first = r.terms.front().second;
        const int rows = rep.dims[p.target(first)], cols = rep.dims[p.source(first)];
        if (!relation_holds(f, r, rows, cols, [&](int a) -> const Matrix& { return rep.mats[a]; })) return false;
    }
    return true;
}

FiniteFieldRep make_rep(const Presentation& p, int q, std::vector<int> dims, std::vector<Matrix> mats) {
    Field::get(q);
    FiniteFieldRep r{q, std::move(dims), std::move(mats)};
    if (!check_relations(p, r)) throw PreconditionError("representation violates a relation");
    return r;
}

FiniteFieldRep zero_rep(const Presentation& p, int q, std::vector<int> dims) {
    FiniteFieldRep r;
    r.q = q;
    r.dims = std::move(dims);
    for (const auto& a : p.quiver.arrows()) r.mats.push_back(Matrix(r.dims.at(a.tgt), r.dims.at(a.src)));
    check_shapes(p, r);
    return r;
}

std::vector<Endomorphism> endomorphism_basis(const Presentation& p, const FiniteFieldRep& rep) {
    check_shapes(p, rep);
    const Field& f = Field::get(rep.q);
    const int nv = static_cast<int>(rep.dims.size());
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + rep.dims[v] * rep.dims[v];
    const int N = off[nv];
    auto var = [&](int v, int i, int j) { return off[v] + i * rep.dims[v] + j; };

    std::vector<Row> eqs;
    for (int a = 0; a < static_cast<int>(p.quiver.num_arrows()); ++a) {
        const Arrow& ar = p.quiver.arrow(a);
        const Matrix& m = rep.mats[a];
        const int s = ar.src, t = ar.tgt;
        // (phi_t M - M phi_s)_{ij} = 0
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                Row row(N, 0);
                for (int k = 0; k < m.rows; ++k) {
                    auto& x = row[var(t, i, k)];
                    x = f.add(x, m.at(k, j));
                }
                for (int k = 0; k < m.cols; ++k) {
                    auto& x = row[var(s, k, j)];
                    x = f.sub(x, m.at(i, k));
                }
                if (std::any_of(row.begin(), row.end(), [](std::uint8_t x) { return x != 0; }))
                    eqs.push_back(std::move(row));
            }
    }
    auto pivots = rref_rows(f, eqs, N);
    std::vector<char> is_pivot(N, 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<Endomorphism> basis;
    for (int free = 0; free < N; ++free) {
        if (is_pivot[free]) continue;
        Row x(N, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(eqs[r][free]);
        Endomorphism e;
        for (int v = 0; v < nv; ++v) {
            Matrix m(rep.dims[v], rep.dims[v]);
            for (int i = 0; i < rep.dims[v]; ++i)
                for (int j = 0; j < rep.dims[v]; ++j) m.at(i, j) = x[var(v, i, j)];
            e.push_back(std::move(m));
        }
        basis.push_back(std::move(e));
    }
    return basis;
}

std::string indec_name(Indec i) {
    switch (i) {
        case Indec::Yes: return "yes";
        case Indec::No: return "no";
        case Indec::Unknown: return "unknown";
    }
    return "unknown";
}

Indec is_indecomposable(const Presentation& p, const FiniteFieldRep& rep, std::uint64_t idem_cap) {
    check_shapes(p, rep);
    if (rep.total_dim() == 0) return Indec::No;
    bool searched = false;
    if (find_split(p, rep, idem_cap, searched)) return Indec::No;
    return searched ? Indec::Yes : Indec::Unknown;
}

FiniteFieldRep direct_sum(const FiniteFieldRep& x, const FiniteFieldRep& y) {
    if (x.q != y.q || x.dims.size() != y.dims.size() || x.mats.size() != y.mats.size())
        throw PreconditionError("direct_sum needs representations of the same presentation over the same field");
    FiniteFieldRep s;
    s.q = x.q;
    for (std::size_t v = 0; v < x.dims.size(); ++v) s.dims.push_back(x.dims[v] + y.dims[v]);
    for (std::size_t a = 0; a < x.mats.size(); ++a) {
        const Matrix &m = x.mats[a], &n = y.mats[a];
        Matrix b(m.rows + n.rows, m.cols + n.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) b.at(i, j) = m.at(i, j);
        for (int i = 0; i < n.rows; ++i)
            for (int j = 0; j < n.cols; ++j) b.at(m.rows + i, m.cols + j) = n.at(i, j);
        s.mats.push_back(std::move(b));
    }
    return s;
}

EnumCaps enum_caps_from_env() {
    Caps c = caps_from_env();
    EnumCaps e;
    e.entry = c.entry;
    e.group = c.orbit_group;
    e.idempotent = c.idempotent;
    return e;
}

FiniteFieldRep canonical_form(const Presentation& p, const FiniteFieldRep& rep) {
    check_shapes(p, rep);
    const Field& f = Field::get(rep.q);
    Layout l = layout_of(p, rep.dims);
    std::unordered_set<std::string> seen;
    auto [best, size] = orbit(f, l, generators(rep.dims, f), encode(rep), seen);
    (void)size;
    return decode(l, rep.dims, rep.q, best);
}

IsoClassReport enumerate_reps(const Presentation& p, const std::vector<int>& dims, int q, const EnumCaps& caps) {
    const Field& f = Field::get(q);
    if (static_cast<int>(dims.size()) != static_cast<int>(p.quiver.num_vertices()))
        throw PreconditionError("dimension vector has " + std::to_string(dims.size()) + " entries, quiver has " +
                                std::to_string(p.quiver.num_vertices()) + " vertices");
    for (int d : dims)
        if (d < 0) throw PreconditionError("negative dimension");
    const Layout l = layout_of(p, dims);
    const double bits = l.total * std::log2(static_cast<double>(q));
    if (bits > static_cast<double>(caps.entry) + 1e-9)
        throw CapExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(l.total) +
                              " matrix tuples exceeds the entry cap 2^" + std::to_string(caps.entry),
                          static_cast<std::uint64_t>(std::ceil(bits)));
    long double group = 1;
    for (int d : dims) group *= static_cast<long double>(gl_order(d, q));
    if (group > static_cast<long double>(caps.group))
        throw CapExceeded("base-change group of order " + std::to_string(static_cast<unsigned long long>(group)) +
                              " exceeds the group cap " + std::to_string(caps.group),
                          static_cast<std::uint64_t>(group));

    const auto rels = field_relations(p, f);
    const int na = static_cast<int>(p.quiver.num_arrows());
    std::vector<std::vector<int>> ending(na);
    for (std::size_t r = 0; r < rels.size(); ++r)
        if (rels[r].last_arrow >= 0 && !rels[r].terms.empty()) ending[rels[r].last_arrow].push_back(static_cast<int>(r));

    // Work is split over the values of the first row of the first nonempty matrix.
    int lead = -1;
    for (int a = 0; a < na && lead < 0; ++a)
        if (l.rows[a] * l.cols[a] > 0) lead = a;
    const int lead_width = lead >= 0 ? l.cols[lead] : 0;
    std::uint64_t tasks = 1;
    for (int i = 0; i < lead_width; ++i) tasks *= static_cast<std::uint64_t>(q);

    auto worker = [&](std::uint64_t task, std::vector<std::string>& out) {
        std::string t(l.total, '\0');
        std::uint64_t x = task;
        for (int i = 0; i < lead_width; ++i) {
            t[l.off[lead] + i] = static_cast<char>(x % q);
            x /= q;
        }
        auto get = [&](int a) { return slice(l, t, a); };
        std::function<void(int)> dfs = [&](int a) {
            if (a == na) {
                out.push_back(t);
                return;
            }
            const int start = l.off[a] + (a == lead ? lead_width : 0);
            const int end = l.off[a] + l.rows[a] * l.cols[a];
            for (int i = start; i < end; ++i) t[i] = 0;
            while (true) {
                bool ok = true;
                for (int r : ending[a]) {
                    const Path& first = rels[r].terms.front().second;
                    if (!relation_holds(f, rels[r], dims[p.target(first)], dims[p.source(first)], get)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) dfs(a + 1);
                int i = start;
                while (i < end && static_cast<int>(t[i]) == q - 1) t[i++] = 0;
                if (i == end) break;
                t[i] = static_cast<char>(t[i] + 1);
            }
        };
        dfs(0);
    };

    unsigned nthreads = caps.threads ? caps.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, tasks));
    std::vector<std::vector<std::string>> found(nthreads);
    std::atomic<std::uint64_t> next{0};
    auto run = [&](unsigned w) {
        for (std::uint64_t task; (task = next++) < tasks;) worker(task, found[w]);
    };
    if (nthreads <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::vector<std::string> solutions;
    for (auto& v : found) solutions.insert(solutions.end(), v.begin(), v.end());
    std::sort(solutions.begin(), solutions.end());

    IsoClassReport rep;
    rep.dims = dims;
    rep.q = q;
    rep.solutions = solutions.size();
    const auto gens = generators(dims, f);
    std::unordered_set<std::string> seen;
    for (const auto& s : solutions) {
        if (seen.count(s)) continue;
        auto [best, size] = orbit(f, l, gens, s, seen);
        IsoClass c;
        c.rep = decode(l, dims, q, best);
        c.orbit_size = size;
        c.end_dim = static_cast<int>(endomorphism_basis(p, c.rep).size());
        c.indecomposable = is_indecomposable(p, c.rep, caps.idempotent);
        rep.classes.push_back(std::move(c));
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const IsoClass& a, const IsoClass& b) { return encode(a.rep) < encode(b.rep); });
    return rep;
}

IndecomposableList indecomposables_up_to(const Presentation& p, int total_dim, int q, const EnumCaps& caps) {
    IndecomposableList out;
    const int nv = static_cast<int>(p.quiver.num_vertices());
    if (nv == 0) return out;
    for (int total = 1; total <= total_dim; ++total) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur;
        dims_with_total(nv, total, cur, vecs);
        std::sort(vecs.begin(), vecs.end());
        for (const auto& d : vecs) {
            if (!support_connected(p, d)) continue;
            try {
                auto rep = enumerate_reps(p, d, q, caps);
                for (auto& c : rep.classes)
                    if (c.indecomposable != Indec::No) out.classes.push_back(std::move(c));
            } catch (const CapExceeded& e) {
                out.gaps.push_back({d, e.what()});
            }
        }
    }
    std::stable_sort(out.classes.begin(), out.classes.end(), [](const IsoClass& a, const IsoClass& b) {
        if (a.rep.total_dim() != b.rep.total_dim()) return a.rep.total_dim() < b.rep.total_dim();
        if (a.rep.dims != b.rep.dims) return a.rep.dims < b.rep.dims;
        return encode(a.rep) < encode(b.rep);
    });
    return out;
}

std::vector<FiniteFieldRep> decompose(const Presentation& p, const FiniteFieldRep& rep, std::uint64_t idem_cap) {
    check_shapes(p, rep);
    if (rep.total_dim() == 0) return {};
    bool searched = false;
    auto split = find_split(p, rep, idem_cap, searched);
    if (!split) return {rep};
    auto left = decompose(p, restrict_to(p, rep, split->first), idem_cap);
    auto right = decompose(p, restrict_to(p, rep, split->second), idem_cap);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

std::vector<FiniteFieldRep> xyu_fixture() {
    // Arrow order x (1 -> 1), y (2 -> 2), u (1 -> 2); bases e_i at 1 and f_j at 2 in
    // increasing index order.
    struct Entry {
        char arrow;
        int row, col;
    };
    auto build = [](int d1, int d2, std::vector<Entry> entries) {
        FiniteFieldRep r;
        r.q = 2;
        r.dims = {d1, d2};
        r.mats = {Matrix(d1, d1), Matrix(d2, d2), Matrix(d2, d1)};
        for (const auto& e : entries) r.mats[e.arrow == 'x' ? 0 : e.arrow == 'y' ? 1 : 2].at(e.row, e.col) = 1;
        return r;
    };
    return {
        build(2, 0, {{'x', 0, 1}}),                                // e8 -> e1
        build(2, 2, {{'x', 0, 1}, {'u', 0, 1}, {'y', 0, 1}}),      // e9 -> e2, e9 -> f3, f10 -> f3
        build(2, 1, {{'x', 0, 1}, {'u', 0, 1}}),                   // e10 -> e3, e10 -> f6
        build(2, 2, {{'x', 0, 1}, {'u', 1, 1}, {'u', 0, 0}, {'y', 0, 1}}),  // e11 -> e4, f8; e4 -> f1; f8 -> f1
        build(1, 0, {}),                                           // e5
        build(1, 2, {{'u', 0, 0}, {'y', 0, 1}}),                   // e6 -> f2, f9 -> f2
        build(1, 1, {{'u', 0, 0}}),                                // e7 -> f5
        build(0, 2, {{'y', 0, 1}}),                                // f11 -> f4
        build(0, 1, {}),                                           // f7
    };
}

nlohmann::json rep_to_json(const Presentation& p, const FiniteFieldRep& rep) {
    static const char* hex = "0123456789abcdef";
    nlohmann::json mats = nlohmann::json::object();
    for (int a = 0; a < static_cast<int>(p.quiver.num_arrows()); ++a) {
        std::string s;
        for (auto x : rep.mats[a].a) s.push_back(hex[x]);
        mats[p.quiver.arrow(a).id] = s;
    }
    return {{"q", rep.q}, {"dims", rep.dims}, {"matrices", mats}};
}

}  // namespace rtl
