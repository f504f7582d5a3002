#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rtl/auslander_catalog.hpp"
#include "rtl/rep_enum.hpp"

using namespace rtl;

namespace {

Presentation loop_x2() {
    Presentation p;
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("x", 0, 0);
    p.relations.push_back(make_relation(p.quiver, {{1, "x^2"}}));
    return p;
}

Presentation xprime() { return catalog_presentation("Xprime", {}).presentation; }

Matrix mat(int r, int c, std::vector<std::uint8_t> entries) {
    Matrix m(r, c);
    m.a = std::move(entries);
    return m;
}

// All invertible d x d matrices, by brute force.
std::vector<Matrix> gl(const Field& f, int d) {
    std::vector<Matrix> out;
    const int n = d * d;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= f.q();
    for (std::uint64_t x = 0; x < total; ++x) {
        Matrix m(d, d);
        std::uint64_t y = x;
        for (int i = 0; i < n; ++i) {
            m.a[i] = static_cast<std::uint8_t>(y % f.q());
            y /= f.q();
        }
        if (mat_rank(f, m) == d) out.push_back(m);
    }
    return out;
}

// Iso-class count by brute force: all tuples, all relation checks, explicit group elements
// g with g_t M g_s^{-1}, tested pairwise through the equation g_t M = M' g_s.
std::pair<int, int> oracle_classes(const Presentation& p, const std::vector<int>& dims, int q) {
    const Field& f = Field::get(q);
    std::vector<std::pair<int, int>> shapes;
    int total = 0;
    for (const auto& a : p.quiver.arrows()) {
        shapes.push_back({dims[a.tgt], dims[a.src]});
        total += dims[a.tgt] * dims[a.src];
    }
    std::uint64_t count = 1;
    for (int i = 0; i < total; ++i) count *= q;
    std::vector<FiniteFieldRep> sols;
    for (std::uint64_t x = 0; x < count; ++x) {
        FiniteFieldRep r;
        r.q = q;
        r.dims = dims;
        std::uint64_t y = x;
        for (auto [rows, cols] : shapes) {
            Matrix m(rows, cols);
            for (auto& e : m.a) {
                e = static_cast<std::uint8_t>(y % q);
                y /= q;
            }
            r.mats.push_back(m);
        }
        if (check_relations(p, r)) sols.push_back(r);
    }
    std::vector<std::vector<Matrix>> groups;
    for (int d : dims) groups.push_back(gl(f, d));
    // Enumerate all tuples of group elements.
    std::vector<std::vector<Matrix>> elements{{}};
    for (const auto& g : groups) {
        std::vector<std::vector<Matrix>> next;
        for (const auto& e : elements)
            for (const auto& m : g) {
                auto n = e;
                n.push_back(m);
                next.push_back(n);
            }
        elements = next;
    }
    auto iso = [&](const FiniteFieldRep& a, const FiniteFieldRep& b) {
        for (const auto& g : elements) {
            bool ok = true;
            for (std::size_t k = 0; k < a.mats.size() && ok; ++k) {
                const Arrow& ar = p.quiver.arrow(k);
                ok = mat_mul(f, g[ar.tgt], a.mats[k]) == mat_mul(f, b.mats[k], g[ar.src]);
            }
            if (ok) return true;
        }
        return false;
    };
    std::vector<FiniteFieldRep> reps;
    for (const auto& s : sols)
        if (std::none_of(reps.begin(), reps.end(), [&](const FiniteFieldRep& r) { return iso(r, s); })) reps.push_back(s);
    return {static_cast<int>(sols.size()), static_cast<int>(reps.size())};
}

std::string key(const FiniteFieldRep& r) {
    std::string s;
    for (int d : r.dims) s += std::to_string(d) + ",";
    for (const auto& m : r.mats) s.append(m.a.begin(), m.a.end());
    return s;
}

}  // namespace

TEST_CASE("field arithmetic") {
    for (int q : {2, 3, 4, 5}) {
        const Field& f = Field::get(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(static_cast<std::uint8_t>(a), f.neg(static_cast<std::uint8_t>(a))) == 0);
            if (a) CHECK(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))) == 1);
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    auto A = static_cast<std::uint8_t>(a), B = static_cast<std::uint8_t>(b),
                         C = static_cast<std::uint8_t>(c);
                    CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
                    CHECK(f.mul(A, f.mul(B, C)) == f.mul(f.mul(A, B), C));
                }
        }
        std::set<int> powers;
        std::uint8_t x = 1;
        for (int i = 0; i < q - 1; ++i) {
            powers.insert(x);
            x = f.mul(x, f.generator());
        }
        CHECK(static_cast<int>(powers.size()) == q - 1);
    }
    CHECK(Field::get(3).from_rational(mpq_class(1, 2)) == 2);
    CHECK(Field::get(5).from_rational(mpq_class(-1)) == 4);
    CHECK_THROWS_AS(Field::get(2).from_rational(mpq_class(1, 2)), PreconditionError);
    CHECK_THROWS_AS(Field::get(7), PreconditionError);
}

TEST_CASE("check_relations") {
    auto p = loop_x2();
    CHECK(check_relations(p, zero_rep(p, 2, {2})));
    CHECK(check_relations(p, FiniteFieldRep{2, {2}, {mat(2, 2, {0, 1, 0, 0})}}));
    CHECK_FALSE(check_relations(p, FiniteFieldRep{2, {2}, {Matrix::identity(2)}}));
    CHECK_THROWS_AS(check_relations(p, FiniteFieldRep{2, {2}, {Matrix(1, 2)}}), PreconditionError);
    CHECK_THROWS_AS(make_rep(p, 2, {2}, {Matrix::identity(2)}), PreconditionError);

    // Relations with coefficients: ab = ba on a commutative square of loops.
    Presentation c;
    c.quiver.add_vertex("1");
    c.quiver.add_arrow("a", 0, 0);
    c.quiver.add_arrow("b", 0, 0);
    c.relations.push_back(make_relation(c.quiver, {{1, "a b"}, {-1, "b a"}}));
    CHECK(check_relations(c, FiniteFieldRep{3, {2}, {mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {2, 0, 0, 2})}}));
    CHECK_FALSE(check_relations(c, FiniteFieldRep{3, {2}, {mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 0, 1, 1})}}));
}

TEST_CASE("endomorphism_basis") {
    auto p = xprime();
    auto s1 = zero_rep(p, 2, {1, 0});
    CHECK(endomorphism_basis(p, s1).size() == 1);
    CHECK(endomorphism_basis(p, direct_sum(s1, s1)).size() == 4);

    auto fixture = xyu_fixture();
    const auto& square = fixture[3];
    auto basis = endomorphism_basis(p, square);
    const Field& f = Field::get(2);
    // End is local with residue field GF(2): the non-invertible elements are exactly the
    // nilpotent ones and form a hyperplane.
    const std::size_t e = basis.size();
    int nilpotent = 0;
    for (std::uint64_t c = 0; c < (1ull << e); ++c) {
        Endomorphism phi;
        for (const auto& m : basis[0]) phi.push_back(Matrix(m.rows, m.cols));
        for (std::size_t i = 0; i < e; ++i)
            if (c >> i & 1)
                for (std::size_t v = 0; v < phi.size(); ++v) phi[v] = mat_add(f, phi[v], basis[i][v]);
        bool nil = true;
        for (const auto& m : phi) {
            Matrix pw = m;
            for (int k = 0; k < m.rows; ++k) pw = mat_mul(f, pw, m);
            nil = nil && pw.is_zero();
        }
        nilpotent += nil;
    }
    CHECK(nilpotent == (1 << (e - 1)));
    // Every endomorphism commutes with the structure maps.
    for (const auto& phi : basis)
        for (std::size_t a = 0; a < p.quiver.num_arrows(); ++a) {
            const Arrow& ar = p.quiver.arrow(a);
            CHECK(mat_mul(f, phi[ar.tgt], square.mats[a]) == mat_mul(f, square.mats[a], phi[ar.src]));
        }
}

TEST_CASE("is_indecomposable and direct_sum") {
    auto p = xprime();
    auto s1 = zero_rep(p, 2, {1, 0});
    CHECK(is_indecomposable(p, s1) == Indec::Yes);
    CHECK(is_indecomposable(p, zero_rep(p, 2, {0, 1})) == Indec::Yes);
    CHECK(is_indecomposable(p, direct_sum(s1, s1)) == Indec::No);
    CHECK(is_indecomposable(p, zero_rep(p, 2, {0, 0})) == Indec::No);
    for (const auto& m : xyu_fixture()) {
        CHECK(check_relations(p, m));
        CHECK(is_indecomposable(p, m) == Indec::Yes);
        CHECK(is_indecomposable(p, direct_sum(m, m)) == Indec::No);
        CHECK(direct_sum(m, zero_rep(p, 2, {0, 0})) == m);
    }
    auto big = direct_sum(xyu_fixture()[1], xyu_fixture()[3]);
    CHECK(big.dims == std::vector<int>{4, 4});
    CHECK(is_indecomposable(p, big, 4) == Indec::No);
    // A Jordan block has a local endomorphism ring k[x]/(x^3), so only the exhaustive pass
    // can say Yes.
    Presentation loop;
    loop.quiver.add_vertex("1");
    loop.quiver.add_arrow("x", 0, 0);
    FiniteFieldRep jordan{2, {3}, {mat(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0})}};
    CHECK(is_indecomposable(loop, jordan, 4) == Indec::Unknown);
    CHECK(is_indecomposable(loop, jordan) == Indec::Yes);
    CHECK_THROWS_AS(direct_sum(s1, FiniteFieldRep{3, {1, 0}, s1.mats}), PreconditionError);
}

TEST_CASE("enumerate_reps examples") {
    auto p = loop_x2();
    auto r1 = enumerate_reps(p, {1}, 2);
    REQUIRE(r1.classes.size() == 1);
    CHECK(r1.classes[0].indecomposable == Indec::Yes);
    CHECK(r1.classes[0].rep.mats[0].is_zero());

    auto r2 = enumerate_reps(p, {2}, 2);
    CHECK(r2.solutions == 4);
    REQUIRE(r2.classes.size() == 2);
    CHECK(r2.classes[0].rep.mats[0].is_zero());
    CHECK(r2.classes[0].indecomposable == Indec::No);
    CHECK(r2.classes[1].indecomposable == Indec::Yes);
    CHECK(r2.classes[0].orbit_size + r2.classes[1].orbit_size == r2.solutions);

    auto a2 = auslander_presentation(2);
    auto r3 = enumerate_reps(a2, {1, 1}, 2);
    CHECK(r3.solutions == 3);
    CHECK(r3.classes.size() == 3);
    CHECK(std::count_if(r3.classes.begin(), r3.classes.end(),
                        [](const IsoClass& c) { return c.indecomposable == Indec::Yes; }) == 2);

    CHECK_THROWS_AS(enumerate_reps(p, {5}, 2), CapExceeded);
    EnumCaps tight;
    tight.group = 5;
    CHECK_THROWS_AS(enumerate_reps(p, {2}, 2, tight), CapExceeded);
    CHECK_THROWS_AS(enumerate_reps(p, {1, 1}, 2), PreconditionError);
}

TEST_CASE("enumerate_reps matches a brute-force orbit oracle") {
    struct Case {
        Presentation p;
        std::vector<int> dims;
        int q;
    };
    std::vector<Case> cases{{loop_x2(), {2}, 2},
                            {loop_x2(), {2}, 3},
                            {loop_x2(), {3}, 2},
                            {auslander_presentation(2), {1, 1}, 3},
                            {auslander_presentation(2), {2, 1}, 2},
                            {auslander_presentation(2), {1, 2}, 2},
                            {auslander_presentation(2), {2, 2}, 2},
                            {auslander_presentation(3), {1, 1, 1}, 2},
                            {xprime(), {1, 1}, 2},
                            {xprime(), {2, 1}, 2},
                            {xprime(), {1, 1}, 4}};
    for (const auto& c : cases) {
        auto [sols, classes] = oracle_classes(c.p, c.dims, c.q);
        auto r = enumerate_reps(c.p, c.dims, c.q);
        INFO("q=" << c.q << " dims=" << join(c.dims));
        CHECK(r.solutions == static_cast<std::uint64_t>(sols));
        CHECK(r.classes.size() == static_cast<std::size_t>(classes));
    }
}

TEST_CASE("enumeration does not depend on the thread count") {
    auto p = xprime();
    EnumCaps one, many;
    one.threads = 1;
    many.threads = 8;
    auto a = enumerate_reps(p, {2, 2}, 2, one);
    auto b = enumerate_reps(p, {2, 2}, 2, many);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].rep == b.classes[i].rep);
        CHECK(a.classes[i].orbit_size == b.classes[i].orbit_size);
    }
}

TEST_CASE("indecomposables_up_to") {
    auto a2 = auslander_presentation(2);
    auto l3 = indecomposables_up_to(a2, 3, 2);
    CHECK(l3.gaps.empty());
    CHECK(l3.classes.size() == 5);  // S1, S2, the two arrows, and the string 1 -> 2 -> 1
    auto l4 = indecomposables_up_to(a2, 4, 2);
    CHECK(l4.classes.size() == 5);
    CHECK(indecomposables_up_to(a2, 0, 2).classes.empty());
    CHECK(l3.classes.back().rep.dims == std::vector<int>{2, 1});
}

TEST_CASE("indecomposable counts agree over GF(2) and GF(3)") {
    auto a2 = auslander_presentation(2);
    auto l2 = indecomposables_up_to(a2, 4, 2);
    auto l3 = indecomposables_up_to(a2, 4, 3);
    std::map<std::vector<int>, int> c2, c3;
    for (const auto& c : l2.classes) ++c2[c.rep.dims];
    for (const auto& c : l3.classes) ++c3[c.rep.dims];
    CHECK(c2 == c3);
}

TEST_CASE("finite-type counts saturate past the algebra dimension") {
    // k[x]/(x^n) is the case X = {} and A_2 the case n = 2, X = {2}.
    for (int n = 2; n <= 3; ++n) {
        Presentation p;
        p.quiver.add_vertex("1");
        p.quiver.add_arrow("x", 0, 0);
        p.relations.push_back(make_relation(p.quiver, {{1, "x^" + std::to_string(n)}}));
        auto at = indecomposables_up_to(p, n, 2);
        auto past = indecomposables_up_to(p, n + 1, 2);
        CHECK(at.classes.size() == static_cast<std::size_t>(n));
        CHECK(past.classes.size() == at.classes.size());
    }
    auto a2 = auslander_presentation(2);
    EnumCaps caps;
    caps.group = 1ull << 36;  // semisimple vectors such as (6, 0) have a single orbit
    auto at = indecomposables_up_to(a2, 5, 2, caps);
    auto past = indecomposables_up_to(a2, 6, 2, caps);
    CHECK(at.classes.size() == 5);
    CHECK(past.gaps.empty());
    CHECK(past.classes.size() == at.classes.size());
}

TEST_CASE("the fixture list is complete at its dimension vectors") {
    auto p = xprime();
    auto fixture = xyu_fixture();
    CHECK(fixture.size() == 9);
    std::set<std::string> canon;
    for (const auto& m : fixture) canon.insert(key(canonical_form(p, m)));
    CHECK(canon.size() == 9);
    std::set<std::vector<int>> vectors;
    for (const auto& m : fixture) vectors.insert(m.dims);
    for (const auto& d : vectors) {
        auto r = enumerate_reps(p, d, 2);
        std::set<std::string> found;
        for (const auto& c : r.classes)
            if (c.indecomposable == Indec::Yes) found.insert(key(c.rep));
        std::set<std::string> expected;
        for (const auto& m : fixture)
            if (m.dims == d) expected.insert(key(canonical_form(p, m)));
        INFO("dims " << join(d));
        CHECK(found == expected);
    }
}

TEST_CASE("decompose recovers the summands of random direct sums") {
    auto p = xprime();
    auto pieces = xyu_fixture();
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        FiniteFieldRep sum = zero_rep(p, 2, {0, 0});
        std::multiset<std::string> expected;
        for (int i = 0; i < k; ++i) {
            const auto& m = pieces[rng() % pieces.size()];
            sum = direct_sum(sum, m);
            expected.insert(key(canonical_form(p, m)));
        }
        std::multiset<std::string> got;
        for (const auto& s : decompose(p, sum)) got.insert(key(canonical_form(p, s)));
        CHECK(got == expected);
    }
}

TEST_CASE("comparison algebra window has a string module longer than 2n-5") {
    // Window of three periods of the cover of Abar for n = 4. The string
    // 1_0 -a-> 2_0 -b-> 1_1 -a-> 2_1 -b-> 1_2 avoids (ab)^2, which only kills paths from 2.
    auto e = catalog_presentation("Abar", {4, 0});
    auto w = cover_window(e.presentation, *e.cover_degrees, 0, 2);
    const Quiver& q = w.quiver;
    std::vector<int> dims(q.num_vertices(), 0);
    for (std::string v : {"1_0", "2_0", "1_1", "2_1", "1_2"}) dims[q.vertex_index(v)] = 1;
    auto m = zero_rep(w, 2, dims);
    for (std::string a : {"a_0", "b_0", "a_1", "b_1"}) m.mats[q.arrow_index(a)] = Matrix::identity(1);
    CHECK(check_relations(w, m));
    CHECK(is_indecomposable(w, m) == Indec::Yes);
    CHECK(m.total_dim() == 5);
}

TEST_CASE("rep_to_json") {
    auto p = xprime();
    auto j = rep_to_json(p, xyu_fixture()[3]);
    CHECK(j.at("matrices").at("x") == "0100");
    CHECK(j.at("matrices").at("u") == "1001");
    CHECK(j.at("dims") == std::vector<int>{2, 2});
}
