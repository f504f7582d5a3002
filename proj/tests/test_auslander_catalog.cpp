#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtl/auslander_catalog.hpp"
#include "rtl/classifier.hpp"

using namespace rtl;

namespace {

// dim Hom(k[x]/(x^i), k[x]/(x^j)) = min(i, j); vertex v carries k[x]/(x^{n+1-v}).
std::size_t hom_sum(int n, const std::vector<int>& vertices) {
    std::size_t s = 0;
    for (int v : vertices)
        for (int w : vertices) s += static_cast<std::size_t>(std::min(n + 1 - v, n + 1 - w));
    return s;
}

}  // namespace

TEST_CASE("Auslander presentation") {
    auto p2 = auslander_presentation(2);
    CHECK(p2.quiver.num_vertices() == 2);
    CHECK(p2.quiver.num_arrows() == 2);
    REQUIRE(p2.relations.size() == 1);
    CHECK(display_relation(p2.quiver, p2.relations[0]) == "a1 b1");

    auto p3 = auslander_presentation(3);
    CHECK(p3.quiver.num_arrows() == 4);
    REQUIRE(p3.relations.size() == 2);
    CHECK(p3.relations[0].terms.size() == 2);
    CHECK(p3.relations[1].terms.size() == 1);

    CHECK_THROWS_AS(auslander_presentation(1), PreconditionError);

    for (int n = 2; n <= 7; ++n) {
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) all.push_back(v);
        CHECK(path_basis(auslander_presentation(n)).dim() == hom_sum(n, all));
    }
    CHECK(path_basis(auslander_presentation(4)).dim() == 30);
}

TEST_CASE("catalog examples") {
    auto e = catalog_presentation("A{2,n}", {5, 0});
    const auto& q = e.presentation.quiver;
    CHECK(q.num_vertices() == 3);
    bool found = false;
    for (const auto& r : e.presentation.relations)
        found = found || display_relation(q, r) == "v u - a b a b a b" || display_relation(q, r) == "-a b a b a b + v u";
    CHECK(found);

    auto x = catalog_presentation("Xbre", {});
    CHECK(x.presentation.quiver.num_vertices() == 2);
    CHECK(x.presentation.quiver.num_arrows() == 4);
    CHECK(x.presentation.quiver.arrow(x.presentation.quiver.arrow_index("x")).src ==
          x.presentation.quiver.arrow(x.presentation.quiver.arrow_index("x")).tgt);
    CHECK(path_basis(x.presentation).dim() > 0);
    CHECK(catalog_presentation("Xprime", {}).presentation.quiver.num_arrows() == 3);

    CHECK_THROWS_AS(catalog_presentation("A{m}", {4, 2}), PreconditionError);
    CHECK_THROWS_AS(catalog_presentation("A{m}", {4, 4}), PreconditionError);
    CHECK_THROWS_AS(catalog_presentation("nope", {4, 0}), PreconditionError);
    CHECK(canonical_catalog_id("A{2,n−1}") == "A{2,n-1}");
    CHECK_THROWS_AS(verify_catalog("Xbre", {}), PreconditionError);
}

TEST_CASE("verify_catalog examples") {
    CHECK(verify_catalog("A{2,n}", {4, 0}).pass);
    CHECK(verify_catalog("A{m}", {5, 3}).pass);
    CHECK(verify_catalog("A{q,n}", {5, 0}).pass);
}

TEST_CASE("verify_catalog passes for every instance with n <= 8") {
    auto inst = catalog_instances(8);
    CHECK(inst.size() > 40);
    for (const auto& [id, params] : inst) {
        auto r = verify_catalog(id, params);
        INFO(id << " n=" << params.n << " m=" << params.m << ": " << r.message);
        CHECK(r.pass);
        auto e = catalog_presentation(id, params);
        std::vector<int> vs{1};
        vs.insert(vs.end(), e.X.begin(), e.X.end());
        CHECK(r.truncation_dim == hom_sum(params.n, vs));
    }
}

TEST_CASE("cover degrees make every multi-term relation homogeneous") {
    for (const auto& [id, params] : catalog_instances(8)) {
        auto e = catalog_presentation(id, params);
        if (!e.cover_degrees) continue;
        CHECK_NOTHROW(cover_window(e.presentation, *e.cover_degrees, 0, 2));
    }
    for (std::string id : {"B", "Abar"}) {
        auto e = catalog_presentation(id, {5, 0});
        REQUIRE(e.cover_degrees);
        CHECK_NOTHROW(cover_window(e.presentation, *e.cover_degrees, 0, 2));
    }
}

TEST_CASE("an infinite radical-square quotient never meets a finite verdict") {
    int infinite = 0;
    for (const auto& [id, params] : catalog_instances(8)) {
        auto e = catalog_presentation(id, params);
        if (rad_square_type(e.presentation) != RadSquareType::Infinite) continue;
        ++infinite;
        INFO(id << " n=" << params.n);
        CHECK(classify_auslander(params.n, e.X).rep_type.kind != Kind::Finite);
    }
    CHECK(infinite > 0);
}
