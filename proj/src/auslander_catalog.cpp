#include "rtl/auslander_catalog.hpp"

#include <algorithm>

#include "rtl/common.hpp"

namespace rtl {

namespace {

std::string a_(int i) { return "a" + std::to_string(i); }
std::string b_(int i) { return "b" + std::to_string(i); }

// a_j ... a_i, the path i -> j+1 along the a-arrows
std::string chain_a(int i, int j) {
    std::string s;
    for (int k = j; k >= i; --k) s += (s.empty() ? "" : " ") + a_(k);
    return s;
}

// b_i ... b_j, the path j+1 -> i along the b-arrows
std::string chain_b(int i, int j) {
    std::string s;
    for (int k = i; k <= j; ++k) s += (s.empty() ? "" : " ") + b_(k);
    return s;
}

std::string pw(const std::string& w, int k) { return "(" + w + ")^" + std::to_string(k); }

struct Builder {
    CatalogEntry e;

    void vertex(const std::string& name, int auslander) {
        e.presentation.quiver.add_vertex(name);
        e.auslander_vertex.push_back(auslander);
    }
    void arrow(const std::string& id, const std::string& src, const std::string& tgt, const std::string& composite = "") {
        auto& q = e.presentation.quiver;
        q.add_arrow(id, q.vertex_index(src), q.vertex_index(tgt));
        e.composite.push_back(composite);
    }
    // lhs = rhs
    void equal(const std::string& lhs, const std::string& rhs) {
        e.presentation.relations.push_back(
            make_relation(e.presentation.quiver, {{mpq_class(1), lhs}, {mpq_class(-1), rhs}}));
    }
    void zero(const std::string& w) {
        e.presentation.relations.push_back(make_relation(e.presentation.quiver, {{mpq_class(1), w}}));
    }
};

void require(bool ok, const std::string& id, const std::string& range) {
    if (!ok) throw PreconditionError("catalog id " + id + " needs " + range);
}

}  // namespace

Presentation auslander_presentation(int n) {
    if (n < 2) throw PreconditionError("Auslander algebra needs n >= 2");
    Presentation p;
    for (int i = 1; i <= n; ++i) p.quiver.add_vertex(std::to_string(i));
    for (int i = 1; i < n; ++i) p.quiver.add_arrow(a_(i), i - 1, i);
    for (int i = 1; i < n; ++i) p.quiver.add_arrow(b_(i), i, i - 1);
    for (int i = 1; i + 1 < n; ++i)
        p.relations.push_back(make_relation(
            p.quiver, {{mpq_class(1), a_(i) + " " + b_(i)}, {mpq_class(-1), b_(i + 1) + " " + a_(i + 1)}}));
    p.relations.push_back(make_relation(p.quiver, {{mpq_class(1), a_(n - 1) + " " + b_(n - 1)}}));
    return p;
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids{"A{m}", "A{3,m}", "A{2,n-1}", "A{3,4}_5", "A{2,n}", "A{q,n}",
                                              "A{2,3}", "Xbre", "Xprime", "B", "Abar"};
    return ids;
}

std::string canonical_catalog_id(const std::string& id) {
    std::string s = id;
    const std::string minus = "\xE2\x88\x92";
    for (std::size_t pos; (pos = s.find(minus)) != std::string::npos;) s.replace(pos, minus.size(), "-");
    const auto& ids = catalog_ids();
    if (std::find(ids.begin(), ids.end(), s) == ids.end()) throw PreconditionError("unknown catalog id '" + id + "'");
    return s;
}

bool catalog_needs_m(const std::string& id) {
    std::string s = canonical_catalog_id(id);
    return s == "A{m}" || s == "A{3,m}";
}

CatalogEntry catalog_presentation(const std::string& raw_id, CatalogParams params) {
    const std::string id = canonical_catalog_id(raw_id);
    Builder bld;
    bld.e.id = id;
    const int n = params.n, m = params.m;

    if (id == "A{m}") {
        require(n >= 4 && m >= 3 && m <= n - 1, id, "n >= 4 and 3 <= m <= n-1");
        const std::string M = std::to_string(m);
        bld.vertex("1", 1);
        bld.vertex(M, m);
        bld.arrow("a", "1", M, chain_a(1, m - 1));
        bld.arrow("b", M, "1", chain_b(1, m - 1));
        bld.arrow("x", "1", "1", b_(1) + " " + a_(1));
        bld.arrow("y", M, M, b_(m) + " " + a_(m));
        bld.equal("a x", "y a");
        bld.equal("x b", "b y");
        bld.equal("a b", "y^" + std::to_string(m - 1));
        bld.equal("b a", "x^" + std::to_string(m - 1));
        bld.zero("y^" + std::to_string(n - m + 1));
        bld.e.X = {m};
    } else if (id == "A{3,m}") {
        require(m >= 5 && m <= n, id, "5 <= m <= n");
        const std::string M = std::to_string(m);
        bld.vertex("1", 1);
        bld.vertex("3", 3);
        bld.vertex(M, m);
        bld.arrow("a", "1", "3", chain_a(1, 2));
        bld.arrow("b", "3", "1", chain_b(1, 2));
        bld.arrow("s", "3", M, chain_a(3, m - 1));
        bld.arrow("t", M, "3", chain_b(3, m - 1));
        bld.arrow("x", "1", "1", b_(1) + " " + a_(1));
        bld.arrow("y", "3", "3", b_(3) + " " + a_(3));
        const bool has_z = m < n;
        if (has_z) bld.arrow("z", M, M, b_(m) + " " + a_(m));
        bld.equal("a x", "y a");
        bld.equal("x b", "b y");
        bld.equal("a b", "y^2");
        bld.equal("b a", "x^2");
        bld.equal("t s", "y^" + std::to_string(m - 3));
        if (has_z) {
            bld.equal("s y", "z s");
            bld.equal("y t", "t z");
            bld.equal("s t", "z^" + std::to_string(m - 3));
            bld.zero("z^" + std::to_string(n - m + 1));
        } else {
            bld.zero("s y");
            bld.zero("y t");
            bld.zero("s t");
        }
        bld.e.X = {3, m};
    } else if (id == "A{2,n-1}") {
        require(n >= 5, id, "n >= 5");
        const std::string M = std::to_string(n - 1);
        bld.vertex("1", 1);
        bld.vertex("2", 2);
        bld.vertex(M, n - 1);
        bld.arrow("a", "1", "2", a_(1));
        bld.arrow("b", "2", "1", b_(1));
        bld.arrow("s", "2", M, chain_a(2, n - 2));
        bld.arrow("t", M, "2", chain_b(2, n - 2));
        bld.arrow("x", M, M, b_(n - 1) + " " + a_(n - 1));
        bld.equal("s a b", "x s");
        bld.equal("a b t", "t x");
        bld.zero("s t");
        bld.equal("t s", pw("a b", n - 3));
        bld.zero("x^2");
        bld.e.X = {2, n - 1};
        bld.e.cover_degrees = DegreeMap{0, 1, 0, n - 3, 1};
    } else if (id == "A{3,4}_5") {
        require(n == 5 || n == 0, id, "n = 5");
        params.n = 5;
        bld.vertex("1", 1);
        bld.vertex("3", 3);
        bld.vertex("4", 4);
        bld.arrow("a", "1", "3", chain_a(1, 2));
        bld.arrow("b", "3", "1", chain_b(1, 2));
        bld.arrow("s", "3", "4", a_(3));
        bld.arrow("t", "4", "3", b_(3));
        bld.arrow("x", "1", "1", b_(1) + " " + a_(1));
        bld.equal("a x", "t s a");
        bld.equal("x b", "b t s");
        bld.equal("b a", "x^2");
        bld.equal("a b", "(t s)^2");
        bld.zero("(s t)^2");
        bld.e.X = {3, 4};
        bld.e.cover_degrees = DegreeMap{0, 2, 0, 1, 1};
    } else if (id == "A{2,n}") {
        require(n >= 4, id, "n >= 4");
        const std::string N = std::to_string(n);
        bld.vertex("1", 1);
        bld.vertex("2", 2);
        bld.vertex(N, n);
        bld.arrow("a", "1", "2", a_(1));
        bld.arrow("b", "2", "1", b_(1));
        bld.arrow("u", "2", N, chain_a(2, n - 1));
        bld.arrow("v", N, "2", chain_b(2, n - 1));
        bld.zero("u v");
        bld.zero("u a b");
        bld.zero("a b v");
        bld.equal("v u", pw("a b", n - 2));
        bld.e.X = {2, n};
        bld.e.cover_degrees = DegreeMap{0, 1, 0, n - 2};
    } else if (id == "A{q,n}") {
        require(n >= 4, id, "n >= 4");
        const int q = n - 1;
        const std::string Q = std::to_string(q), N = std::to_string(n);
        bld.vertex("1", 1);
        bld.vertex(Q, q);
        bld.vertex(N, n);
        bld.arrow("c", "1", "1", b_(1) + " " + a_(1));
        bld.arrow("u", "1", Q, chain_a(1, n - 2));
        bld.arrow("v", Q, "1", chain_b(1, n - 2));
        bld.arrow("a", Q, N, a_(q));
        bld.arrow("b", N, Q, b_(q));
        bld.zero("c^" + std::to_string(n));
        bld.zero("a b");
        bld.zero("u v");
        bld.equal("v u", "c^" + std::to_string(n - 2));
        bld.equal("c v", "v b a");
        bld.equal("u c", "b a u");
        bld.e.X = {q, n};
    } else if (id == "A{2,3}") {
        require(n >= 3, id, "n >= 3");
        bld.vertex("1", 1);
        bld.vertex("2", 2);
        bld.vertex("3", 3);
        bld.arrow("a", "1", "2", a_(1));
        bld.arrow("b", "2", "1", b_(1));
        bld.arrow("s", "2", "3", a_(2));
        bld.arrow("t", "3", "2", b_(2));
        bld.equal("a b", "t s");
        bld.zero(pw("s t", n - 2));
        bld.e.X = {2, 3};
    } else if (id == "Xbre" || id == "Xprime") {
        bld.vertex("1", 0);
        bld.vertex("2", 0);
        bld.arrow("x", "1", "1");
        bld.arrow("y", "2", "2");
        bld.arrow("u", "1", "2");
        if (id == "Xbre") bld.arrow("v", "2", "1");
        bld.zero("x^2");
        bld.zero("y^2");
        bld.equal("u x", "y u");
        if (id == "Xbre") {
            bld.zero("u v");
            bld.equal("x v", "v y");
        }
    } else if (id == "B") {
        bld.vertex("1", 0);
        bld.vertex("m", 0);
        bld.arrow("a", "1", "m");
        bld.arrow("b", "m", "1");
        bld.arrow("x", "1", "1");
        bld.arrow("y", "m", "m");
        bld.equal("a x", "y a");
        bld.equal("x b", "b y");
        bld.zero("a b");
        bld.zero("b a");
        bld.zero("x^3");
        bld.zero("y^3");
        bld.e.cover_degrees = DegreeMap{1, 1, 1, 1};
    } else {  // Abar
        require(n >= 4, id, "n >= 4");
        const std::string N = std::to_string(n);
        bld.vertex("1", 0);
        bld.vertex("2", 0);
        bld.vertex(N, 0);
        bld.vertex(N + "'", 0);
        bld.arrow("a", "1", "2");
        bld.arrow("b", "2", "1");
        bld.arrow("u", "2", N);
        bld.arrow("v", N + "'", "2");
        bld.zero("u v");
        bld.zero("u a b");
        bld.zero("a b v");
        bld.zero(pw("a b", n - 2));
        bld.e.cover_degrees = DegreeMap{0, 1, 0, 0};
    }
    bld.e.params = params;
    bld.e.is_truncation = !bld.e.X.empty();
    if (!bld.e.is_truncation) {
        bld.e.auslander_vertex.clear();
        bld.e.composite.clear();
    }
    return bld.e;
}

CatalogReport verify_catalog(const std::string& raw_id, CatalogParams params) {
    CatalogEntry e = catalog_presentation(raw_id, params);
    if (!e.is_truncation) throw PreconditionError("catalog id " + e.id + " is not a truncation of an Auslander algebra");
    CatalogReport rep;
    rep.id = e.id;
    rep.params = e.params;
    const int n = e.params.n;

    Presentation an = auslander_presentation(n);
    AlgebraTable full = path_basis(an);
    std::vector<int> subset{0};
    for (int x : e.X) subset.push_back(x - 1);
    rep.truncation_dim = idempotent_truncation(full, subset).dim();

    AlgebraTable cat = path_basis(e.presentation);
    rep.catalog_dim = cat.dim();

    // images of the catalog arrows in A_n
    const Quiver& cq = e.presentation.quiver;
    std::vector<SparseVec> img;
    for (std::size_t a = 0; a < cq.num_arrows(); ++a) {
        SparseVec v = full.path_vector(parse_word(an.quiver, e.composite[a]), -1);
        const Path p = parse_word(an.quiver, e.composite[a]);
        const int s = an.quiver.arrow(p.front()).src + 1, t = an.quiver.arrow(p.back()).tgt + 1;
        if (s != e.auslander_vertex[cq.arrow(a).src] || t != e.auslander_vertex[cq.arrow(a).tgt]) {
            rep.message = "composite for arrow " + cq.arrow(a).id + " has the wrong endpoints";
            return rep;
        }
        img.push_back(std::move(v));
    }
    auto image = [&](const Path& p, int src) {
        SparseVec v{{full.idempotent(e.auslander_vertex[src] - 1), mpq_class(1)}};
        for (int a : p) v = full.multiply(img[a], v);
        return v;
    };
    rep.relations_hold = true;
    for (const auto& r : e.presentation.relations) {
        SparseVec acc;
        for (const auto& t : r.terms) add_scaled(acc, image(t.path, cq.arrow(t.path.front()).src), t.c);
        if (!acc.empty()) {
            rep.relations_hold = false;
            rep.message = "relation starting with " + display_path(cq, r.terms.front().path) + " does not hold in A_n";
        }
    }
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& b : cat.basis) {
        std::vector<mpq_class> row(full.dim(), 0);
        for (const auto& [k, c] : image(b.path, b.src)) row[k] = c;
        rows.push_back(std::move(row));
    }
    rep.image_rank = rref(rows).size();
    rep.pass = rep.relations_hold && rep.catalog_dim == rep.truncation_dim && rep.image_rank == rep.catalog_dim;
    if (!rep.pass && rep.message.empty())
        rep.message = "dimension " + std::to_string(rep.catalog_dim) + " vs truncation " +
                      std::to_string(rep.truncation_dim) + ", image rank " + std::to_string(rep.image_rank);
    return rep;
}

std::vector<std::pair<std::string, CatalogParams>> catalog_instances(int max_n) {
    std::vector<std::pair<std::string, CatalogParams>> out;
    for (int n = 2; n <= max_n; ++n) {
        for (int m = 3; m <= n - 1; ++m)
            if (n >= 4) out.push_back({"A{m}", {n, m}});
        for (int m = 5; m <= n; ++m) out.push_back({"A{3,m}", {n, m}});
        if (n >= 5) out.push_back({"A{2,n-1}", {n, 0}});
        if (n == 5) out.push_back({"A{3,4}_5", {5, 0}});
        if (n >= 4) out.push_back({"A{2,n}", {n, 0}});
        if (n >= 4) out.push_back({"A{q,n}", {n, 0}});
        if (n >= 3) out.push_back({"A{2,3}", {n, 0}});
    }
    return out;
}

}  // namespace rtl
