#include "rtl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "rtl/auslander_catalog.hpp"
#include "rtl/classifier.hpp"
#include "rtl/coxeter.hpp"
#include "rtl/io.hpp"
#include "rtl/quiver.hpp"
#include "rtl/rep_enum.hpp"

namespace rtl {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    bool known_deviation = false;
};

std::vector<NodeSet> subsets(int n) {
    std::vector<NodeSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        NodeSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

std::string fixture_path(const std::string& dir, const std::string& name) { return dir + "/" + name; }

Outcome tits_fixture(const std::string& dir) {
    Presentation p = presentation_from_json(load_json(fixture_path(dir, "eqeqnlm.json")));
    Fragment all;
    for (int v = 0; v < static_cast<int>(p.quiver.num_vertices()); ++v) all.vertices.push_back(v);
    for (int a = 0; a < static_cast<int>(p.quiver.num_arrows()); ++a) all.arrows.push_back(a);
    long long q = tits_form(p.quiver, relation_count_matrix(p, all), {1, 2, 2, 2, 2});
    return {q == -1, "q(1,2,2,2,2) = " + std::to_string(q) + ", expected -1"};
}

Outcome theorem_table(const std::string& dir) {
    auto rows = load_json(fixture_path(dir, "theorem1_table.json")).at("triples");
    std::set<std::string> labels;
    int wild = 0, mismatches = 0;
    bool g2 = false, a4 = false, d4 = false;
    std::string first_bad;
    for (const auto& row : rows) {
        TripleSpec t = triple_from_json(row);
        auto r = classify_triple(t);
        const std::string type = row.at("type"), label = row.at("case");
        if (kind_name(r.rep_type.kind) != type || r.case_label != label) {
            if (mismatches++ == 0) first_bad = row.dump() + " gave " + r.case_label;
        }
        labels.insert(label);
        if (type != "wild") continue;
        ++wild;
        const auto& d = t.diagram;
        g2 = g2 || (d.family == Family::G && t.g.size() == 1 && t.h.size() == 1);
        a4 = a4 || (d.family == Family::A && d.rank == 4 && type_string(induced_type(d, t.g)) == "A2");
        d4 = d4 || (d.family == Family::D && d.rank == 4 && t.h.size() < 4);
    }
    std::vector<std::string> missing;
    for (std::string l : {"tm.1.1", "tm.1.2", "tm.1.3", "tm.1.4", "tm.1.5", "tm.1.6", "tm.1.7", "tm.1.8", "tm.2.1",
                          "tm.2.2", "tm.2.3", "tm.2.4", "tm.2.5", "tm.2.7"})
        if (!labels.count(l)) missing.push_back(l);
    std::ostringstream os;
    os << rows.size() << " rows, " << wild << " wild, " << mismatches << " mismatches";
    if (!first_bad.empty()) os << " (first: " << first_bad << ")";
    for (const auto& l : missing) os << ", missing " << l;
    if (!g2) os << ", no (G2,A1,A1) row";
    if (!a4) os << ", no (A4,A2,*) row";
    if (!d4) os << ", no D4 row with H != W";
    bool pass = rows.size() >= 30 && wild >= 8 && mismatches == 0 && missing.empty() && g2 && a4 && d4;
    return {pass, os.str()};
}

// Finite and tame lists for e_X A_n e_X, written out from the statement.
Kind auslander_oracle(int n, const std::set<int>& x) {
    bool finite = true;
    for (int v : x) finite = finite && (v == 2 || v == n);
    if (finite) return Kind::Finite;
    auto is = [&](std::set<int> s) { return x == s; };
    if (n > 3 && (is({3}) || is({2, 3}) || is({n - 1}) || is({n - 1, n}))) return Kind::Tame;
    if (n == 4 && is({2, 3, 4})) return Kind::Tame;
    return Kind::Wild;
}

Outcome auslander_exhaustive(const std::string&) {
    int checked = 0, bad = 0;
    std::string first;
    for (int n = 2; n <= 8; ++n)
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            NodeSet X;
            for (int i = 0; i < n - 1; ++i)
                if (mask >> i & 1) X.push_back(i + 2);
            Kind want = auslander_oracle(n, std::set<int>(X.begin(), X.end()));
            Kind got = classify_auslander(n, X).rep_type.kind;
            ++checked;
            if (got != want && bad++ == 0) first = "n=" + std::to_string(n) + " X={" + join(X) + "}";
        }
    std::string detail = std::to_string(checked) + " pairs (n,X), " + std::to_string(bad) + " disagreements";
    if (!first.empty()) detail += ", first " + first;
    return {bad == 0, detail};
}

Outcome cross_validation_sweep(const std::string&) {
    struct D {
        Family f;
        int n;
    };
    std::vector<D> diagrams;
    for (int n = 1; n <= 7; ++n) diagrams.push_back({Family::A, n});
    for (int n = 2; n <= 5; ++n) diagrams.push_back({Family::B, n});
    for (int n = 2; n <= 5; ++n) diagrams.push_back({Family::C, n});
    diagrams.push_back({Family::G, 2});
    const std::set<std::string> cases{"cwg.I", "cwg.II", "cwg.III", "cwg.IV", "cwg.V"};
    int checked = 0, bad = 0;
    std::string first;
    for (auto [f, n] : diagrams) {
        CoxeterDiagram d = build_diagram(f, n);
        GroupTable table = enumerate_group(d, 50000);
        for (const auto& g : subsets(n)) {
            if (!cases.count(cwg_type(d, g).case_label)) continue;
            for (const auto& h : subsets(n)) {
                auto c = cross_validate({d, g, h}, table);
                ++checked;
                if (!c.agree && bad++ == 0) first = d.name() + " g={" + join(g) + "} h={" + join(h) + "}";
            }
        }
    }
    std::string detail = std::to_string(checked) + " triples, " + std::to_string(bad) + " disagreements";
    if (!first.empty()) detail += ", first " + first;
    return {bad == 0 && checked > 0, detail};
}

Outcome separated_certificates(const std::string&) {
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& [id, params] : catalog_instances(8)) {
        if (id != "A{m}" && id != "A{3,m}") continue;
        Presentation p = catalog_presentation(id, params).presentation;
        ++checked;
        const std::string tag = id + " n=" + std::to_string(params.n) + " m=" + std::to_string(params.m);
        if (rad_square_type(p) != RadSquareType::Infinite) bad.push_back(tag + " not infinite");
        if (id == "A{m}") {
            auto comps = recognize_graph(separated_quiver(p));
            if (comps.size() != 1 || comps[0].name() != "~A3") bad.push_back(tag + " separated graph is not ~A3");
        }
    }
    std::string detail = std::to_string(checked) + " presentations";
    for (const auto& b : bad) detail += "; " + b;
    return {bad.empty() && checked > 0, detail};
}

// Window [0, 1] of the cover of the radical-square-zero quotient with every arrow in degree 1:
// a hereditary copy of the separated quiver.
Presentation separated_window(const Presentation& p) {
    Presentation r = rad_square_zero_quotient(p);
    return cover_window(r, DegreeMap(r.quiver.num_arrows(), 1), 0, 1);
}

struct BoundFragment {
    Presentation window;
    Fragment fragment;
    Presentation presentation;  // the full subcategory on the fragment vertices
};

BoundFragment bound_fragment(Presentation window, const std::vector<std::string>& names) {
    BoundFragment out;
    const Quiver& q = window.quiver;
    std::vector<char> in(q.num_vertices(), 0);
    for (const auto& n : names) in[q.vertex_index(n)] = 1;
    for (int v = 0; v < static_cast<int>(q.num_vertices()); ++v)
        if (in[v]) out.fragment.vertices.push_back(v);
    for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a)
        if (in[q.arrow(a).src] && in[q.arrow(a).tgt]) out.fragment.arrows.push_back(a);
    out.presentation.quiver = fragment_quiver(window, out.fragment);
    const Quiver& fq = out.presentation.quiver;
    for (const auto& r : window.relations) {
        Relation local;
        bool inside = true;
        for (const auto& t : r.terms) {
            Term lt{t.c, {}};
            for (int a : t.path) {
                inside = inside && in[q.arrow(a).src] && in[q.arrow(a).tgt];
                if (inside) lt.path.push_back(fq.arrow_index(q.arrow(a).id));
            }
            local.terms.push_back(std::move(lt));
        }
        if (inside) out.presentation.relations.push_back(std::move(local));
    }
    out.window = std::move(window);
    return out;
}

// B has no wild hereditary fragment: its wild fragment in the universal cover keeps one
// commutative square. The universal cover is graded by Z^2 (x, y in one direction, b in the
// other); the Z-cover with deg b = 10 separates the two directions over the range needed, so
// the ten vertices below span a full subcategory isomorphic to that fragment. Its Tits form is
// negative at a positive vector, which rules out tameness.
struct TitsCertificate {
    bool full = false;  // Cartan matrices of eAe and of the fragment agree
    bool hereditary_found = false;
    long long value = 0;
    std::size_t vertices = 0, arrows = 0, relations = 0;
};

TitsCertificate b_tits_certificate() {
    auto b = catalog_presentation("B", {});
    const std::vector<std::pair<std::string, long long>> d{{"m_-8", 6}, {"1_-7", 2}, {"m_-7", 4}, {"1_-6", 1},
                                                           {"m_-1", 4}, {"1_0", 6},  {"m_0", 8},  {"1_1", 10},
                                                           {"m_1", 6},  {"1_2", 8}};
    std::vector<std::string> names;
    for (const auto& [n, x] : d) names.push_back(n);
    BoundFragment f = bound_fragment(cover_window(b.presentation, {0, 10, 1, 1}, -8, 2), names);
    TitsCertificate c;
    c.vertices = f.fragment.vertices.size();
    c.arrows = f.fragment.arrows.size();
    c.relations = f.presentation.relations.size();
    c.full = idempotent_truncation(path_basis(f.window), f.fragment.vertices).cartan() ==
             path_basis(f.presentation).cartan();
    c.hereditary_found = find_wild_hereditary_fragment(f.presentation, 10).has_value();
    std::vector<long long> dims;
    for (int v : f.fragment.vertices) {
        const std::string& name = f.window.quiver.vertex(v);
        for (const auto& [n, x] : d)
            if (n == name) dims.push_back(x);
    }
    c.value = tits_form(f.presentation.quiver, relation_count_matrix(f.window, f.fragment), dims);
    return c;
}

Outcome wild_fragments(const std::string& dir) {
    struct Case {
        std::string name;
        Presentation window;
        int max_vertices;
    };
    std::vector<Case> cases;
    for (int n = 5; n <= 8; ++n)
        for (int m = 5; m <= n; ++m)
            cases.push_back({"A{3,m} n=" + std::to_string(n) + " m=" + std::to_string(m),
                             separated_window(catalog_presentation("A{3,m}", {n, m}).presentation), 8});
    // The fragment for A{2,n-1} runs from m_0 down t to 2_{n-3}: window [0, n-3], 2n-4 vertices.
    for (int n = 5; n <= 8; ++n) {
        auto e = catalog_presentation("A{2,n-1}", {n, 0});
        cases.push_back({"A{2,n-1} n=" + std::to_string(n),
                         cover_window(e.presentation, *e.cover_degrees, 0, std::max(2, n - 3)), std::max(8, 2 * n - 4)});
    }
    auto e = catalog_presentation("A{3,4}_5", {5, 0});
    cases.push_back({"A{3,4}_5", cover_window(e.presentation, *e.cover_degrees, 0, 2), 8});
    auto b = catalog_presentation("B", {});
    cases.push_back({"B", cover_window(b.presentation, *b.cover_degrees, 0, 4), 10});
    for (std::string f : {"wconf1.json", "wconf2.json"})
        cases.push_back({f, separated_window(presentation_from_json(load_json(fixture_path(dir, f)))), 8});

    std::vector<std::string> missing, slow;
    double worst = 0;
    for (const auto& c : cases) {
        auto start = std::chrono::steady_clock::now();
        auto frag = find_wild_hereditary_fragment(c.window, c.max_vertices);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        worst = std::max(worst, s);
        if (!frag) missing.push_back(c.name);
        if (s > 10) slow.push_back(c.name);
    }
    std::ostringstream os;
    os << cases.size() - missing.size() << "/" << cases.size() << " certificates, slowest " << worst << "s";
    for (const auto& m : missing) os << "; none for " << m;
    for (const auto& m : slow) os << "; over 10s for " << m;
    Outcome out{missing.empty() && slow.empty(), ""};
    if (missing == std::vector<std::string>{"B"} && slow.empty()) {
        TitsCertificate t = b_tits_certificate();
        os << " (its wild fragment is not hereditary; substitute: bound fragment with " << t.vertices << " vertices, "
           << t.arrows << " arrows, " << t.relations << " relation, full subcategory " << (t.full ? "yes" : "no")
           << ", hereditary certificate " << (t.hereditary_found ? "found" : "none") << ", Tits form " << t.value
           << ")";
        out.known_deviation = t.full && !t.hereditary_found && t.value < 0;
    }
    out.detail = os.str();
    return out;
}

Outcome catalog_integrity(const std::string&) {
    auto instances = catalog_instances(8);
    std::vector<std::string> bad;
    for (const auto& [id, params] : instances) {
        auto r = verify_catalog(id, params);
        if (!r.pass) bad.push_back(id + " n=" + std::to_string(params.n) + ": " + r.message);
    }
    std::string detail = std::to_string(instances.size()) + " instances, " + std::to_string(bad.size()) + " failures";
    if (!bad.empty()) detail += "; " + bad.front();
    return {bad.empty() && !instances.empty(), detail};
}

Outcome xyu_completeness(const std::string&) {
    Presentation p = catalog_presentation("Xprime", {}).presentation;
    auto fixture = xyu_fixture();
    std::vector<std::string> bad;
    std::set<std::vector<std::uint8_t>> canon;
    std::set<std::vector<int>> vectors;
    auto key = [](const FiniteFieldRep& r) {
        std::vector<std::uint8_t> k(r.dims.begin(), r.dims.end());
        for (const auto& m : r.mats) k.insert(k.end(), m.a.begin(), m.a.end());
        return k;
    };
    for (std::size_t i = 0; i < fixture.size(); ++i) {
        if (!check_relations(p, fixture[i])) bad.push_back("module " + std::to_string(i) + " breaks a relation");
        if (is_indecomposable(p, fixture[i]) != Indec::Yes) bad.push_back("module " + std::to_string(i) + " splits");
        canon.insert(key(canonical_form(p, fixture[i])));
        vectors.insert(fixture[i].dims);
    }
    if (fixture.size() != 9) bad.push_back(std::to_string(fixture.size()) + " modules instead of 9");
    if (canon.size() != fixture.size()) bad.push_back("isomorphic modules in the list");
    int extra = 0, unknown = 0;
    for (const auto& d : vectors) {
        for (const auto& c : enumerate_reps(p, d, 2).classes) {
            if (c.indecomposable == Indec::Unknown) ++unknown;
            if (c.indecomposable == Indec::Yes && !canon.count(key(c.rep))) ++extra;
        }
    }
    if (extra) bad.push_back(std::to_string(extra) + " indecomposables missing from the list");
    if (unknown) bad.push_back(std::to_string(unknown) + " classes undecided");
    std::string detail = std::to_string(fixture.size()) + " modules, " + std::to_string(vectors.size()) +
                         " dimension vectors enumerated";
    for (const auto& b : bad) detail += "; " + b;
    return {bad.empty(), detail};
}

// Checks the bound 2n-5 on the window of three periods of the cover of Abar, n = 4, by listing
// indecomposables up to total dimension 2n-4. The string 1_0 -> 2_0 -> 1_1 -> 2_1 -> 1_2 avoids
// every relation (only paths starting at 2 meet (ab)^2), so longer indecomposables exist and
// the criterion is expected to fail; see the README.
Outcome comparison_bound(const std::string&) {
    const int n = 4, bound = 2 * n - 5;
    auto e = catalog_presentation("Abar", {n, 0});
    Presentation w = cover_window(e.presentation, *e.cover_degrees, 0, 2);
    auto list = indecomposables_up_to(w, bound + 1, 2);
    int over = 0, unknown = 0;
    std::string witness;
    for (const auto& c : list.classes) {
        if (c.indecomposable == Indec::Unknown) ++unknown;
        if (c.indecomposable != Indec::Yes || c.rep.total_dim() <= bound) continue;
        if (over++ == 0) {
            for (std::size_t v = 0; v < c.rep.dims.size(); ++v)
                if (c.rep.dims[v]) witness += (witness.empty() ? "" : ",") + w.quiver.vertex(static_cast<int>(v));
        }
    }
    std::ostringstream os;
    os << list.classes.size() << " classes up to total dimension " << bound + 1 << ", " << over
       << " indecomposable above " << bound << ", " << list.gaps.size() << " gaps, " << unknown << " undecided";
    if (!witness.empty()) os << "; e.g. support {" << witness << "}";
    Outcome out{over == 0 && unknown == 0 && list.gaps.empty(), os.str()};
    out.known_deviation = over > 0;
    return out;
}

// Tame exactly for two components of types (A1,e,A1) twice, or (A1,e,A1) with (A1,e,e).
Kind product_oracle(const std::vector<nlohmann::json>& rows) {
    if (rows.size() != 2) return Kind::Wild;
    auto is = [](const nlohmann::json& r, std::size_t hsize) {
        return r.at("family") == "A" && r.at("rank") == 1 && r.at("g").empty() && r.at("h").size() == hsize;
    };
    int with_h = 0, without_h = 0;
    for (const auto& r : rows) {
        with_h += is(r, 1);
        without_h += is(r, 0);
    }
    return (with_h == 2 || (with_h == 1 && without_h == 1)) ? Kind::Tame : Kind::Wild;
}

Outcome products(const std::string& dir) {
    std::vector<nlohmann::json> pool;
    const nlohmann::json table = load_json(fixture_path(dir, "theorem1_table.json"));
    for (const auto& row : table.at("triples"))
        if (row.at("type") != "wild" && row.at("case") != "tm.1.1") pool.push_back(row);
    int checked = 0, bad = 0, tame = 0;
    std::string first;
    auto check = [&](const std::vector<nlohmann::json>& rows) {
        std::vector<TripleSpec> specs;
        for (const auto& r : rows) specs.push_back(triple_from_json(r));
        Kind got = classify_product(specs).rep_type.kind;
        Kind want = product_oracle(rows);
        ++checked;
        tame += want == Kind::Tame;
        if (got != want && bad++ == 0) {
            first.clear();
            for (const auto& r : rows) first += r.dump() + " ";
        }
    };
    const std::size_t k = pool.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            check({pool[i], pool[j]});
            for (std::size_t l = j; l < k; ++l) check({pool[i], pool[j], pool[l]});
        }
    std::string detail = std::to_string(checked) + " products from " + std::to_string(k) + " components, " +
                         std::to_string(tame) + " tame, " + std::to_string(bad) + " disagreements";
    if (!first.empty()) detail += ", first " + first;
    return {bad == 0 && tame == 2, detail};
}

bool shape_matches_form(const Graph& g) {
    GraphClass c = recognize_connected(g);
    FormClass f = form_definiteness(g);
    switch (c.kind) {
        case GraphClass::Kind::Dynkin: return f.kind == Definiteness::PositiveDefinite;
        case GraphClass::Kind::ExtendedDynkin:
            return f.kind == Definiteness::PositiveSemidefinite && f.corank == 1;
        case GraphClass::Kind::Neither:
            return f.kind == Definiteness::Indefinite || (f.kind == Definiteness::PositiveSemidefinite && f.corank > 1);
    }
    return false;
}

Outcome graph_oracle(const std::string&) {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
    int checked = 0, bad = 0;
    std::string problems;
    for (int n = 1; n <= 8; ++n) {
        auto graphs = connected_simple_graphs(n);
        if (graphs.size() != expected[n - 1])
            problems += "; " + std::to_string(graphs.size()) + " graphs on " + std::to_string(n) + " vertices";
        for (const auto& g : graphs) {
            ++checked;
            bad += !shape_matches_form(g);
        }
    }
    // Loop-free multigraphs with edge multiplicity at most 2 on up to 4 vertices.
    for (int n = 2; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        int total = 1;
        for (int i = 0; i < pairs; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            Graph g;
            g.n = n;
            int c = code;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, c /= 3)
                    for (int m = 0; m < c % 3; ++m) g.edges.emplace_back(i, j);
            if (!is_connected(g)) continue;
            ++checked;
            bad += !shape_matches_form(g);
        }
    }
    return {bad == 0 && problems.empty(),
            std::to_string(checked) + " graphs, " + std::to_string(bad) + " disagreements" + problems};
}

struct Spec {
    const char* name;
    double limit;
    std::function<Outcome(const std::string&)> run;
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> all{
        {"Tits form of the commutative fragment", 0.001, tits_fixture},
        {"classification table", 1, theorem_table},
        {"truncated Auslander algebras, n <= 8", 1, auslander_exhaustive},
        {"cross-validation sweep", 60, cross_validation_sweep},
        {"separated quiver certificates", 1, separated_certificates},
        {"wild hereditary fragments", 120, wild_fragments},
        {"catalog integrity, n <= 8", 30, catalog_integrity},
        {"Xprime indecomposables", 60, xyu_completeness},
        {"comparison algebra dimension bound", 120, comparison_bound},
        {"tensor products", 1, products},
        {"shape and form recognition agree", 60, graph_oracle},
    };
    return all;
}

}  // namespace

CriterionResult run_criterion(int id, const std::string& fixtures_dir) {
    if (id < 1 || id > static_cast<int>(specs().size()))
        throw PreconditionError("acceptance criteria are numbered 1.." + std::to_string(specs().size()));
    const Spec& s = specs()[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = s.name;
    r.limit_seconds = s.limit;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = s.run(fixtures_dir);
    } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.known_deviation = !o.pass && o.known_deviation;
    r.detail = o.detail;
    if (r.seconds > r.limit_seconds) {
        r.pass = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::string& fixtures_dir) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= static_cast<int>(specs().size()); ++id) out.push_back(run_criterion(id, fixtures_dir));
    return out;
}

bool acceptance_ok(const std::vector<CriterionResult>& results, bool strict) {
    for (const auto& r : results)
        if (!r.pass && (strict || !r.known_deviation)) return false;
    return true;
}

nlohmann::json to_json(const CriterionResult& r) {
    return {{"id", r.id},          {"name", r.name},       {"pass", r.pass}, {"known_deviation", r.known_deviation},
            {"detail", r.detail},  {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}};
}

std::string format_table(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        char time[32];
        std::snprintf(time, sizeof time, "%.3fs/%gs", r.seconds, r.limit_seconds);
        os << (r.id < 10 ? " " : "") << r.id << "  "
           << (r.pass ? "PASS" : r.known_deviation ? "FAIL (documented deviation)" : "FAIL") << "  " << r.name
           << "  [" << time << "]  " << r.detail << "\n";
    }
    return os.str();
}

std::vector<std::pair<std::string, Presentation>> builtin_fixtures() {
    std::vector<std::pair<std::string, Presentation>> out;
    out.push_back({"eqh1.json", catalog_presentation("A{m}", {5, 3}).presentation});
    out.push_back({"equequ.json", catalog_presentation("A{2,n}", {5, 0}).presentation});
    out.push_back({"eqbre.json", catalog_presentation("Xbre", {}).presentation});

    Presentation frag;
    Quiver& q = frag.quiver;
    for (const char* v : {"w0", "w", "w0p", "wp", "w0pp"}) q.add_vertex(v);
    q.add_arrow("alpha1", 0, 1);
    q.add_arrow("x1", 0, 2);
    q.add_arrow("y", 1, 3);
    q.add_arrow("beta", 1, 4);
    q.add_arrow("alpha2", 2, 3);
    q.add_arrow("x2", 2, 4);
    frag.relations.push_back(make_relation(q, {{1, "alpha2 x1"}, {-1, "y alpha1"}}));
    out.push_back({"eqeqnlm.json", frag});

    // Two loops at one end of the pair alpha: w0 -> w, beta: w -> w0, modulo paths of length two.
    for (bool loops_at_w : {true, false}) {
        Presentation p;
        p.quiver.add_vertex("w0");
        p.quiver.add_vertex("w");
        p.quiver.add_arrow("alpha", 0, 1);
        p.quiver.add_arrow("beta", 1, 0);
        const int at = loops_at_w ? 1 : 0;
        const std::string name = loops_at_w ? "y" : "x";
        p.quiver.add_arrow(name + "1", at, at);
        p.quiver.add_arrow(name + "2", at, at);
        out.push_back({loops_at_w ? "wconf1.json" : "wconf2.json", rad_square_zero_quotient(p)});
    }
    return out;
}

std::string default_fixtures_dir() {
    if (const char* env = std::getenv("RTL_FIXTURES")) return env;
    return RTL_FIXTURES_DIR;
}

}  // namespace rtl
