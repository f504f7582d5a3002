#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtl/auslander_catalog.hpp"
#include "rtl/classifier.hpp"
#include "rtl/coxeter.hpp"
#include "rtl/io.hpp"
#include "rtl/rep_enum.hpp"
#include "rtl/verify.hpp"

using namespace rtl;
using nlohmann::json;

namespace {

bool pretty = false;

// --pretty: flat objects as aligned "key  value" lines, anything nested as indented JSON.
void emit(const json& j) {
    if (!pretty) {
        std::cout << j.dump() << "\n";
        return;
    }
    bool flat = j.is_object();
    std::size_t width = 0;
    if (flat)
        for (auto& [k, v] : j.items()) {
            flat = flat && !v.is_structured();
            width = std::max(width, k.size());
        }
    if (!flat) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto& [k, v] : j.items())
        std::cout << k << std::string(width - k.size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
}

std::vector<int> int_list(const std::string& s) { return s.empty() ? std::vector<int>{} : parse_int_list(s); }

struct TripleArgs {
    std::string family, g, h, spec;
    int rank = 0;

    void add(CLI::App* c) {
        c->add_option("--family", family, "A, B, C, D, E, F or G");
        c->add_option("--rank", rank);
        c->add_option("--g", g, "nodes of G, comma separated");
        c->add_option("--h", h, "nodes of H, comma separated");
        c->add_option("--spec", spec, "JSON file {\"family\",\"rank\",\"g\",\"h\"}");
    }
    TripleSpec get() const {
        if (!spec.empty()) return triple_from_json(load_json(spec));
        if (family.empty()) throw PreconditionError("give --family and --rank, or --spec");
        return triple_from_json({{"family", family}, {"rank", rank}, {"g", int_list(g)}, {"h", int_list(h)}});
    }
};

// A presentation from --in/--alg, or a catalog entry from --id with --n and --m.
struct AlgebraArgs {
    std::string file, id;
    int n = 0, m = 0;

    void add(CLI::App* c, const char* file_flag = "--in") {
        c->add_option(file_flag, file, "presentation JSON");
        c->add_option("--id", id, "catalog id, e.g. A{2,n}");
        c->add_option("--n", n);
        c->add_option("--m", m);
    }
    CatalogEntry get() const {
        if (!file.empty() == !id.empty()) throw PreconditionError("give exactly one of a presentation file or --id");
        if (!id.empty()) return catalog_presentation(id, {n, m});
        CatalogEntry e;
        e.id = std::filesystem::path(file).stem().string();
        e.presentation = presentation_from_json(load_json(file));
        return e;
    }
};

json graph_classes(const Graph& g) {
    json out = json::array();
    for (const auto& c : recognize_graph(g)) {
        json labels = json::array();
        for (int v : c.vertices) labels.push_back(v < static_cast<int>(g.labels.size()) ? g.labels[v] : std::to_string(v));
        out.push_back({{"class", c.name()}, {"vertices", labels}});
    }
    return out;
}

std::string definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "positive definite";
        case Definiteness::PositiveSemidefinite: return "positive semidefinite";
        case Definiteness::Indefinite: return "indefinite";
    }
    return "?";
}

std::vector<int> vertex_list(const Quiver& q, const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(q.vertex_index(item));
    return out;
}

json iso_class_json(const Presentation& p, const IsoClass& c) {
    json j = rep_to_json(p, c.rep);
    j["orbit_size"] = c.orbit_size;
    j["end_dim"] = c.end_dim;
    j["indecomposable"] = indec_name(c.indecomposable);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Representation type of algebras from Coxeter triples and truncated Auslander algebras"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.add_flag("--pretty", pretty, "human-readable output");

    // classify
    auto* classify = app.add_subcommand("classify", "representation type verdicts")->require_subcommand(1);
    TripleArgs triple_args;
    auto* triple = classify->add_subcommand("triple", "type of a triple (W, G, H)");
    triple_args.add(triple);
    triple->callback([&] { emit(to_json(classify_triple(triple_args.get()))); });

    int aus_n = 0;
    std::string aus_x;
    auto* aus = classify->add_subcommand("auslander", "type of e_X A_n e_X");
    aus->add_option("--n", aus_n)->required();
    aus->add_option("--x", aus_x, "X, a subset of 2..n");
    aus->callback([&] { emit(to_json(classify_auslander(aus_n, normalize(int_list(aus_x))))); });

    std::string product_spec;
    auto* product = classify->add_subcommand("product", "type of a tensor product of triple algebras");
    product->add_option("--spec", product_spec, "JSON array of triples, or {\"components\": [...]}")->required();
    product->callback([&] {
        json j = load_json(product_spec);
        const json& list = j.is_object() ? j.at("components") : j;
        std::vector<TripleSpec> specs;
        for (const auto& t : list) specs.push_back(triple_from_json(t));
        emit(to_json(classify_product(specs)));
    });

    TripleArgs cv_args;
    auto* cv = classify->add_subcommand("cross-validate", "pattern verdict against the coset chain");
    cv_args.add(cv);
    cv->callback([&] { emit(to_json(cross_validate(cv_args.get(), caps_from_env().group_order))); });

    // quiver
    auto* quiver = app.add_subcommand("quiver", "quiver and graph tools")->require_subcommand(1);
    std::string tits_in, tits_dims;
    auto* tits = quiver->add_subcommand("tits", "Tits form of a presentation at a dimension vector");
    tits->add_option("--in", tits_in)->required();
    tits->add_option("--dims", tits_dims)->required();
    tits->callback([&] {
        Presentation p = presentation_from_json(load_json(tits_in));
        Fragment all;
        for (int v = 0; v < static_cast<int>(p.quiver.num_vertices()); ++v) all.vertices.push_back(v);
        for (int a = 0; a < static_cast<int>(p.quiver.num_arrows()); ++a) all.arrows.push_back(a);
        std::vector<long long> d;
        for (int x : parse_int_list(tits_dims)) d.push_back(x);
        if (d.size() != p.quiver.num_vertices())
            throw PreconditionError("--dims needs " + std::to_string(p.quiver.num_vertices()) + " entries");
        emit(tits_form(p.quiver, relation_count_matrix(p, all), d));
    });
    std::string rec_in;
    auto* recognize = quiver->add_subcommand("recognize", "Dynkin / extended Dynkin recognition per component");
    recognize->add_option("--in", rec_in)->required();
    recognize->callback([&] {
        Graph g = graph_from_json(load_json(rec_in));
        json forms = json::array();
        for (const auto& comp : connected_components(g)) {
            FormClass f = form_definiteness(induced_subgraph(g, comp));
            forms.push_back({{"form", definiteness_name(f.kind)}, {"corank", f.corank}});
        }
        emit({{"components", graph_classes(g)}, {"forms", forms}});
    });

    // algebra
    auto* algebra = app.add_subcommand("algebra", "bound quiver algebras")->require_subcommand(1);
    AlgebraArgs basis_args;
    int degree_cap = 0;
    auto* basis = algebra->add_subcommand("basis", "path basis and Cartan matrix");
    basis_args.add(basis);
    basis->add_option("--degree-cap", degree_cap);
    basis->callback([&] {
        auto e = basis_args.get();
        AlgebraTable t = path_basis(e.presentation, std::nullopt, degree_cap > 0 ? degree_cap : caps_from_env().degree);
        json elems = json::array();
        for (std::size_t i = 0; i < t.dim(); ++i) elems.push_back(t.display(static_cast<int>(i)));
        emit({{"dim", t.dim()}, {"vertices", t.vertices}, {"cartan", t.cartan()}, {"basis", elems}});
    });

    AlgebraArgs trunc_args;
    std::string trunc_vertices;
    auto* truncate = algebra->add_subcommand("truncate", "dimension and Cartan matrix of eAe");
    trunc_args.add(truncate);
    truncate->add_option("--vertices", trunc_vertices, "vertex labels of e, comma separated")->required();
    truncate->callback([&] {
        auto e = trunc_args.get();
        AlgebraTable t = path_basis(e.presentation, std::nullopt, caps_from_env().degree);
        AlgebraTable s = idempotent_truncation(t, vertex_list(e.presentation.quiver, trunc_vertices));
        emit({{"dim", s.dim()}, {"vertices", s.vertices}, {"cartan", s.cartan()}});
    });

    AlgebraArgs sep_args;
    auto* separated = algebra->add_subcommand("separated", "separated quiver and radical-square-zero type");
    sep_args.add(separated);
    separated->callback([&] {
        auto e = sep_args.get();
        Graph g = separated_quiver(e.presentation);
        bool infinite = rad_square_type(e.presentation) == RadSquareType::Infinite;
        emit({{"graph", graph_to_json(g)}, {"components", graph_classes(g)}, {"rad_square_type", infinite ? "infinite" : "finite"}});
    });

    AlgebraArgs cover_args;
    std::string cover_degrees;
    int lo = 0, hi = 2;
    auto* cover = algebra->add_subcommand("cover", "window of the Z-cover as a presentation");
    cover_args.add(cover);
    cover->add_option("--degrees", cover_degrees, "arrow degrees in arrow order (default: the catalog grading)");
    cover->add_option("--lo", lo);
    cover->add_option("--hi", hi);
    auto degrees_for = [](const CatalogEntry& e, const std::string& given) {
        if (!given.empty()) return DegreeMap(parse_int_list(given));
        if (e.cover_degrees) return *e.cover_degrees;
        throw PreconditionError(e.id + " has no default grading; give --degrees");
    };
    cover->callback([&] {
        auto e = cover_args.get();
        emit(presentation_to_json(cover_window(e.presentation, degrees_for(e, cover_degrees), lo, hi)));
    });

    AlgebraArgs frag_args;
    std::string frag_degrees;
    int frag_lo = 0, frag_hi = 2, max_vertices = 8;
    bool use_window = false, use_rad2 = false;
    auto* fragment = algebra->add_subcommand("fragment", "search for a wild hereditary fragment");
    frag_args.add(fragment);
    fragment->add_flag("--window", use_window, "search a cover window instead of the algebra itself");
    fragment->add_flag("--rad2", use_rad2, "pass to the radical-square-zero quotient first (window degrees 1, [0,1])");
    fragment->add_option("--degrees", frag_degrees);
    fragment->add_option("--lo", frag_lo);
    fragment->add_option("--hi", frag_hi);
    fragment->add_option("--max-vertices", max_vertices);
    fragment->callback([&] {
        auto e = frag_args.get();
        Presentation p = e.presentation;
        if (use_rad2) {
            p = rad_square_zero_quotient(p);
            p = cover_window(p, DegreeMap(p.quiver.num_arrows(), 1), 0, 1);
        } else if (use_window) {
            p = cover_window(p, degrees_for(e, frag_degrees), frag_lo, frag_hi);
        }
        auto f = find_wild_hereditary_fragment(p, max_vertices);
        if (!f) {
            emit({{"found", false}});
            return;
        }
        json vs = json::array(), as = json::array();
        for (int v : f->vertices) vs.push_back(p.quiver.vertex(v));
        for (int a : f->arrows) as.push_back(p.quiver.arrow(a).id);
        emit({{"found", true}, {"vertices", vs}, {"arrows", as}, {"graph", f->graph_class.name()}});
    });

    std::string present_id, emit_format = "json";
    int present_n = 0, present_m = 0;
    auto* present = algebra->add_subcommand("present", "catalog presentation");
    present->add_option("--id", present_id)->required();
    present->add_option("--n", present_n);
    present->add_option("--m", present_m);
    present->add_option("--emit", emit_format)->check(CLI::IsMember({"json", "text"}));
    present->callback([&] {
        auto e = catalog_presentation(present_id, {present_n, present_m});
        if (emit_format == "json") {
            emit(presentation_to_json(e.presentation));
            return;
        }
        const Quiver& q = e.presentation.quiver;
        for (const auto& a : q.arrows()) std::cout << a.id << ": " << q.vertex(a.src) << " -> " << q.vertex(a.tgt) << "\n";
        for (const auto& r : e.presentation.relations) std::cout << display_relation(q, r) << " = 0\n";
    });

    std::string check_id;
    int check_n = 0, check_m = 0;
    auto* check = algebra->add_subcommand("verify", "check a catalog presentation against e_X A_n e_X");
    check->add_option("--id", check_id)->required();
    check->add_option("--n", check_n);
    check->add_option("--m", check_m);
    check->callback([&] {
        auto r = verify_catalog(check_id, {check_n, check_m});
        emit({{"id", r.id},
              {"n", r.params.n},
              {"m", r.params.m},
              {"catalog_dim", r.catalog_dim},
              {"truncation_dim", r.truncation_dim},
              {"relations_hold", r.relations_hold},
              {"image_rank", r.image_rank},
              {"pass", r.pass},
              {"message", r.message}});
    });

    // rep
    auto* rep = app.add_subcommand("rep", "finite-field representations")->require_subcommand(1);
    AlgebraArgs enum_args;
    std::string enum_dims;
    int enum_q = 2;
    auto* enumerate = rep->add_subcommand("enumerate", "isomorphism classes at a dimension vector");
    enum_args.add(enumerate, "--alg");
    enumerate->add_option("--dims", enum_dims)->required();
    enumerate->add_option("--q", enum_q)->check(CLI::Range(2, 5));
    enumerate->callback([&] {
        auto e = enum_args.get();
        auto r = enumerate_reps(e.presentation, parse_int_list(enum_dims), enum_q, enum_caps_from_env());
        json classes = json::array();
        for (const auto& c : r.classes) classes.push_back(iso_class_json(e.presentation, c));
        emit({{"dims", r.dims}, {"q", r.q}, {"solutions", r.solutions}, {"classes", classes}});
    });

    AlgebraArgs indec_args;
    int max_dim = 3, indec_q = 2;
    auto* indec = rep->add_subcommand("indec", "indecomposables up to a total dimension");
    indec_args.add(indec, "--alg");
    indec->add_option("--max-dim", max_dim);
    indec->add_option("--q", indec_q)->check(CLI::Range(2, 5));
    indec->callback([&] {
        auto e = indec_args.get();
        auto r = indecomposables_up_to(e.presentation, max_dim, indec_q, enum_caps_from_env());
        json classes = json::array(), gaps = json::array();
        for (const auto& c : r.classes) classes.push_back(iso_class_json(e.presentation, c));
        for (const auto& g : r.gaps) gaps.push_back({{"dims", g.dims}, {"reason", g.reason}});
        emit({{"count", r.classes.size()}, {"classes", classes}, {"gaps", gaps}});
    });

    auto* xyu = rep->add_subcommand("xyu", "the nine listed indecomposables of Xprime over GF(2)");
    xyu->callback([&] {
        Presentation p = catalog_presentation("Xprime", {}).presentation;
        json out = json::array();
        for (const auto& m : xyu_fixture()) out.push_back(rep_to_json(p, m));
        emit(out);
    });

    // fixtures
    std::string out_dir = default_fixtures_dir();
    auto* fixtures = app.add_subcommand("fixtures", "regenerate the presentation fixtures");
    fixtures->add_option("--out", out_dir);
    fixtures->callback([&] {
        std::filesystem::create_directories(out_dir);
        json written = json::array();
        for (const auto& [name, p] : builtin_fixtures()) {
            std::ofstream out(out_dir + "/" + name);
            if (!out) throw PreconditionError("cannot write " + out_dir + "/" + name);
            out << presentation_to_json(p).dump(2) << "\n";
            written.push_back(name);
        }
        emit({{"written", written}, {"dir", out_dir}});
    });

    // verify
    auto* verify = app.add_subcommand("verify", "acceptance suite")->require_subcommand(1);
    std::string fixtures_dir = default_fixtures_dir();
    bool as_json = false, strict = false;
    int criterion = 0;
    verify->add_option("--fixtures", fixtures_dir);
    verify->add_flag("--json", as_json, "JSON instead of the table");
    verify->add_flag("--strict", strict, "documented deviations also fail");
    int verify_status = 0;
    auto report = [&](const std::vector<CriterionResult>& results) {
        if (as_json) {
            json out = json::array();
            for (const auto& r : results) out.push_back(to_json(r));
            emit(out);
        } else {
            std::cout << format_table(results);
        }
        verify_status = acceptance_ok(results, strict) ? 0 : 1;
    };
    verify->add_subcommand("all", "every criterion")->callback([&] { report(run_acceptance(fixtures_dir)); });
    auto* one = verify->add_subcommand("criterion", "a single criterion");
    one->add_option("id", criterion)->required()->check(CLI::Range(1, 11));
    one->callback([&] { report({run_criterion(criterion, fixtures_dir)}); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return verify_status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
