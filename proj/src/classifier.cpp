#include "rtl/classifier.hpp"

#include <algorithm>
#include <functional>

namespace rtl {

namespace {

NodeSet range(int lo, int hi) {
    NodeSet s;
    for (int i = lo; i <= hi; ++i) s.push_back(i);
    return s;
}

NodeSet all_but(int n, int skip) {
    NodeSet s;
    for (int i = 1; i <= n; ++i)
        if (i != skip) s.push_back(i);
    return s;
}

void check_subset(const CoxeterDiagram& d, const NodeSet& s, const char* what) {
    for (int v : s)
        if (v < 1 || v > d.rank)
            throw PreconditionError(std::string(what) + ": node " + std::to_string(v) + " not in 1.." +
                                    std::to_string(d.rank));
}

ClassificationResult result(Kind k, std::string label, std::string why, bool semisimple = false) {
    return {{k, semisimple}, std::move(label), std::move(why)};
}

using Match = std::function<bool(const NodeSet&, const NodeSet&)>;

// True if some automorphism image of (g, h) satisfies m.
bool matches(const std::vector<std::vector<int>>& autos, const NodeSet& g, const NodeSet& h, const Match& m) {
    for (const auto& p : autos)
        if (m(apply_perm(p, g), apply_perm(p, h))) return true;
    return false;
}

bool rank2(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::G; }

}  // namespace

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Finite: return "finite";
        case Kind::Tame: return "tame";
        case Kind::Wild: return "wild";
    }
    return "wild";
}

nlohmann::json to_json(const ClassificationResult& r) {
    return {{"type", kind_name(r.rep_type.kind)}, {"case", r.case_label}, {"justification", r.justification}};
}

ClassificationResult cwg_type(const CoxeterDiagram& d, const NodeSet& g_in) {
    check_subset(d, g_in, "g");
    const NodeSet g = normalize(g_in);
    const int n = d.rank;
    const Family f = d.family;
    const auto autos = diagram_automorphisms(d);
    auto is = [&](const NodeSet& target) {
        return matches(autos, g, {}, [&](const NodeSet& a, const NodeSet&) { return a == target; });
    };

    if (g == range(1, n)) return result(Kind::Finite, "cwg.I", "G = W");
    if (f == Family::A && is(range(1, n - 1)))
        return result(Kind::Finite, "cwg.II", "(A_n, A_{n-1}): end segment of the path");
    // B_1 and C_1 are A_1, so in rank 2 either node is accepted.
    if ((f == Family::B || f == Family::C) && (is(range(2, n)) || (n == 2 && g.size() == 1)))
        return result(Kind::Finite, f == Family::B ? "cwg.III" : "cwg.IV",
                      std::string("(") + family_char(f) + "_n, " + family_char(f) + "_{n-1})");
    if (f == Family::G && g.size() == 1) return result(Kind::Finite, "cwg.V", "(G_2, A_1), either node");
    if (n == 2 && rank2(f) && g.empty()) return result(Kind::Tame, "cwg.VI", "rank 2 with G = e");
    if (f == Family::A && n == 3 && g == NodeSet{1, 3}) return result(Kind::Tame, "cwg.VII", "(A_3, A_1 x A_1)");
    if (f == Family::B && n == 3 && g == NodeSet{1, 2}) return result(Kind::Tame, "cwg.VIII", "(B_3, A_2)");
    if (f == Family::C && n == 3 && g == NodeSet{1, 2}) return result(Kind::Tame, "cwg.IX", "(C_3, A_2)");
    if (f == Family::D && is(range(2, n))) return result(Kind::Tame, "cwg.X", "(D_n, D_{n-1})");
    return result(Kind::Wild, "cwg.wild", "not in the finite or tame list");
}

ClassificationResult classify_triple(const TripleSpec& spec) {
    const CoxeterDiagram& d = spec.diagram;
    check_subset(d, spec.g, "g");
    check_subset(d, spec.h, "h");
    const NodeSet g = normalize(spec.g), h = normalize(spec.h);
    const int n = d.rank;
    const Family f = d.family;
    const NodeSet all = range(1, n);
    const auto autos = diagram_automorphisms(d);
    auto any = [&](const Match& m) { return matches(autos, g, h, m); };
    const bool is_a = f == Family::A;
    const bool is_bc = f == Family::B || f == Family::C;
    const std::string fam(1, family_char(f));

    // Finite.
    if (g == all) return result(Kind::Finite, "tm.1.1", "W = G", true);
    if (h == all) {
        auto c = cwg_type(d, g);
        if (c.rep_type.kind == Kind::Finite)
            return result(Kind::Finite, "tm.1.2", "H = W and (W, G) is " + c.justification);
    }
    if (is_a && n == 1 && g.empty() && h.empty()) return result(Kind::Finite, "tm.1.3", "(A_1, e, e)");
    if (is_a && n >= 2 && any([&](const NodeSet& a, const NodeSet& b) {
            return a == range(1, n - 1) && (b == range(1, n - 1) || b == range(2, n));
        }))
        return result(Kind::Finite, "tm.1.4", "(A_n, A_{n-1}, A_{n-1})");
    if (is_a && n >= 3 &&
        any([&](const NodeSet& a, const NodeSet& b) { return a == range(1, n - 1) && b == range(2, n - 1); }))
        return result(Kind::Finite, "tm.1.5", "(A_n, A_{n-1}, A_{n-2}) with H missing the first and last nodes");
    if (is_bc && n == 2 && g.size() == 1 && g == h)
        return result(Kind::Finite, "tm.1.6", "(" + fam + "_2, A_1, A_1) with G = H");
    if (is_bc && n >= 3 && g == range(2, n) && h == g)
        return result(Kind::Finite, "tm.1.7", "(" + fam + "_n, " + fam + "_{n-1}, " + fam + "_{n-1}), n >= 3");
    if (is_a && n == 2 && g.size() == 1 && h.empty()) return result(Kind::Finite, "tm.1.8", "(A_2, A_1, e)");

    // Tame.
    if (h == all) {
        auto c = cwg_type(d, g);
        if (c.rep_type.kind == Kind::Tame)
            return result(Kind::Tame, "tm.2.1", "H = W and (W, G) is " + c.justification);
    }
    if (is_bc && n == 2 && g.size() == 1 && h.size() == 1 && g != h)
        return result(Kind::Tame, "tm.2.2", "(" + fam + "_2, A_1, A_1) with G != H");
    if (is_a && n > 2 && any([&](const NodeSet& a, const NodeSet& b) {
            return a == range(1, n - 1) && (b == all_but(n, 2) || b == all_but(n, n - 1));
        }))
        return result(Kind::Tame, "tm.2.3", "(A_n, A_{n-1}, A_1 x A_{n-2}), n > 2");
    if (is_a && n > 2 &&
        any([&](const NodeSet& a, const NodeSet& b) { return a == range(1, n - 1) && b == range(1, n - 2); }))
        return result(Kind::Tame, "tm.2.4", "(A_n, A_{n-1}, A_{n-2}) with H inside G at an end of the path");
    if (is_a && n > 2 &&
        any([&](const NodeSet& a, const NodeSet& b) { return a == range(1, n - 1) && b == range(3, n); }))
        return result(Kind::Tame, "tm.2.5", "(A_n, A_{n-1}, A_{n-2}) with H not inside G");
    if (h.empty() && ((is_a && n == 3 && any([&](const NodeSet& a, const NodeSet&) { return a == NodeSet{1, 2}; })) ||
                      (is_bc && n == 2 && g.size() == 1)))
        return result(Kind::Tame, "tm.2.7", "(" + d.name() + ", " + (is_a ? "A_2" : "A_1") + ", e)");

    return result(Kind::Wild, "tm.3", "no finite or tame pattern matches");
}

ClassificationResult classify_auslander(int n, const NodeSet& X_in) {
    if (n < 2) throw PreconditionError("classify_auslander needs n >= 2, got " + std::to_string(n));
    const NodeSet X = normalize(X_in);
    for (int x : X)
        if (x < 2 || x > n)
            throw PreconditionError("X must lie in {2.." + std::to_string(n) + "}, got " + std::to_string(x));
    const std::string xs = "X = {" + join(X) + "}";
    if (is_subset(X, NodeSet{2, n})) return result(Kind::Finite, "taus.i", xs + " inside {2, n}");
    const bool tame = (n > 3 && (X == NodeSet{3} || X == NodeSet{2, 3} || X == NodeSet{n - 1} ||
                                 X == NodeSet{n - 1, n})) ||
                      (n == 4 && X == NodeSet{2, 3, 4});
    if (tame) return result(Kind::Tame, "taus.ii", xs + " in the tame list for n = " + std::to_string(n));
    return result(Kind::Wild, "taus.iii", xs + " is neither finite nor tame for n = " + std::to_string(n));
}

ClassificationResult classify_product(const std::vector<TripleSpec>& specs) {
    if (specs.size() < 2) throw PreconditionError("classify_product needs at least two components");
    int a1_e_a1 = 0, a1_e_e = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& s = specs[i];
        auto c = classify_triple(s);
        if (c.rep_type.semisimple)
            throw PreconditionError("component " + std::to_string(i + 1) + " is semisimple (W = G)");
        if (c.rep_type.kind == Kind::Wild)
            throw PreconditionError("component " + std::to_string(i + 1) + " is already wild");
        const bool a1 = s.diagram.family == Family::A && s.diagram.rank == 1 && s.g.empty();
        if (a1 && s.h.size() == 1) ++a1_e_a1;
        if (a1 && s.h.empty()) ++a1_e_e;
    }
    if (specs.size() == 2 && a1_e_a1 == 2) return result(Kind::Tame, "tss.1", "(A_1, e, A_1) x (A_1, e, A_1)");
    if (specs.size() == 2 && a1_e_a1 == 1 && a1_e_e == 1)
        return result(Kind::Tame, "tss.2", "(A_1, e, A_1) x (A_1, e, e)");
    return result(Kind::Wild, "tss.wild",
                  specs.size() > 2 ? "more than two non-semisimple components"
                                   : "two components outside the tame pairs");
}

namespace {

CrossValidation finish(const TripleSpec& spec, ChainX chain) {
    CrossValidation out;
    out.pattern_result = classify_triple(spec);
    out.chain = std::move(chain);
    if (out.chain.r < 2) {
        // r = 1 means W = G: the truncated algebra is the ground field.
        out.chain_result = result(Kind::Finite, "taus.i", "r = 1", true);
    } else {
        out.chain_result = classify_auslander(static_cast<int>(out.chain.r), out.chain.X);
    }
    out.agree = out.pattern_result.rep_type.kind == out.chain_result.rep_type.kind;
    return out;
}

}  // namespace

CrossValidation cross_validate(const TripleSpec& spec, std::uint64_t group_cap) {
    return finish(spec, compute_chain_X(spec.diagram, spec.g, spec.h, group_cap));
}

CrossValidation cross_validate(const TripleSpec& spec, const GroupTable& table) {
    return finish(spec, compute_chain_X(table, spec.g, spec.h));
}

nlohmann::json to_json(const CrossValidation& c) {
    return {{"pattern", to_json(c.pattern_result)},
            {"chain", to_json(c.chain_result)},
            {"r", c.chain.r},
            {"X", c.chain.X},
            {"agree", c.agree}};
}

}  // namespace rtl
