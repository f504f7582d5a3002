#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rtl/coxeter.hpp"

namespace rtl {

enum class Kind { Finite, Tame, Wild };

std::string kind_name(Kind k);  // "finite", "tame", "wild"

struct RepType {
    Kind kind = Kind::Wild;
    bool semisimple = false;  // only when W = G; implies Finite
};

struct ClassificationResult {
    RepType rep_type;
    std::string case_label;
    std::string justification;
};

nlohmann::json to_json(const ClassificationResult& r);

/// Representation type of the triple (W, G, H). Patterns are matched in a fixed order on every
/// automorphism image of (g, h), so the answer is automorphism invariant.
ClassificationResult classify_triple(const TripleSpec& spec);

/// Type of the centralizer subalgebra of A_n at {1} u X. Throws if X is not inside {2..n}.
ClassificationResult classify_auslander(int n, const NodeSet& X);

/// Type of a product of k >= 2 blocks. Throws if a component is semisimple or wild.
ClassificationResult classify_product(const std::vector<TripleSpec>& specs);

/// Type of the G-invariants of the coinvariant algebra of W. Labels cwg.I .. cwg.X, cwg.wild.
ClassificationResult cwg_type(const CoxeterDiagram& d, const NodeSet& g);

struct CrossValidation {
    ClassificationResult pattern_result;
    ClassificationResult chain_result;
    ChainX chain;
    bool agree = false;
};

/// Compares classify_triple with classify_auslander on the coset chain data of the triple.
CrossValidation cross_validate(const TripleSpec& spec, std::uint64_t group_cap = 200000);
/// Same, reusing a group table of spec.diagram.
CrossValidation cross_validate(const TripleSpec& spec, const GroupTable& table);

nlohmann::json to_json(const CrossValidation& c);

}  // namespace rtl
