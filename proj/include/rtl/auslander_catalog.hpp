#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtl/bound_algebra.hpp"

namespace rtl {

/// Ladder quiver 1 <-> 2 <-> ... <-> n with a_i: i -> i+1, b_i: i+1 -> i and
/// a_i b_i = b_{i+1} a_{i+1} (i = 1..n-2), a_{n-1} b_{n-1} = 0.
Presentation auslander_presentation(int n);

struct CatalogParams {
    int n = 0;
    int m = 0;
};

struct CatalogEntry {
    std::string id;
    CatalogParams params;
    Presentation presentation;
    /// For truncations e_X A_n e_X: the A_n vertex (1-based) of each catalog vertex and the
    /// displayed product of a_i, b_i that each catalog arrow stands for.
    bool is_truncation = false;
    std::vector<int> X;
    std::vector<int> auslander_vertex;
    std::vector<std::string> composite;
    /// Z-grading used for covering arguments, when the entry has one.
    std::optional<DegreeMap> cover_degrees;
};

/// Canonical ids: A{m}, A{3,m}, A{2,n-1}, A{3,4}_5, A{2,n}, A{q,n}, A{2,3}, Xbre, Xprime,
/// and the auxiliary algebras B (quotient of A{m} by x^3, y^3, ab, ba) and Abar (one period
/// of the comparison quiver for A{2,n}).
const std::vector<std::string>& catalog_ids();
std::string canonical_catalog_id(const std::string& id);  // accepts U+2212 for '-'
bool catalog_needs_m(const std::string& id);

CatalogEntry catalog_presentation(const std::string& id, CatalogParams params);

struct CatalogReport {
    std::string id;
    CatalogParams params;
    std::size_t catalog_dim = 0;
    std::size_t truncation_dim = 0;
    bool relations_hold = false;
    std::size_t image_rank = 0;
    bool pass = false;
    std::string message;
};

/// Checks that the catalog presentation presents e_X A_n e_X: equal dimensions, the composite
/// map kills every relation, and the images of the catalog basis span e_X A_n e_X.
CatalogReport verify_catalog(const std::string& id, CatalogParams params);

/// Every (id, params) with n <= max_n that verify_catalog accepts.
std::vector<std::pair<std::string, CatalogParams>> catalog_instances(int max_n);

}  // namespace rtl
