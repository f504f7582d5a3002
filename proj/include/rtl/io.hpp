#pragma once

#include <string>

#include "json.hpp"
#include "rtl/bound_algebra.hpp"
#include "rtl/quiver.hpp"

namespace rtl {

/// Presentation JSON:
///   {"vertices": [1, 2], "arrows": [{"id": "a1", "src": 1, "tgt": 2}, ...],
///    "relations": [[{"c": "1", "path": ["b1", "a1"]}, ...], ...]}
/// Vertices may be numbers or strings. "path" lists arrows in order of application, so the
/// displayed word "a b" is ["b", "a"]; a term may give "word": "a b" instead. "c" is a
/// rational as a string ("-3/2") or an integer.
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);

/// Graph JSON: {"vertices": [...], "edges": [[u, v], ...]}, or any presentation JSON (its
/// underlying graph).
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

nlohmann::json load_json(const std::string& path);

}  // namespace rtl
