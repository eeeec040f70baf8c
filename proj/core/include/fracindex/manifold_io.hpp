#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fracindex/coh_class.hpp"
#include "fracindex/genera.hpp"
#include "fracindex/manifold.hpp"

namespace fracindex {

// JSON manifold documents:
//
//   { "label": "CP^2", "real_dimension": 4,
//     "generators": [{"name": "x", "degree": 2}],
//     "basis": ["1", "x", "x^2"],
//     "products": {"y*y": {"x^2": "-1"}},
//     "pairing": {"x^2": "1"},
//     "tangent": {"mode": "chern", "classes": [{"x": "3"}, {"x^2": "3"}]},
//     "complex": true }
//
// Rationals are "p/q" strings. Optional keys: "rank" inside "tangent",
// "spin" (non-complex models) and "annotations" (string map).

ManifoldModel load_manifold(const nlohmann::json& doc);
ManifoldModel load_manifold_file(const std::filesystem::path& path);
nlohmann::json to_json(const ManifoldModel& m);

/// A class document is an object {monomial: rational-string}.
CohClass class_from_json(const RingPtr& ring, const nlohmann::json& doc);
nlohmann::json class_to_json(const CohClass& c);

/// Bundle documents: {"rank": r, "chern": [class documents]}.
CharData bundle_from_json(const RingPtr& ring, const nlohmann::json& doc);
nlohmann::json bundle_to_json(const CharData& bundle);

/// Parses linear expressions such as "3x", "-3/2*x + x^2", "2 - h^2".
CohClass parse_class(const RingPtr& ring, std::string_view text);

/// Rational from a JSON string "p/q" or a JSON integer.
Rational rational_from_json(const nlohmann::json& value, std::string_view where);

}  // namespace fracindex
