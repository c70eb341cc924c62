#pragma once

#include "eqfix/fixed_point_data.hpp"
#include "eqfix/hypercube.hpp"
#include "eqfix/polynomial.hpp"
#include "eqfix/restriction_solver.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace eqfix {

/// Input file contents. The document is JSON:
///
///   {
///     "n": 3,
///     "points": [ {"id": "p0", "weights": [1, 1, -2], "moment": "-1/2"}, ... ],
///     "restrictions": { "p0": [0, 0, 0], ... },   // optional, coefficient of x for a_1..a_n
///     "max_degree": 3                              // optional
///   }
///
/// Rationals are integers or "p/q" strings.
struct InputDocument {
    FixedPointData data;
    std::optional<RestrictionTable> table;
    nlohmann::json options = nlohmann::json::object();
};

/// Throws Parse for malformed documents. Does not run validate().
InputDocument parse_input(std::string_view text);
InputDocument load_input(const std::filesystem::path& path);

Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const CubeClass& c);
nlohmann::json to_json(const FixedPointData& data);

UniPoly unipoly_from_json(const nlohmann::json& j);
CubeClass cubeclass_from_json(const nlohmann::json& j);

}  // namespace eqfix
