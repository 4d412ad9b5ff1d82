#pragma once

#include <string>

#include <json.hpp>

#include "hullprice/cdf.hpp"
#include "hullprice/market.hpp"

namespace hullprice::cli {

/// {"type": "uniform01"} | {"type": "uniform_interval", "lo", "hi"} |
/// {"type": "mixture", "components": [{"lo", "hi", "weight"}]} |
/// {"type": "piecewise_linear", "knots": [[alpha, F], ...]}
nlohmann::json cdf_to_json(const PreferenceCdf& cdf);
/// Throws InvalidCdf on a malformed document.
PreferenceCdf cdf_from_json(const nlohmann::json& doc);

/// {"price_rule": "reciprocal_min" | "inverse_minmax",
///  "reputation_rule": "max_ratio" | "minmax_with_floor", "epsilon": x}.
/// Missing keys keep their defaults. Throws InvalidConfig.
NormalizationConfig normalization_from_json(const nlohmann::json& doc);

/// Throws IoError / ParseError.
nlohmann::json read_json_file(const std::string& path);

}  // namespace hullprice::cli
