#include "hullprice/cli/json_io.hpp"

#include <fstream>

#include "hullprice/errors.hpp"

namespace hullprice::cli {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double number_at(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw Error(ErrorKind::InvalidCdf, std::string("missing numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

}  // namespace

json cdf_to_json(const PreferenceCdf& cdf) {
  return std::visit(
      overloaded{
          [](const Uniform01&) { return json{{"type", "uniform01"}}; },
          [](const UniformInterval& u) {
            return json{{"type", "uniform_interval"}, {"lo", u.lo}, {"hi", u.hi}};
          },
          [](const MixtureOfUniforms& m) {
            json components = json::array();
            for (const auto& c : m.components) {
              components.push_back({{"lo", c.lo}, {"hi", c.hi}, {"weight", c.weight}});
            }
            return json{{"type", "mixture"}, {"components", components}};
          },
          [](const PiecewiseLinear& pl) {
            json knots = json::array();
            for (const auto& k : pl.knots) knots.push_back({k.alpha, k.value});
            return json{{"type", "piecewise_linear"}, {"knots", knots}};
          },
      },
      cdf.variant());
}

PreferenceCdf cdf_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw Error(ErrorKind::InvalidCdf, "CDF document needs a string 'type'");
  }
  const auto type = doc.at("type").get<std::string>();
  if (type == "uniform01") return PreferenceCdf::uniform();
  if (type == "uniform_interval") {
    return PreferenceCdf::uniform_interval(number_at(doc, "lo"), number_at(doc, "hi"));
  }
  if (type == "mixture") {
    if (!doc.contains("components") || !doc.at("components").is_array()) {
      throw Error(ErrorKind::InvalidCdf, "mixture needs a 'components' array");
    }
    std::vector<UniformComponent> components;
    for (const auto& c : doc.at("components")) {
      if (!c.is_object()) throw Error(ErrorKind::InvalidCdf, "mixture component must be an object");
      components.push_back({number_at(c, "lo"), number_at(c, "hi"), number_at(c, "weight")});
    }
    return PreferenceCdf::mixture(std::move(components));
  }
  if (type == "piecewise_linear") {
    if (!doc.contains("knots") || !doc.at("knots").is_array()) {
      throw Error(ErrorKind::InvalidCdf, "piecewise_linear needs a 'knots' array");
    }
    std::vector<CdfKnot> knots;
    for (const auto& k : doc.at("knots")) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
        throw Error(ErrorKind::InvalidCdf, "knot must be [alpha, F]");
      }
      knots.push_back({k[0].get<double>(), k[1].get<double>()});
    }
    return PreferenceCdf::piecewise_linear(std::move(knots));
  }
  throw Error(ErrorKind::InvalidCdf, "unknown CDF type '" + type + "'");
}

NormalizationConfig normalization_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
  NormalizationConfig cfg;
  if (doc.contains("price_rule")) {
    const auto& v = doc.at("price_rule");
    if (v == "reciprocal_min") {
      cfg.price_rule = PriceRule::ReciprocalMin;
    } else if (v == "inverse_minmax") {
      cfg.price_rule = PriceRule::InverseMinMax;
    } else {
      throw Error(ErrorKind::InvalidConfig, "unknown price_rule " + v.dump());
    }
  }
  if (doc.contains("reputation_rule")) {
    const auto& v = doc.at("reputation_rule");
    if (v == "max_ratio") {
      cfg.reputation_rule = ReputationRule::MaxRatio;
    } else if (v == "minmax_with_floor") {
      cfg.reputation_rule = ReputationRule::MinMaxWithFloor;
    } else {
      throw Error(ErrorKind::InvalidConfig, "unknown reputation_rule " + v.dump());
    }
  }
  if (doc.contains("epsilon")) {
    if (!doc.at("epsilon").is_number()) throw Error(ErrorKind::InvalidConfig, "epsilon must be a number");
    cfg.epsilon = doc.at("epsilon").get<double>();
  }
  cfg.validate();
  return cfg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

}  // namespace hullprice::cli
