#include "hullprice/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullprice/cli/csv.hpp"
#include "hullprice/cli/json_io.hpp"
#include "hullprice/cli/svg.hpp"
#include "hullprice/errors.hpp"
#include "hullprice/estimation.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/oracle.hpp"
#include "hullprice/preference.hpp"
#include "hullprice/pricing.hpp"

namespace hullprice::cli {

using nlohmann::json;

namespace {

struct Settings {
  NormalizationConfig normalization;
  double p_min = kDefaultMinPrice;
};

Settings load_settings(const std::string& config_path) {
  Settings s;
  if (config_path.empty()) return s;
  const auto doc = read_json_file(config_path);
  s.normalization = normalization_from_json(doc);
  if (doc.contains("p_min_admissible")) {
    if (!doc.at("p_min_admissible").is_number()) {
      throw Error(ErrorKind::InvalidConfig, "p_min_admissible must be a number");
    }
    s.p_min = doc.at("p_min_admissible").get<double>();
  }
  return s;
}

std::vector<RawListing> load_listings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return read_listings(in, path);
}

PreferenceCdf load_cdf(const std::string& path) {
  if (path.empty()) return PreferenceCdf::uniform();
  return cdf_from_json(read_json_file(path));
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot write " + path);
  file << content;
  if (!file) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Replace every floating-point value by its 12-significant-digit neighbour.
void round_numbers(json& doc) {
  if (doc.is_number_float()) {
    doc = round12(doc.get<double>());
  } else if (doc.is_structured()) {
    for (auto& child : doc) round_numbers(child);
  }
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Vertex: return "vertex";
    case Role::Interior: return "interior";
    case Role::DominatedDuplicate: return "dominated";
  }
  return "interior";
}

json id_or_null(const std::optional<NormalizedItem>& item) {
  return item ? json(item->id()) : json(nullptr);
}

// --- subcommand bodies -----------------------------------------------------

struct FrontierArgs {
  std::string market;
  std::string algorithm = "chain";
};

void cmd_frontier(const FrontierArgs& a, const Settings& s, const std::string& out_path,
                  std::ostream& out) {
  const auto market = normalize_market(load_listings(a.market), s.normalization);
  const auto frontier =
      a.algorithm == "scan" ? upper_frontier_scan(market) : upper_frontier_chain(market);
  const auto roles = classify(market, frontier);

  std::string text = "id,ln_p,ln_r,role\n";
  for (std::size_t i = 0; i < market.size(); ++i) {
    const auto& item = market.items()[i];
    text += csv_field(item.id()) + "," + format_number(item.ln_p()) + "," +
            format_number(item.ln_r()) + "," + std::string(role_name(roles.items[i].role)) + "\n";
  }
  emit(out_path, text, out);
}

struct SharesArgs {
  std::string market;
  std::string cdf;
};

void cmd_shares(const SharesArgs& a, const Settings& s, const std::string& out_path,
                std::ostream& out) {
  const auto cdf = load_cdf(a.cdf);
  const auto market = normalize_market(load_listings(a.market), s.normalization);
  const auto table = market_shares(upper_frontier(market), cdf);

  std::string text = "id,alpha_lo,alpha_hi,share\n";
  for (const auto& e : table.entries) {
    text += csv_field(e.id) + "," + format_number(e.interval.lo) + "," +
            format_number(e.interval.hi) + "," + format_number(e.share) + "\n";
  }
  emit(out_path, text, out);
}

struct EstimateArgs {
  std::string history;
};

void cmd_estimate(const EstimateArgs& a, const Settings& s, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::ifstream in(a.history);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + a.history);
  const auto records = to_records(read_history(in, a.history), s.normalization);
  const auto estimate = estimate_mixture(records);

  auto doc = cdf_to_json(estimate.cdf);
  round_numbers(doc);
  emit(out_path, doc.dump(2) + "\n", out);
  err << "records used: " << estimate.records_used
      << ", excluded: " << estimate.records_excluded << "\n";
}

struct PriceArgs {
  std::string competitors;
  double rep = 0.0;
  double ceiling = 0.0;
  std::string cdf;
  std::string focal;
  std::optional<double> anchor_price;
  std::optional<double> p_min;
  std::string curve;
  std::size_t curve_points = 201;
  std::string svg;
};

struct BuiltProblem {
  PricingProblem problem;
  std::optional<PriceScale> price_scale;
};

// Competitor reputations are normalized jointly with the focal one so that
// its r stays in (0,1]. Prices use the anchor when given, else a fitted scale.
BuiltProblem build_problem(const std::vector<RawListing>& listings, double rep, double ceiling,
                           PreferenceCdf cdf, std::optional<double> anchor, double p_min,
                           const NormalizationConfig& norm) {
  norm.validate();
  std::vector<double> prices;
  std::vector<double> reps{rep};
  for (const auto& l : listings) {
    prices.push_back(l.price);
    reps.push_back(l.reputation);
  }
  for (const auto& l : listings) {
    if (!(l.price > 0.0) || !std::isfinite(l.price)) {
      throw Error(ErrorKind::NonPositiveAttribute, l.id);
    }
  }
  const auto rep_scale = ReputationScale::fit(reps, norm.reputation_rule, norm.epsilon);
  if (!rep_scale.admits(rep)) throw Error(ErrorKind::NonPositiveAttribute, "focal reputation");

  BuiltProblem out;
  if (anchor) {
    if (norm.price_rule != PriceRule::ReciprocalMin) {
      throw Error(ErrorKind::InvalidConfig, "--anchor-price needs price_rule reciprocal_min");
    }
    out.price_scale = PriceScale::anchored(*anchor);
  } else if (!prices.empty()) {
    out.price_scale = PriceScale::fit(prices, norm.price_rule, norm.epsilon);
  }
  if (!listings.empty()) {
    out.problem.competitors = normalize_market(listings, *out.price_scale, rep_scale);
  }
  out.problem.focal_reputation = rep_scale.normalize(rep);
  out.problem.ceiling = ceiling;
  out.problem.cdf = std::move(cdf);
  out.problem.p_min = p_min;
  return out;
}

struct PricedRun {
  PricingSolution solution;
  std::optional<double> raw_price;
};

PricedRun run_price(const PriceArgs& a, const Settings& s) {
  auto listings = load_listings(a.competitors);
  if (!a.focal.empty()) {
    std::erase_if(listings, [&](const RawListing& l) { return l.id == a.focal; });
  }
  auto built = build_problem(listings, a.rep, a.ceiling, load_cdf(a.cdf), a.anchor_price,
                             a.p_min.value_or(s.p_min), s.normalization);

  PricingOptions options;
  if (!a.curve.empty() || !a.svg.empty()) options.curve_points = a.curve_points;
  PricedRun run{optimize_price(built.problem, options), std::nullopt};
  if (built.price_scale) run.raw_price = built.price_scale->to_raw(run.solution.p_star);
  return run;
}

json solution_json(const PricedRun& run) {
  const auto& sol = run.solution;
  json interval{{"index", sol.interval_index},
                {"p_lo", sol.interval.p_lo},
                {"p_hi", sol.interval.p_hi},
                {"kind", sol.interval.kind == IntervalKind::Active ? "active" : "interior"},
                {"left", id_or_null(sol.interval.left)},
                {"right", id_or_null(sol.interval.right)}};
  json doc{{"p_star", sol.p_star},
           {"raw_price_equivalent", run.raw_price ? json(*run.raw_price) : json(nullptr)},
           {"profit", sol.profit},
           {"share", sol.share},
           {"interval", interval}};
  round_numbers(doc);
  return doc;
}

void cmd_price(const PriceArgs& a, const Settings& s, const std::string& out_path,
               std::ostream& out) {
  const auto run = run_price(a, s);
  emit(out_path, solution_json(run).dump(2) + "\n", out);
  if (!a.curve.empty()) {
    std::string text = "p,share,profit\n";
    for (const auto& pt : run.solution.curve) {
      text += format_number(pt.p) + "," + format_number(pt.share) + "," + format_number(pt.profit) + "\n";
    }
    emit(a.curve, text, out);
  }
  if (!a.svg.empty()) emit(a.svg, profit_curve_svg(run.solution), out);
}

struct ValidateArgs {
  std::string market;
  std::string cdf;
  std::optional<double> rep;
  std::optional<double> ceiling;
  std::size_t grid = 10001;
};

bool cmd_validate(const ValidateArgs& a, const Settings& s, const std::string& out_path,
                  std::ostream& out) {
  const auto cdf = load_cdf(a.cdf);
  const auto listings = load_listings(a.market);
  const auto market = normalize_market(listings, s.normalization);

  std::optional<PricingProblem> problem;
  if (a.rep || a.ceiling) {
    if (!a.rep || !a.ceiling) {
      throw Error(ErrorKind::InvalidProblem, "--rep and --ceiling go together");
    }
    problem = build_problem(listings, *a.rep, *a.ceiling, cdf, std::nullopt, s.p_min,
                            s.normalization)
                  .problem;
  }

  oracle::SweepConfig cfg;
  cfg.grid_points = a.grid;
  const auto results = oracle::run_suite(market, cdf, problem, cfg);
  std::string text;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    text += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name + "  (" + r.detail + ")\n";
  }
  text += all ? "all checks passed\n" : "some checks FAILED\n";
  emit(out_path, text, out);
  return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex-frontier market shares and focal-seller price optimization", "hullprice"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  app.add_option("--config", config_path, "Normalization config JSON");
  app.add_option("--out", out_path, "Write the primary output here instead of stdout");

  FrontierArgs fa;
  auto* frontier = app.add_subcommand("frontier", "Classify listings against the market frontier");
  frontier->add_option("market", fa.market, "Listings CSV (id,price,reputation)")->required();
  frontier->add_option("--algorithm", fa.algorithm, "Frontier builder")
      ->check(CLI::IsMember({"chain", "scan"}));

  SharesArgs sa;
  bool shares_uniform = false;
  auto* shares = app.add_subcommand("shares", "Alpha intervals and market shares of frontier vertices");
  shares->add_option("market", sa.market, "Listings CSV")->required();
  auto* shares_cdf = shares->add_option("--cdf", sa.cdf, "Preference CDF JSON");
  shares->add_flag("--uniform", shares_uniform, "Use F(alpha) = alpha")->excludes(shares_cdf);

  EstimateArgs ea;
  auto* estimate = app.add_subcommand("estimate", "Estimate the preference CDF from purchase history");
  estimate->add_option("history", ea.history,
                       "History CSV (market_label,id,price,reputation,chosen)")
      ->required();

  PriceArgs pa;
  bool price_uniform = false;
  auto* price = app.add_subcommand("price", "Profit-maximizing normalized price for a focal seller");
  price->add_option("competitors", pa.competitors, "Competitor listings CSV")->required();
  price->add_option("--rep", pa.rep, "Focal seller's raw reputation")->required();
  price->add_option("--ceiling", pa.ceiling, "Profit ceiling C > 0")->required();
  auto* price_cdf = price->add_option("--cdf", pa.cdf, "Preference CDF JSON");
  price->add_flag("--uniform", price_uniform, "Use F(alpha) = alpha")->excludes(price_cdf);
  price->add_option("--focal", pa.focal, "Drop this id from the competitor file");
  price->add_option("--anchor-price", pa.anchor_price, "Raw price that maps to p = 1");
  price->add_option("--p-min", pa.p_min, "Smallest admissible normalized price");
  price->add_option("--curve", pa.curve, "Write sampled p,share,profit CSV here");
  price->add_option("--curve-points", pa.curve_points, "Samples in the curve")->check(CLI::Range(2, 1000000));
  price->add_option("--svg", pa.svg, "Write a profit-curve SVG here");

  ValidateArgs va;
  bool validate_uniform = false;
  auto* validate = app.add_subcommand("validate", "Run the brute-force oracle suite on a market");
  validate->add_option("market", va.market, "Listings CSV")->required();
  auto* validate_cdf = validate->add_option("--cdf", va.cdf, "Preference CDF JSON");
  validate->add_flag("--uniform", validate_uniform, "Use F(alpha) = alpha")->excludes(validate_cdf);
  validate->add_option("--rep", va.rep, "Also check pricing for this focal raw reputation");
  validate->add_option("--ceiling", va.ceiling, "Profit ceiling for the pricing checks");
  validate->add_option("--grid", va.grid, "Alpha grid points")->check(CLI::Range(2, 100000000));

  // Subcommand options may also carry the shared flags.
  for (auto* sub : {frontier, shares, estimate, price, validate}) {
    sub->add_option("--config", config_path, "Normalization config JSON");
    sub->add_option("--out", out_path, "Output path");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    const auto settings = load_settings(config_path);
    if (*frontier) {
      cmd_frontier(fa, settings, out_path, out);
    } else if (*shares) {
      if (sa.cdf.empty() && !shares_uniform) {
        throw Error(ErrorKind::InvalidCdf, "pass --cdf <json> or --uniform");
      }
      cmd_shares(sa, settings, out_path, out);
    } else if (*estimate) {
      cmd_estimate(ea, settings, out_path, out, err);
    } else if (*price) {
      if (pa.cdf.empty() && !price_uniform) {
        throw Error(ErrorKind::InvalidCdf, "pass --cdf <json> or --uniform");
      }
      cmd_price(pa, settings, out_path, out);
    } else if (*validate) {
      if (va.cdf.empty() && !validate_uniform) {
        throw Error(ErrorKind::InvalidCdf, "pass --cdf <json> or --uniform");
      }
      return cmd_validate(va, settings, out_path, out) ? kExitOk : kExitInternal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? kExitInternal : kExitUserError;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hullprice::cli
