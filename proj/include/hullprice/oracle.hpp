#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hullprice/cdf.hpp"
#include "hullprice/market.hpp"
#include "hullprice/pricing.hpp"

// Brute-force references. Everything here is re-derived from the utility
// U = alpha ln p + (1 - alpha) ln r alone; no frontier or pricing geometry
// is reused, so agreement with the analytic modules is meaningful.
namespace hullprice::oracle {

struct SweepConfig {
  std::size_t grid_points = 10001;

  void validate() const;
};

/// Grid alpha_g = g / (n - 1), g = 0..n-1.
double grid_alpha(std::size_t g, std::size_t n);

/// Utility-maximizing item at alpha. Ties go to the higher r, then the lower id.
/// Errors: EmptyMarket.
const NormalizedItem& choose_at_alpha(double alpha, const std::vector<NormalizedItem>& items);
std::string choose_at_alpha(double alpha, const MarketSnapshot& market);

struct EmpiricalShare {
  std::string id;
  double share;
};

/// Each grid point carries the F-mass of its cell (midpoints between
/// neighbouring grid points) and credits it to the argmax item. One entry
/// per market item, in market order.
std::vector<EmpiricalShare> sweep_shares(const MarketSnapshot& market, const PreferenceCdf& cdf,
                                         const SweepConfig& cfg = {});

/// Ids chosen at some grid alpha.
std::set<std::string> frontier_bruteforce(const MarketSnapshot& market,
                                          const SweepConfig& cfg = {});

/// The focal seller inserted into the full competitor set: the alpha range
/// where it beats every competitor, and the competitors that bound it.
struct Insertion {
  bool on_frontier = false;
  double alpha_lo = 0.0;
  double alpha_hi = 1.0;
  std::optional<std::string> left;
  std::optional<std::string> right;
};

Insertion insert_focal(const std::vector<NormalizedItem>& competitors, double p,
                       double focal_reputation);

double share_by_insertion(const std::vector<NormalizedItem>& competitors, double p,
                          double focal_reputation, const PreferenceCdf& cdf);

struct GridOptimum {
  double p = 0.0;
  double profit = 0.0;
};

/// Best (C - p) share(p) over a uniform grid on [p_min, 1].
GridOptimum price_grid_oracle(const PricingProblem& problem, std::size_t grid_points);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Full analytic-vs-oracle comparison on one market and optionally one
/// pricing problem. Used by the `validate` command.
std::vector<CheckResult> run_suite(const MarketSnapshot& market, const PreferenceCdf& cdf,
                                   const std::optional<PricingProblem>& problem,
                                   const SweepConfig& cfg = {});

}  // namespace hullprice::oracle
