#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullprice/cdf.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/market.hpp"

namespace hullprice {

/// Smallest admissible normalized price; p = 0 has no log.
inline constexpr double kDefaultMinPrice = 1e-6;

/// The focal seller's decision problem: maximize (C - p) * share(p) over
/// p in [p_min, 1] with its normalized reputation held fixed.
struct PricingProblem {
  /// Competitor market with the focal seller removed; nullopt = no competitors.
  std::optional<MarketSnapshot> competitors;
  double focal_reputation = 1.0;
  double ceiling = 1.0;
  PreferenceCdf cdf;
  double p_min = kDefaultMinPrice;

  /// Throws InvalidProblem.
  void validate() const;
};

enum class IntervalKind {
  Interior,  ///< focal point lies on or under the competitor frontier: share 0
  Active,    ///< focal point is a frontier vertex with the stated neighbours
};

/// Range of focal prices over which the key competitors do not change.
struct CompetitorInterval {
  double p_lo = 0.0;
  double p_hi = 1.0;
  IntervalKind kind = IntervalKind::Interior;
  /// Lower-price frontier neighbour (higher reputation).
  std::optional<NormalizedItem> left;
  /// Higher-price frontier neighbour (lower reputation).
  std::optional<NormalizedItem> right;

  bool monopoly() const noexcept {
    return kind == IntervalKind::Active && !left && !right;
  }
};

/// Where the focal point (p, r) lands when inserted into a competitor frontier.
struct Placement {
  IntervalKind kind = IntervalKind::Interior;
  std::optional<NormalizedItem> left;
  std::optional<NormalizedItem> right;
};

/// Direct insertion in O(log n). A focal point that weakly dominates a
/// competitor removes it; a focal point weakly dominated by one is Interior.
Placement insert_focal(const Frontier& competitors, double p, double focal_reputation);

/// Prices in (0, 1) at which the key competitors can change: where each
/// frontier edge line crosses ln r = ln r_i, plus dominance onsets.
/// Sorted ascending, unique.
std::vector<double> edge_intersections(const Frontier& competitors, double focal_reputation);

/// Tiles (0, 1] into maximal intervals of constant (kind, left, right).
std::vector<CompetitorInterval> competitor_intervals(const Frontier& competitors,
                                                     double focal_reputation);

/// Competitor frontier together with its interval decomposition for one
/// focal reputation.
class PriceAxis {
 public:
  PriceAxis(Frontier competitors, double focal_reputation);

  const Frontier& frontier() const noexcept { return frontier_; }
  double focal_reputation() const noexcept { return focal_reputation_; }
  const std::vector<CompetitorInterval>& intervals() const noexcept { return intervals_; }

  /// Index of the interval whose open range contains p, or whose closed
  /// right end is p.
  std::size_t locate(double p) const;

 private:
  Frontier frontier_;
  double focal_reputation_;
  std::vector<CompetitorInterval> intervals_;
};

/// Share of a focal seller at (p, r_i) given its neighbours: F(hi) - F(lo),
/// lo from the left neighbour slope (0 without one), hi from the right (1 without one).
double placement_share(const Placement& placement, double p, double focal_reputation,
                       const PreferenceCdf& cdf);

/// Share at price p. Inside an interval the interval's neighbours are used;
/// at a breakpoint the focal point is inserted directly.
/// Errors: OutOfRangePrice unless 0 < p <= 1.
double share_at_price(double p, const PriceAxis& axis, const PreferenceCdf& cdf);

struct IntervalOptimum {
  double p = 0.0;
  double profit = 0.0;
  double share = 0.0;
};

/// Points of the uniform scan inside each interval before refinement.
inline constexpr std::size_t kIntervalGridPoints = 1024;
/// Golden-section refinement stops once the bracket is this narrow.
inline constexpr double kRefineTolerance = 1e-9;

/// Maximize (C - p) * share(p) over the closed interval clipped to
/// [p_min, 1]. Interior intervals give profit 0 at p_hi. Returns nullopt
/// when the interval lies entirely below p_min.
std::optional<IntervalOptimum> optimize_interval(const PriceAxis& axis, std::size_t index,
                                                 const PricingProblem& problem);

struct CurvePoint {
  double p;
  double share;
  double profit;
};

struct PricingSolution {
  double p_star = 0.0;
  double profit = 0.0;
  double share = 0.0;
  std::size_t interval_index = 0;
  CompetitorInterval interval;
  /// Breakpoints of the decomposition, for plotting.
  std::vector<double> breakpoints;
  /// Present when requested through PricingOptions::curve_points.
  std::vector<CurvePoint> curve;
};

struct PricingOptions {
  /// 0 = no curve; otherwise number of uniform samples on [p_min, 1].
  std::size_t curve_points = 0;
};

/// Best price over all intervals. Equal profits resolve to the smaller price.
PricingSolution optimize_price(const PricingProblem& problem, const PricingOptions& options = {});

}  // namespace hullprice
