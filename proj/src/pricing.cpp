#include "hullprice/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hullprice/errors.hpp"
#include "hullprice/geometry.hpp"
#include "hullprice/preference.hpp"

namespace hullprice {

void PricingProblem::validate() const {
  if (!(focal_reputation > 0.0 && focal_reputation <= 1.0)) {
    throw Error(ErrorKind::InvalidProblem, "focal reputation must lie in (0,1]");
  }
  if (!(ceiling > 0.0) || !std::isfinite(ceiling)) {
    throw Error(ErrorKind::InvalidProblem, "ceiling C must be positive");
  }
  if (!(p_min > 0.0 && p_min <= 1.0)) {
    throw Error(ErrorKind::InvalidProblem, "p_min must lie in (0,1]");
  }
}

Placement insert_focal(const Frontier& competitors, double p, double focal_reputation) {
  const auto& v = competitors.vertices();
  const std::size_t n = v.size();
  if (n == 0) return {IntervalKind::Active, std::nullopt, std::nullopt};

  const LogCoord focal{std::log(p), std::log(focal_reputation)};
  const double x = focal.x;
  const double y = focal.y;

  // v[0, m) are strictly more reputable than the focal point.
  const auto m = static_cast<std::size_t>(
      std::partition_point(v.begin(), v.end(), [&](const NormalizedItem& c) { return c.ln_r() > y; }) -
      v.begin());
  if (m > 0 && x <= v[m - 1].ln_p()) return {};
  if (m < n && v[m].ln_r() == y && x < v[m].ln_p()) return {};

  // v[m, q) are weakly dominated by the focal point and drop out.
  const auto q = static_cast<std::size_t>(
      std::partition_point(v.begin(), v.end(), [&](const NormalizedItem& c) { return c.ln_p() <= x; }) -
      v.begin());

  Placement out{IntervalKind::Active, std::nullopt, std::nullopt};
  if (m > 0) {
    // Tangent on the left chain: the first vertex whose outgoing edge the
    // focal point is on or above.
    std::size_t lo = 0;
    std::size_t hi = m - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (orientation(coord(v[mid]), coord(v[mid + 1]), focal) >= 0) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out.left = v[lo];
  }
  if (q < n) {
    // Tangent on the right chain: the first vertex whose outgoing edge the
    // focal point is strictly below.
    std::size_t lo = q;
    std::size_t hi = n - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (orientation(coord(v[mid]), coord(v[mid + 1]), focal) < 0) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out.right = v[lo];
  }
  if (out.left && out.right && orientation(coord(*out.left), focal, coord(*out.right)) > 0) {
    return {};
  }
  return out;
}

std::vector<double> edge_intersections(const Frontier& competitors, double focal_reputation) {
  const auto& v = competitors.vertices();
  const auto& k = competitors.edge_slopes();
  const double y = std::log(focal_reputation);

  std::vector<double> log_breaks;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    log_breaks.push_back(v[j].ln_p() + (y - v[j].ln_r()) / k[j]);
  }
  for (const auto& vertex : v) {
    if (vertex.ln_r() <= y) log_breaks.push_back(vertex.ln_p());
  }
  if (!v.empty() && v.back().ln_r() > y) log_breaks.push_back(v.back().ln_p());

  std::vector<double> out;
  for (double lb : log_breaks) {
    const double p = std::exp(lb);
    if (p > 0.0 && p < 1.0) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool same_vertex(const std::optional<NormalizedItem>& a, const std::optional<NormalizedItem>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || a->id() == b->id();
}

bool same_label(const CompetitorInterval& a, const Placement& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == IntervalKind::Interior) return true;
  return same_vertex(a.left, b.left) && same_vertex(a.right, b.right);
}

// A price strictly inside (lo, hi) whenever one is representable.
double sample_inside(double lo, double hi) {
  const double guess = lo == 0.0 ? hi / 2 : std::sqrt(lo * hi);
  if (guess > lo && guess < hi) return guess;
  return lo + (hi - lo) / 2;
}

}  // namespace

std::vector<CompetitorInterval> competitor_intervals(const Frontier& competitors,
                                                     double focal_reputation) {
  std::vector<double> bounds{0.0};
  for (double b : edge_intersections(competitors, focal_reputation)) bounds.push_back(b);
  bounds.push_back(1.0);

  std::vector<CompetitorInterval> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double lo = bounds[i];
    const double hi = bounds[i + 1];
    auto placement = insert_focal(competitors, sample_inside(lo, hi), focal_reputation);
    if (!out.empty() && same_label(out.back(), placement)) {
      out.back().p_hi = hi;
      continue;
    }
    CompetitorInterval interval;
    interval.p_lo = lo;
    interval.p_hi = hi;
    interval.kind = placement.kind;
    if (placement.kind == IntervalKind::Active) {
      interval.left = std::move(placement.left);
      interval.right = std::move(placement.right);
    }
    out.push_back(std::move(interval));
  }
  return out;
}

PriceAxis::PriceAxis(Frontier competitors, double focal_reputation)
    : frontier_(std::move(competitors)),
      focal_reputation_(focal_reputation),
      intervals_(competitor_intervals(frontier_, focal_reputation)) {}

std::size_t PriceAxis::locate(double p) const {
  auto it = std::partition_point(intervals_.begin(), intervals_.end(),
                                 [&](const CompetitorInterval& iv) { return iv.p_hi < p; });
  if (it == intervals_.end()) --it;
  return static_cast<std::size_t>(it - intervals_.begin());
}

double placement_share(const Placement& placement, double p, double focal_reputation,
                       const PreferenceCdf& cdf) {
  if (placement.kind == IntervalKind::Interior) return 0.0;
  const LogCoord focal{std::log(p), std::log(focal_reputation)};
  const double lo = placement.left ? alpha_of_slope(slope(coord(*placement.left), focal)) : 0.0;
  const double hi = placement.right ? alpha_of_slope(slope(focal, coord(*placement.right))) : 1.0;
  if (!(hi > lo)) return 0.0;
  return std::max(0.0, cdf(hi) - cdf(lo));
}

namespace {

void check_price(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::OutOfRangePrice, "p = " + std::to_string(p));
  }
}

Placement interval_placement(const CompetitorInterval& iv) {
  return {iv.kind, iv.left, iv.right};
}

// Share on an interval whose label is known; endpoints fall back to insertion.
double share_in(const PriceAxis& axis, const CompetitorInterval& iv, double p,
                const PreferenceCdf& cdf) {
  if (p > iv.p_lo && p < iv.p_hi) {
    if (iv.kind == IntervalKind::Interior) return 0.0;
    return placement_share(interval_placement(iv), p, axis.focal_reputation(), cdf);
  }
  return placement_share(insert_focal(axis.frontier(), p, axis.focal_reputation()), p,
                         axis.focal_reputation(), cdf);
}

}  // namespace

double share_at_price(double p, const PriceAxis& axis, const PreferenceCdf& cdf) {
  check_price(p);
  return share_in(axis, axis.intervals()[axis.locate(p)], p, cdf);
}

std::optional<IntervalOptimum> optimize_interval(const PriceAxis& axis, std::size_t index,
                                                 const PricingProblem& problem) {
  const auto& iv = axis.intervals().at(index);
  const double a = std::max(iv.p_lo, problem.p_min);
  const double b = iv.p_hi;
  if (a > b) return std::nullopt;
  if (iv.kind == IntervalKind::Interior) return IntervalOptimum{b, 0.0, 0.0};

  const double c = problem.ceiling;
  const auto& cdf = problem.cdf;
  auto evaluate = [&](double p) {
    const double share = share_in(axis, iv, p, cdf);
    return IntervalOptimum{p, (c - p) * share, share};
  };

  if (a == b) return evaluate(a);

  const std::size_t n = kIntervalGridPoints;
  auto grid_p = [&](std::size_t g) {
    return g + 1 == n ? b : a + (b - a) * static_cast<double>(g) / static_cast<double>(n - 1);
  };
  IntervalOptimum best = evaluate(a);
  std::size_t best_g = 0;
  for (std::size_t g = 1; g < n; ++g) {
    const auto cand = evaluate(grid_p(g));
    if (cand.profit > best.profit) {
      best = cand;
      best_g = g;
    }
  }

  // Golden-section refinement over the neighbouring grid cells.
  double lo = grid_p(best_g == 0 ? 0 : best_g - 1);
  double hi = grid_p(std::min(best_g + 1, n - 1));
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = evaluate(x1).profit;
  double f2 = evaluate(x2).profit;
  while (hi - lo > kRefineTolerance) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = evaluate(x1).profit;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = evaluate(x2).profit;
    }
  }
  const auto refined = evaluate(lo + (hi - lo) / 2);
  if (refined.profit > best.profit) best = refined;
  return best;
}

PricingSolution optimize_price(const PricingProblem& problem, const PricingOptions& options) {
  problem.validate();
  Frontier frontier = problem.competitors ? upper_frontier(*problem.competitors) : Frontier();
  const PriceAxis axis(std::move(frontier), problem.focal_reputation);

  PricingSolution solution;
  bool found = false;
  for (std::size_t i = 0; i < axis.intervals().size(); ++i) {
    const auto opt = optimize_interval(axis, i, problem);
    if (!opt) continue;
    const bool better = !found || opt->profit > solution.profit ||
                        (opt->profit == solution.profit && opt->p < solution.p_star);
    if (better) {
      found = true;
      solution.p_star = opt->p;
      solution.profit = opt->profit;
      solution.share = opt->share;
      solution.interval_index = i;
    }
  }
  if (!found) throw Error(ErrorKind::InvariantViolation, "no admissible price interval");
  solution.interval = axis.intervals()[solution.interval_index];
  solution.breakpoints = edge_intersections(axis.frontier(), problem.focal_reputation);

  if (options.curve_points > 0) {
    const std::size_t n = options.curve_points;
    solution.curve.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
      const double p =
          n == 1 || g + 1 == n
              ? (n == 1 ? problem.p_min : 1.0)
              : problem.p_min + (1.0 - problem.p_min) * static_cast<double>(g) / static_cast<double>(n - 1);
      const double share = share_at_price(p, axis, problem.cdf);
      solution.curve.push_back({p, share, (problem.ceiling - p) * share});
    }
  }
  return solution;
}

}  // namespace hullprice
