#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hullprice/cdf.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/market.hpp"

namespace hullprice {

/// Relative weight a consumer puts on price attractiveness, in [0, 1].
class PreferenceWeight {
 public:
  /// Throws OutOfDomain outside [0, 1] or for NaN.
  explicit PreferenceWeight(double alpha);

  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Indifference slope k = -alpha / (1 - alpha) in (-inf, 0]. alpha = 1 maps
/// to the vertical slope, held as a flag rather than a large finite number.
class SlopeParam {
 public:
  /// Throws PositiveSlope for k > 0 (and for NaN).
  static SlopeParam finite(double k);
  static SlopeParam vertical() noexcept { return SlopeParam(true, 0.0); }

  bool is_vertical() const noexcept { return vertical_; }
  /// The slope; -infinity when vertical.
  double value() const noexcept;

 private:
  SlopeParam(bool vertical, double k) : vertical_(vertical), k_(k) {}

  bool vertical_;
  double k_;
};

/// U = alpha ln p + (1 - alpha) ln r.
double utility(PreferenceWeight alpha, const NormalizedItem& item);

SlopeParam k_of_alpha(PreferenceWeight alpha);
PreferenceWeight alpha_of_k(SlopeParam k);
/// Same as alpha_of_k(SlopeParam::finite(k)) for finite k; -inf gives 1.
double alpha_of_slope(double k);

struct AlphaInterval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const noexcept { return hi - lo; }
};

struct VertexInterval {
  std::string id;
  AlphaInterval interval;
};

/// Alpha range over which each frontier vertex is the best choice, in
/// frontier order. Neighbouring intervals share endpoints bit-for-bit.
/// Errors: EmptyFrontier.
std::vector<VertexInterval> alpha_intervals(const Frontier& frontier);

struct ShareEntry {
  std::string id;
  AlphaInterval interval;
  double share = 0.0;
};

struct ShareTable {
  std::vector<ShareEntry> entries;

  /// Share of `id`; 0 for ids not on the frontier.
  double share_of(std::string_view id) const;
  double total() const;
};

/// share_i = F(hi_i) - F(lo_i) for each vertex; items off the frontier have
/// no entry (share 0). Errors: EmptyFrontier, InvalidCdf.
ShareTable market_shares(const Frontier& frontier, const PreferenceCdf& cdf);

}  // namespace hullprice
