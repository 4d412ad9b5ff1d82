#include "hullprice/preference.hpp"

#include <cmath>
#include <limits>

#include "hullprice/errors.hpp"

namespace hullprice {

PreferenceWeight::PreferenceWeight(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "alpha = " + std::to_string(alpha));
  }
}

SlopeParam SlopeParam::finite(double k) {
  if (!(k <= 0.0)) throw Error(ErrorKind::PositiveSlope, "k = " + std::to_string(k));
  if (std::isinf(k)) return vertical();
  return SlopeParam(false, k + 0.0);  // folds -0 into +0
}

double SlopeParam::value() const noexcept {
  return vertical_ ? -std::numeric_limits<double>::infinity() : k_;
}

double utility(PreferenceWeight alpha, const NormalizedItem& item) {
  const double a = alpha.value();
  return a * item.ln_p() + (1.0 - a) * item.ln_r();
}

SlopeParam k_of_alpha(PreferenceWeight alpha) {
  const double a = alpha.value();
  if (a == 1.0) return SlopeParam::vertical();
  return SlopeParam::finite(-a / (1.0 - a));
}

double alpha_of_slope(double k) {
  if (!(k <= 0.0)) throw Error(ErrorKind::PositiveSlope, "k = " + std::to_string(k));
  if (std::isinf(k)) return 1.0;
  const double a = k / (k - 1.0) + 0.0;
  return std::min(a, 1.0);
}

PreferenceWeight alpha_of_k(SlopeParam k) {
  if (k.is_vertical()) return PreferenceWeight(1.0);
  return PreferenceWeight(alpha_of_slope(k.value()));
}

std::vector<VertexInterval> alpha_intervals(const Frontier& frontier) {
  if (frontier.empty()) throw Error(ErrorKind::EmptyFrontier, "no vertices");
  const auto& vertices = frontier.vertices();
  const auto& slopes = frontier.edge_slopes();

  // One alpha per edge, shared by the two vertices it separates.
  std::vector<double> cuts;
  cuts.reserve(slopes.size());
  for (double k : slopes) cuts.push_back(alpha_of_slope(k));

  std::vector<VertexInterval> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double lo = i == 0 ? 0.0 : cuts[i - 1];
    const double hi = i + 1 == vertices.size() ? 1.0 : cuts[i];
    out.push_back({vertices[i].id(), {lo, hi}});
  }
  return out;
}

double ShareTable::share_of(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e.share;
  }
  return 0.0;
}

double ShareTable::total() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.share;
  return sum;
}

ShareTable market_shares(const Frontier& frontier, const PreferenceCdf& cdf) {
  if (cdf(0.0) != 0.0 || cdf(1.0) != 1.0) {
    throw Error(ErrorKind::InvalidCdf, "F(0) must be 0 and F(1) must be 1");
  }
  ShareTable table;
  for (auto& [id, interval] : alpha_intervals(frontier)) {
    const double share = std::max(0.0, cdf(interval.hi) - cdf(interval.lo));
    table.entries.push_back({std::move(id), interval, share});
  }
  return table;
}

}  // namespace hullprice
