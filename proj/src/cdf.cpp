#include "hullprice/cdf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hullprice/errors.hpp"

namespace hullprice {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_support(double lo, double hi) {
  return std::isfinite(lo) && std::isfinite(hi) && lo >= 0.0 && hi <= 1.0 && lo < hi;
}

double uniform_cdf(double lo, double hi, double alpha) {
  if (alpha <= lo) return 0.0;
  if (alpha >= hi) return 1.0;
  return (alpha - lo) / (hi - lo);
}

}  // namespace

PreferenceCdf PreferenceCdf::uniform_interval(double lo, double hi) {
  if (!valid_support(lo, hi)) {
    throw Error(ErrorKind::InvalidCdf, "uniform interval needs 0 <= lo < hi <= 1");
  }
  return PreferenceCdf(UniformInterval{lo, hi});
}

PreferenceCdf PreferenceCdf::mixture(std::vector<UniformComponent> components) {
  if (components.empty()) throw Error(ErrorKind::InvalidCdf, "mixture has no components");
  double total = 0.0;
  for (const auto& c : components) {
    if (!valid_support(c.lo, c.hi)) {
      throw Error(ErrorKind::InvalidCdf, "mixture component needs 0 <= lo < hi <= 1");
    }
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
      throw Error(ErrorKind::InvalidCdf, "mixture weights must be nonnegative");
    }
    total += c.weight;
  }
  if (!(std::fabs(total - 1.0) <= 1e-9)) {
    throw Error(ErrorKind::InvalidCdf, "mixture weights must sum to 1");
  }
  if (total != 1.0) {
    for (auto& c : components) c.weight /= total;
  }
  return PreferenceCdf(MixtureOfUniforms{std::move(components)});
}

PreferenceCdf PreferenceCdf::piecewise_linear(std::vector<CdfKnot> knots) {
  if (knots.size() < 2) throw Error(ErrorKind::InvalidCdf, "need at least two knots");
  if (knots.front().alpha != 0.0 || knots.front().value != 0.0 || knots.back().alpha != 1.0 ||
      knots.back().value != 1.0) {
    throw Error(ErrorKind::InvalidCdf, "knots must start at (0,0) and end at (1,1)");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].alpha > knots[i - 1].alpha)) {
      throw Error(ErrorKind::InvalidCdf, "knot alphas must be strictly increasing");
    }
    if (!(knots[i].value >= knots[i - 1].value)) {
      throw Error(ErrorKind::InvalidCdf, "knot values must be nondecreasing");
    }
  }
  return PreferenceCdf(PiecewiseLinear{std::move(knots)});
}

std::string_view PreferenceCdf::tag() const noexcept {
  return std::visit(overloaded{
                        [](const Uniform01&) { return std::string_view("uniform01"); },
                        [](const UniformInterval&) { return std::string_view("uniform_interval"); },
                        [](const MixtureOfUniforms&) { return std::string_view("mixture"); },
                        [](const PiecewiseLinear&) { return std::string_view("piecewise_linear"); },
                    },
                    variant_);
}

double PreferenceCdf::operator()(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "alpha = " + std::to_string(alpha));
  }
  if (alpha == 0.0) return 0.0;
  if (alpha == 1.0) return 1.0;
  const double value = std::visit(
      overloaded{
          [&](const Uniform01&) { return alpha; },
          [&](const UniformInterval& u) { return uniform_cdf(u.lo, u.hi, alpha); },
          [&](const MixtureOfUniforms& m) {
            double sum = 0.0;
            for (const auto& c : m.components) sum += c.weight * uniform_cdf(c.lo, c.hi, alpha);
            return sum;
          },
          [&](const PiecewiseLinear& pl) {
            const auto& k = pl.knots;
            auto it = std::upper_bound(k.begin(), k.end(), alpha,
                                       [](double a, const CdfKnot& knot) { return a < knot.alpha; });
            // alpha in (0,1) so `it` is neither begin() nor end().
            const auto& right = *it;
            const auto& left = *(it - 1);
            const double t = (alpha - left.alpha) / (right.alpha - left.alpha);
            return left.value + t * (right.value - left.value);
          },
      },
      variant_);
  return std::clamp(value, 0.0, 1.0);
}

PreferenceCdf cdf_from_histogram(std::span<const double> counts) {
  double total = 0.0;
  for (double c : counts) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw Error(ErrorKind::InvalidCdf, "histogram counts must be nonnegative");
    }
    total += c;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::AllZeroCounts, "histogram has no mass");

  const auto bins = counts.size();
  std::vector<CdfKnot> knots;
  knots.reserve(bins + 1);
  knots.push_back({0.0, 0.0});
  double running = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    running += counts[i];
    const bool last = i + 1 == bins;
    knots.push_back({last ? 1.0 : static_cast<double>(i + 1) / static_cast<double>(bins),
                     last ? 1.0 : std::min(running / total, 1.0)});
  }
  return PreferenceCdf::piecewise_linear(std::move(knots));
}

}  // namespace hullprice
