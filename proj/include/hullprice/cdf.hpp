#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace hullprice {

struct Uniform01 {};

struct UniformInterval {
  double lo;
  double hi;
};

struct UniformComponent {
  double lo;
  double hi;
  double weight;
};

struct MixtureOfUniforms {
  std::vector<UniformComponent> components;
};

struct CdfKnot {
  double alpha;
  double value;
};

struct PiecewiseLinear {
  std::vector<CdfKnot> knots;
};

/// Population distribution F of the preference weight alpha on [0, 1].
/// Every instance satisfies F(0) = 0, F(1) = 1 and is nondecreasing; the
/// factories throw InvalidCdf otherwise. All variants are continuous.
class PreferenceCdf {
 public:
  using Variant = std::variant<Uniform01, UniformInterval, MixtureOfUniforms, PiecewiseLinear>;

  PreferenceCdf() : variant_(Uniform01{}) {}

  static PreferenceCdf uniform() { return PreferenceCdf(); }
  static PreferenceCdf uniform_interval(double lo, double hi);
  /// Weights must be >= 0 and sum to 1 within 1e-9; they are rescaled to sum to 1.
  static PreferenceCdf mixture(std::vector<UniformComponent> components);
  static PreferenceCdf piecewise_linear(std::vector<CdfKnot> knots);

  const Variant& variant() const noexcept { return variant_; }
  std::string_view tag() const noexcept;

  /// F(alpha). Throws OutOfDomain unless 0 <= alpha <= 1.
  double operator()(double alpha) const;

 private:
  explicit PreferenceCdf(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
};

inline double cdf_eval(const PreferenceCdf& cdf, double alpha) { return cdf(alpha); }

/// Piecewise-linear CDF from counts over a uniform partition of [0, 1].
/// Errors: AllZeroCounts (also for an empty list), InvalidCdf for negative counts.
PreferenceCdf cdf_from_histogram(std::span<const double> counts);

}  // namespace hullprice
