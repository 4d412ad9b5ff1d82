#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hullprice/cdf.hpp"
#include "hullprice/market.hpp"

namespace hullprice::gen {

inline double uniform_open_low(std::mt19937_64& rng, double lo, double hi) {
  // (lo, hi]: flip the half-open [lo, hi) that the standard distribution gives.
  std::uniform_real_distribution<double> d(lo, hi);
  return hi - (d(rng) - lo);
}

inline MarketSnapshot random_market(std::mt19937_64& rng, std::size_t n, double lo = 0.01) {
  std::vector<NormalizedItem> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back(NormalizedItem::make("s" + std::to_string(i), uniform_open_low(rng, lo, 1.0),
                                         uniform_open_low(rng, lo, 1.0)));
  }
  return MarketSnapshot(std::move(items));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Points on a lattice of powers of two: many exact ties in ln p, exact
// duplicates, and runs that are collinear in the log plane.
inline MarketSnapshot lattice_market(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(0, 6);
  std::vector<NormalizedItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = e(rng);
    const int b = e(rng);
    items.push_back(NormalizedItem::make("q" + std::to_string(i), std::ldexp(1.0, -a),
                                         std::ldexp(1.0, -b)));
  }
  return MarketSnapshot(std::move(items));
}

// Points on one log-plane line ln r = c + k ln p, plus copies of some of them.
inline MarketSnapshot collinear_market(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> slope(-3.0, -0.2);
  const double k = slope(rng);
  std::vector<NormalizedItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -4.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 2) - 1);
    const double y = k * (x + 4.0);  // 0 at x = -4, 4k at x = 0
    items.push_back(NormalizedItem::make("c" + std::to_string(i), std::exp(x), std::exp(y)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t copies = n / 3;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto& src = items[pick(rng)];
    items.push_back(NormalizedItem::make("d" + std::to_string(c), src.p(), src.r()));
  }
  std::shuffle(items.begin(), items.end(), rng);
  return MarketSnapshot(std::move(items));
}

inline PreferenceCdf random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t m = random_size(rng, 1, 5);
  std::vector<UniformComponent> comps;
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = std::min(1.0, a + 1e-3), a = b - 1e-3;
    const double w = 0.1 + u(rng);
    total += w;
    comps.push_back({a, b, w});
  }
  double assigned = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    comps[i].weight = i + 1 == m ? 1.0 - assigned : comps[i].weight / total;
    assigned += comps[i].weight;
  }
  return PreferenceCdf::mixture(std::move(comps));
}

inline PreferenceCdf random_piecewise(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t m = random_size(rng, 1, 8);
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < m; ++i) {
    xs.push_back(u(rng));
    ys.push_back(u(rng));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<CdfKnot> knots{{0.0, 0.0}};
  for (std::size_t i = 0; i < m; ++i) {
    if (xs[i] > knots.back().alpha && xs[i] < 1.0) knots.push_back({xs[i], ys[i]});
  }
  knots.push_back({1.0, 1.0});
  return PreferenceCdf::piecewise_linear(std::move(knots));
}

inline PreferenceCdf random_cdf(std::mt19937_64& rng) {
  switch (random_size(rng, 0, 3)) {
    case 0: return PreferenceCdf::uniform();
    case 1: return random_mixture(rng);
    case 2: return random_piecewise(rng);
    default: {
      std::uniform_real_distribution<double> u(0.0, 0.9);
      const double lo = u(rng);
      return PreferenceCdf::uniform_interval(lo, lo + 0.05 + u(rng) * (1.0 - lo - 0.05) / 0.9);
    }
  }
}

}  // namespace hullprice::gen
