#pragma once

#include "hullprice/market.hpp"

namespace hullprice {

/// A point of the log-attribute plane: x = ln p, y = ln r.
struct LogCoord {
  double x;
  double y;
};

inline LogCoord coord(const NormalizedItem& item) noexcept { return {item.ln_p(), item.ln_r()}; }

/// Exact sign of the cross product (b - a) x (c - a): +1 when c lies to the
/// left of the directed line a->b (above it, for a line running to the
/// right), -1 to the right, 0 when collinear. Exact for all finite inputs.
int orientation(LogCoord a, LogCoord b, LogCoord c);

/// Log-plane slope (b.y - a.y) / (b.x - a.x). Caller guarantees a.x != b.x.
inline double slope(LogCoord a, LogCoord b) noexcept { return (b.y - a.y) / (b.x - a.x); }

}  // namespace hullprice
