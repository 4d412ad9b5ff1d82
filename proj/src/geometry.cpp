#include "hullprice/geometry.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace hullprice {

namespace {

// Forward-error bound for the double evaluation of the 2x2 determinant
// below (Shewchuk's ccwerrboundA); beyond it the sign is certain.
constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2;
constexpr double kErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

int exact_orientation(LogCoord a, LogCoord b, LogCoord c) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const cpp_rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return det.sign();
}

}  // namespace

int orientation(LogCoord a, LogCoord b, LogCoord c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = kErrBound * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

}  // namespace hullprice
