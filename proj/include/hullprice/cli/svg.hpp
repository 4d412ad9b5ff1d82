#pragma once

#include <string>

#include "hullprice/pricing.hpp"

namespace hullprice::cli {

/// Static line chart of profit against normalized price, with dashed rules
/// at the competitor breakpoints and a marker at the optimum. Needs a
/// nonempty solution.curve.
std::string profit_curve_svg(const PricingSolution& solution);

}  // namespace hullprice::cli
