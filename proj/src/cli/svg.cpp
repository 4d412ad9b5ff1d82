#include "hullprice/cli/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "hullprice/errors.hpp"

namespace hullprice::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 64;
constexpr double kRight = 24;
constexpr double kTop = 32;
constexpr double kBottom = 48;

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

}  // namespace

std::string profit_curve_svg(const PricingSolution& solution) {
  if (solution.curve.empty()) throw Error(ErrorKind::InvalidConfig, "no curve samples to plot");

  double y_lo = 0.0;
  double y_hi = 0.0;
  for (const auto& pt : solution.curve) {
    y_lo = std::min(y_lo, pt.profit);
    y_hi = std::max(y_hi, pt.profit);
  }
  y_hi = std::max(y_hi, solution.profit);
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  y_hi += 0.05 * (y_hi - y_lo);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double p) { return kLeft + p * plot_w; };
  auto sy = [&](double v) { return kTop + (y_hi - v) / (y_hi - y_lo) * plot_h; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
       "viewBox=\"0 0 640 400\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"20\" text-anchor=\"middle\">expected profit vs normalized price</text>\n";

  // Axes.
  s += "<line x1=\"" + fmt("%.2f", sx(0)) + "\" y1=\"" + fmt("%.2f", sy(y_lo)) + "\" x2=\"" +
       fmt("%.2f", sx(1)) + "\" y2=\"" + fmt("%.2f", sy(y_lo)) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + fmt("%.2f", sx(0)) + "\" y1=\"" + fmt("%.2f", sy(y_lo)) + "\" x2=\"" +
       fmt("%.2f", sx(0)) + "\" y2=\"" + fmt("%.2f", sy(y_hi)) + "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double p = t / 4.0;
    s += "<text x=\"" + fmt("%.2f", sx(p)) + "\" y=\"" + fmt("%.2f", sy(y_lo) + 16) +
         "\" text-anchor=\"middle\">" + fmt("%.2f", p) + "</text>\n";
  }
  for (double v : {y_lo, (y_lo + y_hi) / 2, y_hi}) {
    s += "<text x=\"" + fmt("%.2f", kLeft - 6) + "\" y=\"" + fmt("%.2f", sy(v) + 4) +
         "\" text-anchor=\"end\">" + fmt("%.3g", v) + "</text>\n";
  }
  s += "<text x=\"320\" y=\"392\" text-anchor=\"middle\">p</text>\n";

  for (double b : solution.breakpoints) {
    s += "<line x1=\"" + fmt("%.2f", sx(b)) + "\" y1=\"" + fmt("%.2f", sy(y_lo)) + "\" x2=\"" +
         fmt("%.2f", sx(b)) + "\" y2=\"" + fmt("%.2f", sy(y_hi)) +
         "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  }

  s += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < solution.curve.size(); ++i) {
    const auto& pt = solution.curve[i];
    if (i) s += ' ';
    s += fmt("%.2f", sx(pt.p)) + "," + fmt("%.2f", sy(pt.profit));
  }
  s += "\"/>\n";

  s += "<circle cx=\"" + fmt("%.2f", sx(solution.p_star)) + "\" cy=\"" +
       fmt("%.2f", sy(solution.profit)) + "\" r=\"4\" fill=\"#d62728\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace hullprice::cli
