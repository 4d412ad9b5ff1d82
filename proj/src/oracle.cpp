#include "hullprice/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hullprice/errors.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/preference.hpp"

namespace hullprice::oracle {

void SweepConfig::validate() const {
  if (grid_points < 2) throw Error(ErrorKind::InvalidConfig, "grid_points must be >= 2");
}

double grid_alpha(std::size_t g, std::size_t n) {
  if (g + 1 >= n) return 1.0;
  return static_cast<double>(g) / static_cast<double>(n - 1);
}

const NormalizedItem& choose_at_alpha(double alpha, const std::vector<NormalizedItem>& items) {
  if (items.empty()) throw Error(ErrorKind::EmptyMarket, "nothing to choose from");
  const NormalizedItem* best = &items.front();
  double best_u = alpha * best->ln_p() + (1.0 - alpha) * best->ln_r();
  for (std::size_t i = 1; i < items.size(); ++i) {
    const auto& item = items[i];
    const double u = alpha * item.ln_p() + (1.0 - alpha) * item.ln_r();
    const bool wins = u > best_u ||
                      (u == best_u && (item.r() > best->r() ||
                                       (item.r() == best->r() && item.id() < best->id())));
    if (wins) {
      best = &item;
      best_u = u;
    }
  }
  return *best;
}

std::string choose_at_alpha(double alpha, const MarketSnapshot& market) {
  return choose_at_alpha(alpha, market.items()).id();
}

namespace {

// Index of the argmax item at every grid alpha.
std::vector<std::size_t> sweep_choices(const std::vector<NormalizedItem>& items, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto& chosen = choose_at_alpha(grid_alpha(g, n), items);
    out[g] = static_cast<std::size_t>(&chosen - items.data());
  }
  return out;
}

}  // namespace

std::vector<EmpiricalShare> sweep_shares(const MarketSnapshot& market, const PreferenceCdf& cdf,
                                         const SweepConfig& cfg) {
  cfg.validate();
  const auto& items = market.items();
  const std::size_t n = cfg.grid_points;
  const auto choices = sweep_choices(items, n);

  // Cell g spans the midpoints to its neighbours; a run of equal choices
  // contributes F(run end) - F(run start) in one subtraction.
  auto cell_edge = [&](std::size_t g) {  // left edge of cell g
    if (g == 0) return 0.0;
    if (g >= n) return 1.0;
    return (static_cast<double>(g) - 0.5) / static_cast<double>(n - 1);
  };
  std::vector<double> share(items.size(), 0.0);
  std::size_t run_start = 0;
  for (std::size_t g = 1; g <= n; ++g) {
    if (g == n || choices[g] != choices[run_start]) {
      share[choices[run_start]] += cdf(cell_edge(g)) - cdf(cell_edge(run_start));
      run_start = g;
    }
  }

  std::vector<EmpiricalShare> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out.push_back({items[i].id(), share[i]});
  return out;
}

std::set<std::string> frontier_bruteforce(const MarketSnapshot& market, const SweepConfig& cfg) {
  cfg.validate();
  std::set<std::string> out;
  for (std::size_t idx : sweep_choices(market.items(), cfg.grid_points)) {
    out.insert(market.items()[idx].id());
  }
  return out;
}

Insertion insert_focal(const std::vector<NormalizedItem>& competitors, double p,
                       double focal_reputation) {
  const double x = std::log(p);
  const double y = std::log(focal_reputation);
  Insertion out;
  out.on_frontier = true;
  double left_dist = 0.0;
  double right_dist = 0.0;
  for (const auto& c : competitors) {
    // U_focal - U_c = (1 - alpha) dy + alpha dx.
    const double dx = x - c.ln_p();
    const double dy = y - c.ln_r();
    if (dx >= 0.0 && dy >= 0.0) continue;  // focal weakly dominates, focal wins ties
    if (dx <= 0.0 && dy <= 0.0) {
      out.on_frontier = false;
      out.alpha_lo = 1.0;
      out.alpha_hi = 0.0;
      out.left.reset();
      out.right.reset();
      return out;
    }
    const double cut = dy / (dy - dx);
    if (dy > 0.0) {
      // Cheaper-looking competitor: focal wins only for alpha <= cut.
      if (cut < out.alpha_hi || (cut == out.alpha_hi && out.right && -dx > right_dist)) {
        out.alpha_hi = cut;
        out.right = c.id();
        right_dist = -dx;
      }
    } else {
      // More reputable competitor: focal wins only for alpha >= cut.
      if (cut > out.alpha_lo || (cut == out.alpha_lo && out.left && dx > left_dist)) {
        out.alpha_lo = cut;
        out.left = c.id();
        left_dist = dx;
      }
    }
  }
  out.on_frontier = out.alpha_lo <= out.alpha_hi;
  return out;
}

double share_by_insertion(const std::vector<NormalizedItem>& competitors, double p,
                          double focal_reputation, const PreferenceCdf& cdf) {
  const auto ins = insert_focal(competitors, p, focal_reputation);
  if (!ins.on_frontier) return 0.0;
  return std::max(0.0, cdf(std::clamp(ins.alpha_hi, 0.0, 1.0)) - cdf(std::clamp(ins.alpha_lo, 0.0, 1.0)));
}

GridOptimum price_grid_oracle(const PricingProblem& problem, std::size_t grid_points) {
  problem.validate();
  if (grid_points < 2) throw Error(ErrorKind::InvalidConfig, "grid_points must be >= 2");
  static const std::vector<NormalizedItem> kNone;
  const auto& competitors = problem.competitors ? problem.competitors->items() : kNone;

  GridOptimum best{0.0, -std::numeric_limits<double>::infinity()};
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double p = g + 1 == grid_points
                         ? 1.0
                         : problem.p_min + (1.0 - problem.p_min) * static_cast<double>(g) /
                                               static_cast<double>(grid_points - 1);
    const double profit =
        (problem.ceiling - p) *
        share_by_insertion(competitors, p, problem.focal_reputation, problem.cdf);
    if (profit > best.profit) best = {p, profit};
  }
  return best;
}

namespace {

std::string describe(double a, double b) {
  std::ostringstream os;
  os.precision(12);
  os << a << " vs " << b;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_suite(const MarketSnapshot& market, const PreferenceCdf& cdf,
                                   const std::optional<PricingProblem>& problem,
                                   const SweepConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> out;
  const std::size_t n = cfg.grid_points;
  const double step = 1.0 / static_cast<double>(n - 1);

  const auto scan = upper_frontier_scan(market);
  const auto chain = upper_frontier_chain(market);
  {
    bool same = scan.size() == chain.size();
    for (std::size_t i = 0; same && i < scan.size(); ++i) {
      same = scan.vertices()[i].id() == chain.vertices()[i].id();
    }
    out.push_back({"frontier: scan and monotone chain agree", same,
                   std::to_string(scan.size()) + " vs " + std::to_string(chain.size()) +
                       " vertices"});
  }

  const auto roles = classify(market, chain);
  {
    std::size_t violations = 0;
    for (std::size_t g = 0; g < n; ++g) {
      const auto& chosen = choose_at_alpha(grid_alpha(g, n), market.items());
      const auto idx = static_cast<std::size_t>(&chosen - market.items().data());
      if (roles.items[idx].role != Role::Vertex) ++violations;
    }
    out.push_back({"choice: every grid argmax is a frontier vertex", violations == 0,
                   std::to_string(violations) + " violations over " + std::to_string(n) +
                       " alphas"});
  }

  const auto intervals = alpha_intervals(chain);
  {
    const auto brute = frontier_bruteforce(market, cfg);
    bool subset = true;
    bool all_wide = true;
    for (const auto& id : brute) {
      subset = subset && std::any_of(chain.vertices().begin(), chain.vertices().end(),
                                     [&](const NormalizedItem& v) { return v.id() == id; });
    }
    for (const auto& vi : intervals) all_wide = all_wide && vi.interval.width() > step;
    const bool pass = subset && (!all_wide || brute.size() == chain.size());
    out.push_back({"brute-force frontier matches analytic vertices", pass,
                   std::to_string(brute.size()) + " chosen vs " + std::to_string(chain.size()) +
                       " vertices"});
  }

  const auto table = market_shares(chain, cdf);
  {
    const auto swept = sweep_shares(market, cdf, cfg);
    bool pass = true;
    double worst = 0.0;
    double worst_tol = 0.0;
    for (const auto& e : swept) {
      const double analytic = table.share_of(e.id);
      double tol = 1e-12;
      for (const auto& entry : table.entries) {
        if (entry.id != e.id) continue;
        for (double edge : {entry.interval.lo, entry.interval.hi}) {
          tol += cdf(std::min(1.0, edge + step)) - cdf(std::max(0.0, edge - step));
        }
      }
      if (std::fabs(analytic - e.share) >= worst) {
        worst = std::fabs(analytic - e.share);
        worst_tol = tol;
      }
      pass = pass && std::fabs(analytic - e.share) <= tol;
    }
    out.push_back({"shares: analytic vs grid sweep", pass, "max |diff| = " + describe(worst, worst_tol) + " allowed"});
  }
  out.push_back({"shares: sum to one", std::fabs(table.total() - 1.0) <= 1e-12,
                 "sum = " + describe(table.total(), 1.0)});

  if (problem) {
    const auto solution = optimize_price(*problem);
    const auto grid = price_grid_oracle(*problem, 100000);
    out.push_back({"pricing: optimizer >= 1e5-point grid oracle",
                   solution.profit >= grid.profit - 1e-6 * problem->ceiling,
                   "profit " + describe(solution.profit, grid.profit)});

    static const std::vector<NormalizedItem> kNone;
    const auto& competitors = problem->competitors ? problem->competitors->items() : kNone;
    const Frontier frontier =
        problem->competitors ? upper_frontier(*problem->competitors) : Frontier();
    std::size_t mismatches = 0;
    const auto ivs = competitor_intervals(frontier, problem->focal_reputation);
    for (const auto& iv : ivs) {
      const double p = iv.p_lo == 0.0 ? iv.p_hi / 2 : std::sqrt(iv.p_lo * iv.p_hi);
      const auto ins = insert_focal(competitors, p, problem->focal_reputation);
      const bool active = iv.kind == IntervalKind::Active;
      if (ins.on_frontier != active) {
        ++mismatches;
        continue;
      }
      if (!active) continue;
      const auto left = iv.left ? std::optional<std::string>(iv.left->id()) : std::nullopt;
      const auto right = iv.right ? std::optional<std::string>(iv.right->id()) : std::nullopt;
      if (left != ins.left || right != ins.right) ++mismatches;
    }
    out.push_back({"pricing: interval competitors match insertion oracle", mismatches == 0,
                   std::to_string(mismatches) + " mismatches over " + std::to_string(ivs.size()) +
                       " intervals"});
  }
  return out;
}

}  // namespace hullprice::oracle
