#pragma once

#include <cstddef>
#include <vector>

#include "hullprice/market.hpp"

namespace hullprice {

/// Upper convex frontier of a market in (ln p, ln r): vertices in strictly
/// increasing ln p (hence strictly decreasing ln r) with strictly decreasing,
/// strictly negative edge slopes. May be empty (a market with no competitors).
class Frontier {
 public:
  Frontier() = default;
  /// Throws InvariantViolation if the vertex chain is not a strict frontier.
  explicit Frontier(std::vector<NormalizedItem> vertices);

  const std::vector<NormalizedItem>& vertices() const noexcept { return vertices_; }
  /// edge_slopes()[j] is the slope between vertices j and j + 1.
  const std::vector<double>& edge_slopes() const noexcept { return edge_slopes_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

 private:
  std::vector<NormalizedItem> vertices_;
  std::vector<double> edge_slopes_;
};

/// k = (ln r_b - ln r_a) / (ln p_b - ln p_a). Symmetric in its arguments.
/// Throws VerticalPair when ln p_a == ln p_b.
double slope(const NormalizedItem& a, const NormalizedItem& b);

/// Max-slope scan over the reputation-sorted items: starting from the
/// highest-reputation item, repeatedly jump to the item to the right that
/// makes the largest (least negative) slope with the current vertex.
/// O(N h) for h frontier vertices.
Frontier upper_frontier_scan(const MarketSnapshot& market);

/// Monotone-chain construction, O(N log N). Same vertices as the scan.
Frontier upper_frontier_chain(const MarketSnapshot& market);

inline Frontier upper_frontier(const MarketSnapshot& market) {
  return upper_frontier_chain(market);
}

enum class Role { Vertex, Interior, DominatedDuplicate };

struct Classification {
  Role role = Role::Interior;
  /// Index into Frontier::vertices(); meaningful only for Role::Vertex.
  std::size_t position = 0;
};

/// One entry per market item, aligned with MarketSnapshot::items().
struct FrontierClassification {
  std::vector<Classification> items;
};

/// Errors: MismatchedMarket when a frontier vertex is not an item of `market`.
FrontierClassification classify(const MarketSnapshot& market, const Frontier& frontier);

}  // namespace hullprice
