#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "hullprice/cdf.hpp"
#include "hullprice/market.hpp"

namespace hullprice {

/// One observed purchase: the market the consumer saw and the item bought.
class PurchaseRecord {
 public:
  /// Throws UnknownChosenId when `chosen_id` is not in `market`.
  PurchaseRecord(MarketSnapshot market, std::string chosen_id,
                 std::optional<std::string> user_id = std::nullopt);

  const MarketSnapshot& market() const noexcept { return market_; }
  const std::string& chosen_id() const noexcept { return chosen_id_; }
  const std::optional<std::string>& user_id() const noexcept { return user_id_; }

 private:
  MarketSnapshot market_;
  std::string chosen_id_;
  std::optional<std::string> user_id_;
};

struct MixtureEstimate {
  PreferenceCdf cdf;
  std::size_t records_used = 0;
  /// Records whose chosen item is not a frontier vertex of its market.
  std::size_t records_excluded = 0;
};

/// Equal-weight mixture of uniforms over each record's chosen-vertex alpha
/// interval. Identical intervals are merged (weight = count / used) and
/// components are sorted, so the result does not depend on record order.
/// Errors: EmptyHistory, AllRecordsInconsistent.
MixtureEstimate estimate_mixture(std::span<const PurchaseRecord> history);

}  // namespace hullprice
