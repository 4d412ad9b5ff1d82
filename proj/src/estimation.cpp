#include "hullprice/estimation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hullprice/errors.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/preference.hpp"

namespace hullprice {

PurchaseRecord::PurchaseRecord(MarketSnapshot market, std::string chosen_id,
                               std::optional<std::string> user_id)
    : market_(std::move(market)), chosen_id_(std::move(chosen_id)), user_id_(std::move(user_id)) {
  if (market_.find(chosen_id_) == nullptr) throw Error(ErrorKind::UnknownChosenId, chosen_id_);
}

MixtureEstimate estimate_mixture(std::span<const PurchaseRecord> history) {
  if (history.empty()) throw Error(ErrorKind::EmptyHistory, "no purchase records");

  std::map<std::pair<double, double>, std::size_t> counts;
  std::size_t used = 0;
  std::size_t excluded = 0;
  for (const auto& record : history) {
    const auto frontier = upper_frontier(record.market());
    std::optional<AlphaInterval> chosen;
    for (const auto& [id, interval] : alpha_intervals(frontier)) {
      if (id == record.chosen_id()) chosen = interval;
    }
    // Interior or duplicate choices have zero probability under the model.
    if (!chosen || !(chosen->lo < chosen->hi)) {
      ++excluded;
      continue;
    }
    ++counts[{chosen->lo, chosen->hi}];
    ++used;
  }
  if (used == 0) {
    throw Error(ErrorKind::AllRecordsInconsistent,
                std::to_string(excluded) + " records chose items off the frontier");
  }

  std::vector<UniformComponent> components;
  components.reserve(counts.size());
  for (const auto& [bounds, count] : counts) {
    components.push_back({bounds.first, bounds.second,
                          static_cast<double>(count) / static_cast<double>(used)});
  }
  return {PreferenceCdf::mixture(std::move(components)), used, excluded};
}

}  // namespace hullprice
