#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hullprice/estimation.hpp"
#include "hullprice/market.hpp"

namespace hullprice::cli {

/// Reads `id,price,reputation`. A zero-byte input or a header with no rows
/// yields an empty list; callers decide whether that is an error.
std::vector<RawListing> read_listings(std::istream& in, std::string_view source);

/// A contiguous block of history rows sharing one market_label.
struct HistoryMarket {
  std::string label;
  std::vector<RawListing> listings;
  std::vector<std::string> chosen_ids;
};

/// Reads `market_label,id,price,reputation,chosen` with chosen in {0,1}.
std::vector<HistoryMarket> read_history(std::istream& in, std::string_view source);

/// One PurchaseRecord per chosen row, each market normalized on its own.
std::vector<PurchaseRecord> to_records(const std::vector<HistoryMarket>& markets,
                                       const NormalizationConfig& config);

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double value);

/// The double nearest to format_number(value).
double round12(double value);

}  // namespace hullprice::cli
