#include "hullprice/market.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hullprice/errors.hpp"

namespace hullprice {

NormalizedItem::NormalizedItem(std::string id, double p, double r)
    : id_(std::move(id)), p_(p), r_(r), ln_p_(std::log(p)), ln_r_(std::log(r)) {}

NormalizedItem NormalizedItem::make(std::string id, double p, double r) {
  if (!(p > 0.0 && p <= 1.0) || !(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorKind::NonPositiveAttribute,
                id + ": normalized attributes must lie in (0,1]");
  }
  return NormalizedItem(std::move(id), p, r);
}

MarketSnapshot::MarketSnapshot(std::vector<NormalizedItem> items, std::optional<std::string> label)
    : items_(std::move(items)), label_(std::move(label)) {
  if (items_.empty()) throw Error(ErrorKind::EmptyMarket, "market has no items");
  std::unordered_set<std::string_view> seen;
  for (const auto& item : items_) {
    if (!seen.insert(item.id()).second) throw Error(ErrorKind::DuplicateId, item.id());
  }
}

const NormalizedItem* MarketSnapshot::find(std::string_view id) const {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [&](const NormalizedItem& item) { return item.id() == id; });
  return it == items_.end() ? nullptr : &*it;
}

void NormalizationConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "epsilon must lie in (0,1]");
  }
}

namespace {

// Rounding in the min-max formulas can land a hair above 1; genuine
// overshoot (a raw price below an explicit anchor) is left for
// NormalizedItem::make to reject.
double clamp_unit(double v) { return v > 1.0 && v <= 1.0 + 1e-12 ? 1.0 : v; }

}  // namespace

PriceScale PriceScale::fit(std::span<const double> raw_prices, PriceRule rule, double epsilon) {
  if (raw_prices.empty()) throw Error(ErrorKind::EmptyMarket, "no prices to fit");
  const auto [lo, hi] = std::minmax_element(raw_prices.begin(), raw_prices.end());
  return PriceScale(rule, *lo, *hi, epsilon);
}

PriceScale PriceScale::anchored(double anchor_price) {
  if (!(anchor_price > 0.0) || !std::isfinite(anchor_price)) {
    throw Error(ErrorKind::InvalidConfig, "anchor price must be positive");
  }
  return PriceScale(PriceRule::ReciprocalMin, anchor_price, anchor_price, 1.0);
}

double PriceScale::normalize(double raw) const {
  switch (rule_) {
    case PriceRule::ReciprocalMin:
      return clamp_unit(min_ / raw);
    case PriceRule::InverseMinMax:
      if (max_ == min_) return 1.0;
      return clamp_unit(epsilon_ + (1.0 - epsilon_) * (max_ - raw) / (max_ - min_));
  }
  return 1.0;
}

double PriceScale::to_raw(double p) const {
  switch (rule_) {
    case PriceRule::ReciprocalMin:
      return min_ / p;
    case PriceRule::InverseMinMax:
      if (max_ == min_) return min_;
      return max_ - (p - epsilon_) / (1.0 - epsilon_) * (max_ - min_);
  }
  return min_ / p;
}

ReputationScale ReputationScale::fit(std::span<const double> raw_reputations, ReputationRule rule,
                                     double epsilon) {
  if (raw_reputations.empty()) throw Error(ErrorKind::EmptyMarket, "no reputations to fit");
  const auto [lo, hi] = std::minmax_element(raw_reputations.begin(), raw_reputations.end());
  return ReputationScale(rule, *lo, *hi, epsilon);
}

bool ReputationScale::admits(double raw) const noexcept {
  if (!std::isfinite(raw)) return false;
  return rule_ == ReputationRule::MinMaxWithFloor ? raw >= 0.0 : raw > 0.0;
}

double ReputationScale::normalize(double raw) const {
  switch (rule_) {
    case ReputationRule::MaxRatio:
      return clamp_unit(raw / max_);
    case ReputationRule::MinMaxWithFloor:
      if (max_ == min_) return 1.0;
      return clamp_unit(epsilon_ + (1.0 - epsilon_) * (raw - min_) / (max_ - min_));
  }
  return 1.0;
}

MarketSnapshot normalize_market(std::span<const RawListing> listings, const PriceScale& prices,
                                const ReputationScale& reputations,
                                std::optional<std::string> label) {
  if (listings.empty()) throw Error(ErrorKind::EmptyMarket, "no listings");
  std::unordered_set<std::string_view> seen;
  std::vector<NormalizedItem> items;
  items.reserve(listings.size());
  for (const auto& listing : listings) {
    if (!seen.insert(listing.id).second) throw Error(ErrorKind::DuplicateId, listing.id);
    if (!(listing.price > 0.0) || !std::isfinite(listing.price) ||
        !reputations.admits(listing.reputation)) {
      throw Error(ErrorKind::NonPositiveAttribute, listing.id);
    }
    items.push_back(NormalizedItem::make(listing.id, prices.normalize(listing.price),
                                         reputations.normalize(listing.reputation)));
  }
  return MarketSnapshot(std::move(items), std::move(label));
}

MarketSnapshot normalize_market(std::span<const RawListing> listings,
                                const NormalizationConfig& config,
                                std::optional<std::string> label) {
  config.validate();
  if (listings.empty()) throw Error(ErrorKind::EmptyMarket, "no listings");
  std::vector<double> prices;
  std::vector<double> reputations;
  prices.reserve(listings.size());
  reputations.reserve(listings.size());
  // Reject bad attributes before they distort the fitted min / max.
  for (const auto& listing : listings) {
    const bool rep_ok = config.reputation_rule == ReputationRule::MinMaxWithFloor
                            ? listing.reputation >= 0.0
                            : listing.reputation > 0.0;
    if (!(listing.price > 0.0) || !std::isfinite(listing.price) || !rep_ok ||
        !std::isfinite(listing.reputation)) {
      throw Error(ErrorKind::NonPositiveAttribute, listing.id);
    }
    prices.push_back(listing.price);
    reputations.push_back(listing.reputation);
  }
  return normalize_market(
      listings, PriceScale::fit(prices, config.price_rule, config.epsilon),
      ReputationScale::fit(reputations, config.reputation_rule, config.epsilon), std::move(label));
}

std::vector<LogPoint> log_project(const MarketSnapshot& market) {
  std::vector<LogPoint> out;
  out.reserve(market.size());
  for (const auto& item : market.items()) out.push_back({item.id(), item.ln_p(), item.ln_r()});
  return out;
}

MarketReport validate_market(const MarketSnapshot& market) {
  MarketReport report;
  const auto& items = market.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const auto& a = items[i];
      const auto& b = items[j];
      const bool same_p = a.p() == b.p();
      const bool same_r = a.r() == b.r();
      if (same_p && same_r) {
        report.duplicate_points.emplace_back(a.id(), b.id());
      } else if (same_p || same_r) {
        report.shared_coordinate.emplace_back(a.id(), b.id());
      }
      if (a.p() < b.p() && a.r() < b.r()) report.dominated.emplace_back(a.id(), b.id());
      if (b.p() < a.p() && b.r() < a.r()) report.dominated.emplace_back(b.id(), a.id());
    }
  }
  return report;
}

}  // namespace hullprice
