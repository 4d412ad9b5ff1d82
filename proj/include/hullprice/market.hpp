#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hullprice {

/// A seller as read from input: raw currency price and raw reputation score.
struct RawListing {
  std::string id;
  double price = 0.0;
  double reputation = 0.0;
};

/// Normalized attractiveness pair (p, r) in (0,1]^2 together with its log
/// projection. Larger is more attractive for both attributes. The logs are
/// computed once, here, and never recomputed elsewhere.
class NormalizedItem {
 public:
  /// Throws NonPositiveAttribute unless 0 < p <= 1 and 0 < r <= 1.
  static NormalizedItem make(std::string id, double p, double r);

  const std::string& id() const noexcept { return id_; }
  double p() const noexcept { return p_; }
  double r() const noexcept { return r_; }
  double ln_p() const noexcept { return ln_p_; }
  double ln_r() const noexcept { return ln_r_; }

  friend bool operator==(const NormalizedItem&, const NormalizedItem&) = default;

 private:
  NormalizedItem(std::string id, double p, double r);

  std::string id_;
  double p_;
  double r_;
  double ln_p_;
  double ln_r_;
};

/// Nonempty set of items with unique ids, in input order.
class MarketSnapshot {
 public:
  explicit MarketSnapshot(std::vector<NormalizedItem> items,
                          std::optional<std::string> label = std::nullopt);

  const std::vector<NormalizedItem>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const std::optional<std::string>& label() const noexcept { return label_; }

  /// Linear lookup by id; nullptr when absent.
  const NormalizedItem* find(std::string_view id) const;

 private:
  std::vector<NormalizedItem> items_;
  std::optional<std::string> label_;
};

enum class PriceRule {
  ReciprocalMin,  ///< p = min raw price / raw price
  InverseMinMax,  ///< p = eps + (1 - eps) (max - raw) / (max - min)
};

enum class ReputationRule {
  MaxRatio,        ///< r = raw / max raw
  MinMaxWithFloor, ///< r = eps + (1 - eps) (raw - min) / (max - min); admits raw == 0
};

struct NormalizationConfig {
  PriceRule price_rule = PriceRule::ReciprocalMin;
  ReputationRule reputation_rule = ReputationRule::MaxRatio;
  /// Floor used by the min-max rules; must lie in (0, 1].
  double epsilon = 0.01;

  void validate() const;
};

/// Fitted raw-price <-> normalized-price map.
class PriceScale {
 public:
  /// Fit over a set of strictly positive raw prices.
  static PriceScale fit(std::span<const double> raw_prices, PriceRule rule, double epsilon);
  /// Reciprocal rule anchored at an explicit raw price (the price that maps to p = 1).
  static PriceScale anchored(double anchor_price);

  double normalize(double raw) const;
  double to_raw(double p) const;

  PriceRule rule() const noexcept { return rule_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }

 private:
  PriceScale(PriceRule rule, double min, double max, double epsilon)
      : rule_(rule), min_(min), max_(max), epsilon_(epsilon) {}

  PriceRule rule_;
  double min_;
  double max_;
  double epsilon_;
};

class ReputationScale {
 public:
  static ReputationScale fit(std::span<const double> raw_reputations, ReputationRule rule,
                             double epsilon);

  double normalize(double raw) const;
  /// Whether a raw score is acceptable: > 0 for max_ratio, >= 0 for min-max.
  bool admits(double raw) const noexcept;

 private:
  ReputationScale(ReputationRule rule, double min, double max, double epsilon)
      : rule_(rule), min_(min), max_(max), epsilon_(epsilon) {}

  ReputationRule rule_;
  double min_;
  double max_;
  double epsilon_;
};

/// Normalize raw listings into a snapshot. Output order follows input order.
/// Errors: EmptyMarket, NonPositiveAttribute(id), DuplicateId(id).
MarketSnapshot normalize_market(std::span<const RawListing> listings,
                                const NormalizationConfig& config,
                                std::optional<std::string> label = std::nullopt);

/// Same, with scales fitted elsewhere (e.g. an explicit price anchor).
MarketSnapshot normalize_market(std::span<const RawListing> listings, const PriceScale& prices,
                                const ReputationScale& reputations,
                                std::optional<std::string> label = std::nullopt);

struct LogPoint {
  std::string id;
  double ln_p;
  double ln_r;
};

std::vector<LogPoint> log_project(const MarketSnapshot& market);

/// Informational findings about a market; nothing here is an error.
struct MarketReport {
  /// Pairs of ids with identical (p, r).
  std::vector<std::pair<std::string, std::string>> duplicate_points;
  /// Pairs of ids sharing exactly one coordinate (same p or same r).
  std::vector<std::pair<std::string, std::string>> shared_coordinate;
  /// (dominated id, dominating id): strictly worse in both attributes.
  std::vector<std::pair<std::string, std::string>> dominated;

  bool clean() const noexcept {
    return duplicate_points.empty() && shared_coordinate.empty() && dominated.empty();
  }
};

MarketReport validate_market(const MarketSnapshot& market);

}  // namespace hullprice
