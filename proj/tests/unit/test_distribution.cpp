#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "hullprice/errors.hpp"
#include "hullprice/estimation.hpp"
#include "hullprice/oracle.hpp"
#include "hullprice/preference.hpp"
#include "random_markets.hpp"

using namespace hullprice;

namespace {

NormalizedItem item(const char* id, double p, double r) { return NormalizedItem::make(id, p, r); }

MarketSnapshot three_vertex() {
  return MarketSnapshot({item("A", 0.25, 1.0), item("M", 0.5, 0.6), item("B", 1.0, 0.25)});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no hullprice::Error thrown";
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(CdfEval, Examples) {
  EXPECT_DOUBLE_EQ(cdf_eval(PreferenceCdf::uniform(), 0.37), 0.37);
  EXPECT_DOUBLE_EQ(cdf_eval(PreferenceCdf::uniform_interval(0.2, 0.6), 0.4), 0.5);
  EXPECT_DOUBLE_EQ(cdf_eval(PreferenceCdf::mixture({{0.0, 0.5, 0.5}, {0.5, 1.0, 0.5}}), 0.5), 0.5);
  EXPECT_EQ(kind_of([] { cdf_eval(PreferenceCdf::uniform(), 1.5); }), ErrorKind::OutOfDomain);
  EXPECT_EQ(kind_of([] { cdf_eval(PreferenceCdf::uniform(), -0.1); }), ErrorKind::OutOfDomain);
}

TEST(CdfEval, EndpointsAndMonotone) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = gen::random_cdf(rng);
    EXPECT_EQ(f(0.0), 0.0) << f.tag();
    EXPECT_EQ(f(1.0), 1.0) << f.tag();
    double prev = 0.0;
    for (int g = 0; g <= 1000; ++g) {
      const double v = f(g / 1000.0);
      EXPECT_GE(v, prev);
      EXPECT_LE(v, 1.0);
      prev = v;
    }
  }
}

TEST(CdfFactories, Validation) {
  EXPECT_EQ(kind_of([] { PreferenceCdf::uniform_interval(0.6, 0.2); }), ErrorKind::InvalidCdf);
  EXPECT_EQ(kind_of([] { PreferenceCdf::mixture({}); }), ErrorKind::InvalidCdf);
  EXPECT_EQ(kind_of([] { PreferenceCdf::mixture({{0.0, 0.5, 0.3}}); }), ErrorKind::InvalidCdf);
  EXPECT_EQ(kind_of([] { PreferenceCdf::piecewise_linear({{0.0, 0.0}, {1.0, 0.9}}); }), ErrorKind::InvalidCdf);
  EXPECT_EQ(kind_of([] { PreferenceCdf::piecewise_linear({{0.0, 0.0}, {0.5, 0.7}, {0.4, 0.8}, {1.0, 1.0}}); }),
            ErrorKind::InvalidCdf);
  EXPECT_EQ(kind_of([] { PreferenceCdf::piecewise_linear({{0.0, 0.0}, {0.5, 0.7}, {0.7, 0.6}, {1.0, 1.0}}); }),
            ErrorKind::InvalidCdf);
}

TEST(CdfFromHistogram, Examples) {
  const std::vector<double> flat{1, 1, 1, 1};
  const auto u = cdf_from_histogram(flat);
  for (double a : {0.0, 0.1, 0.25, 0.6, 0.99, 1.0}) EXPECT_NEAR(u(a), a, 1e-15);

  const std::vector<double> first{1, 0, 0, 0};
  const auto f = cdf_from_histogram(first);
  EXPECT_DOUBLE_EQ(f(0.25), 1.0);
  EXPECT_DOUBLE_EQ(f(0.125), 0.5);
  EXPECT_DOUBLE_EQ(f(0.8), 1.0);

  const std::vector<double> skew{1, 3};
  EXPECT_DOUBLE_EQ(cdf_from_histogram(skew)(0.5), 0.25);

  const std::vector<double> zero{0, 0};
  EXPECT_EQ(kind_of([&] { cdf_from_histogram(zero); }), ErrorKind::AllZeroCounts);
  const std::vector<double> neg{1, -1};
  EXPECT_EQ(kind_of([&] { cdf_from_histogram(neg); }), ErrorKind::InvalidCdf);
}

TEST(EstimateMixture, SingleRecord) {
  const std::vector<PurchaseRecord> history{PurchaseRecord(three_vertex(), "M")};
  const auto est = estimate_mixture(history);
  EXPECT_EQ(est.records_used, 1u);
  EXPECT_EQ(est.records_excluded, 0u);
  const auto* mix = std::get_if<MixtureOfUniforms>(&est.cdf.variant());
  ASSERT_NE(mix, nullptr);
  ASSERT_EQ(mix->components.size(), 1u);
  EXPECT_NEAR(mix->components[0].lo, 0.42428335750655505, 1e-12);
  EXPECT_NEAR(mix->components[0].hi, 0.5581154235118404, 1e-12);
  const double mid = 0.5 * (mix->components[0].lo + mix->components[0].hi);
  EXPECT_NEAR(est.cdf(mid), 0.5, 1e-12);
}

TEST(EstimateMixture, SymmetricPair) {
  const MarketSnapshot m({item("a", 0.25, 1.0), item("b", 1.0, 0.25)});
  const std::vector<PurchaseRecord> history{PurchaseRecord(m, "a"), PurchaseRecord(m, "b")};
  EXPECT_NEAR(estimate_mixture(history).cdf(0.5), 0.5, 1e-15);
}

TEST(EstimateMixture, InteriorChoicesExcluded) {
  const MarketSnapshot m({item("A", 0.2, 1.0), item("X", 0.45, 0.4), item("B", 1.0, 0.2)});
  const std::vector<PurchaseRecord> mixed{PurchaseRecord(m, "X"), PurchaseRecord(m, "A")};
  const auto est = estimate_mixture(mixed);
  EXPECT_EQ(est.records_used, 1u);
  EXPECT_EQ(est.records_excluded, 1u);

  const std::vector<PurchaseRecord> bad{PurchaseRecord(m, "X")};
  EXPECT_EQ(kind_of([&] { estimate_mixture(bad); }), ErrorKind::AllRecordsInconsistent);
  EXPECT_EQ(kind_of([] { estimate_mixture(std::vector<PurchaseRecord>{}); }), ErrorKind::EmptyHistory);
  EXPECT_EQ(kind_of([&] { PurchaseRecord(m, "nope"); }), ErrorKind::UnknownChosenId);
}

TEST(EstimateMixture, OrderIndependent) {
  std::mt19937_64 rng(8);
  std::vector<PurchaseRecord> history;
  for (int i = 0; i < 40; ++i) {
    const auto m = gen::random_market(rng, gen::random_size(rng, 2, 10));
    const auto f = upper_frontier(m);
    history.emplace_back(m, f.vertices()[gen::random_size(rng, 0, f.size() - 1)].id());
  }
  auto shuffled = history;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto a = estimate_mixture(history).cdf;
  const auto b = estimate_mixture(shuffled).cdf;
  for (int g = 0; g <= 100; ++g) EXPECT_DOUBLE_EQ(a(g / 100.0), b(g / 100.0));
}

TEST(EstimateMixture, SharesReproduceChoiceFrequencies) {
  std::mt19937_64 rng(99);
  const auto market = gen::random_market(rng, 12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<PurchaseRecord> history;
  std::map<std::string, double> freq;
  for (int i = 0; i < 300; ++i) {
    const auto id = oracle::choose_at_alpha(u(rng), market);
    freq[id] += 1.0 / 300.0;
    history.emplace_back(market, id);
  }
  const auto est = estimate_mixture(history);
  const auto shares = market_shares(upper_frontier(market), est.cdf);
  for (const auto& e : shares.entries) EXPECT_NEAR(e.share, freq[e.id], 1e-12) << e.id;
}
