#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hullprice/errors.hpp"
#include "hullprice/oracle.hpp"
#include "hullprice/preference.hpp"
#include "random_markets.hpp"

using namespace hullprice;

namespace {

NormalizedItem item(const char* id, double p, double r) { return NormalizedItem::make(id, p, r); }

const MarketSnapshot& three_vertex() {
  static const MarketSnapshot m({item("A", 0.25, 1.0), item("M", 0.5, 0.6), item("B", 1.0, 0.25)});
  return m;
}

}  // namespace

TEST(Utility, Examples) {
  EXPECT_EQ(utility(PreferenceWeight(0.0), item("a", 0.3, 1.0)), 0.0);
  EXPECT_NEAR(utility(PreferenceWeight(1.0), item("a", 0.5, 0.9)), -0.6931471805599453, 1e-15);
  EXPECT_NEAR(utility(PreferenceWeight(0.5), item("a", 0.5, 0.5)), -0.6931471805599453, 1e-15);
  EXPECT_THROW(PreferenceWeight(1.01), Error);
  EXPECT_THROW(PreferenceWeight(-0.01), Error);
}

TEST(SlopeAlpha, RoundTrip) {
  EXPECT_EQ(k_of_alpha(PreferenceWeight(0.0)).value(), 0.0);
  EXPECT_EQ(alpha_of_k(SlopeParam::finite(0.0)).value(), 0.0);
  EXPECT_DOUBLE_EQ(k_of_alpha(PreferenceWeight(0.5)).value(), -1.0);
  EXPECT_DOUBLE_EQ(alpha_of_k(SlopeParam::finite(-1.0)).value(), 0.5);
  EXPECT_DOUBLE_EQ(alpha_of_k(SlopeParam::finite(-3.0)).value(), 0.75);
  EXPECT_TRUE(k_of_alpha(PreferenceWeight(1.0)).is_vertical());
  EXPECT_EQ(alpha_of_k(SlopeParam::vertical()).value(), 1.0);
  EXPECT_EQ(alpha_of_slope(-std::numeric_limits<double>::infinity()), 1.0);
  try {
    SlopeParam::finite(0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PositiveSlope);
  }
  for (double a = 0.0; a < 1.0; a += 0.0137) {
    EXPECT_NEAR(alpha_of_k(k_of_alpha(PreferenceWeight(a))).value(), a, 1e-14);
  }
  // Monotone: steeper slope, larger alpha.
  EXPECT_LT(alpha_of_slope(-0.5), alpha_of_slope(-2.0));
}

TEST(AlphaIntervals, ThreeVertex) {
  const auto iv = alpha_intervals(upper_frontier(three_vertex()));
  ASSERT_EQ(iv.size(), 3u);
  EXPECT_EQ(iv[0].id, "A");
  EXPECT_EQ(iv[0].interval.lo, 0.0);
  EXPECT_NEAR(iv[0].interval.hi, 0.42428335750655505, 1e-12);
  EXPECT_NEAR(iv[2].interval.lo, 0.5581154235118404, 1e-12);
  EXPECT_EQ(iv[2].interval.hi, 1.0);
  EXPECT_EQ(iv[0].interval.hi, iv[1].interval.lo);
  EXPECT_EQ(iv[1].interval.hi, iv[2].interval.lo);
}

TEST(AlphaIntervals, SingleAndSymmetric) {
  const auto one = alpha_intervals(upper_frontier(MarketSnapshot({item("a", 0.5, 0.5)})));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].interval.lo, 0.0);
  EXPECT_EQ(one[0].interval.hi, 1.0);

  const auto two = alpha_intervals(upper_frontier(MarketSnapshot({item("a", 0.25, 1.0), item("b", 1.0, 0.25)})));
  EXPECT_NEAR(two[0].interval.hi, 0.5, 1e-15);

  try {
    alpha_intervals(Frontier());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyFrontier);
  }
}

TEST(MarketShares, ThreeVertexUniform) {
  const auto t = market_shares(upper_frontier(three_vertex()), PreferenceCdf::uniform());
  EXPECT_NEAR(t.share_of("A"), 0.424283, 1e-6);
  EXPECT_NEAR(t.share_of("M"), 0.133832, 1e-6);
  EXPECT_NEAR(t.share_of("B"), 0.441885, 1e-6);
  EXPECT_NEAR(t.total(), 1.0, 1e-12);
  EXPECT_EQ(t.share_of("missing"), 0.0);

  // Independent check with the argmax sweep.
  for (const auto& e : oracle::sweep_shares(three_vertex(), PreferenceCdf::uniform(), {100001})) {
    EXPECT_NEAR(e.share, t.share_of(e.id), 2e-5) << e.id;
  }
}

TEST(MarketShares, SymmetricHalves) {
  const auto t = market_shares(upper_frontier(MarketSnapshot({item("a", 0.25, 1.0), item("b", 1.0, 0.25)})),
                               PreferenceCdf::uniform());
  EXPECT_NEAR(t.share_of("a"), 0.5, 1e-15);
  EXPECT_NEAR(t.share_of("b"), 0.5, 1e-15);
}

TEST(MarketShares, TelescopesForRandomCdfs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gen::random_market(rng, gen::random_size(rng, 1, 60));
    const auto t = market_shares(upper_frontier(m), gen::random_cdf(rng));
    EXPECT_NEAR(t.total(), 1.0, 1e-12);
    for (const auto& e : t.entries) EXPECT_GE(e.share, 0.0);
  }
}

TEST(Preference, PairwisePreferenceFollowsSlope) {
  // U_j >= U_i iff k <= k_ij, for i left of j.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    double p1 = 0.01 + 0.99 * u(rng), p2 = 0.01 + 0.99 * u(rng);
    double r1 = 0.01 + 0.99 * u(rng), r2 = 0.01 + 0.99 * u(rng);
    if (p1 > p2) std::swap(p1, p2);
    if (r1 < r2) std::swap(r1, r2);
    if (p1 == p2 || r1 == r2) continue;
    const auto a = item("i", p1, r1);
    const auto b = item("j", p2, r2);
    const double kij = slope(a, b);
    for (double alpha = 0.0; alpha < 1.0; alpha += 0.01) {
      const double k = k_of_alpha(PreferenceWeight(alpha)).value();
      const double diff = utility(PreferenceWeight(alpha), b) - utility(PreferenceWeight(alpha), a);
      if (std::fabs(k - kij) < 1e-9) continue;
      EXPECT_EQ(diff >= 0.0, k <= kij) << "alpha=" << alpha << " k=" << k << " kij=" << kij;
    }
  }
}

TEST(Preference, ArgmaxInvariantUnderCommonScaling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = gen::random_market(rng, gen::random_size(rng, 3, 30), 0.2);
    std::vector<NormalizedItem> scaled;
    for (const auto& it : m.items()) scaled.push_back(NormalizedItem::make(it.id(), it.p() * 0.5, it.r()));
    const auto a = market_shares(upper_frontier(m), PreferenceCdf::uniform());
    const auto b = market_shares(upper_frontier(MarketSnapshot(scaled)), PreferenceCdf::uniform());
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      EXPECT_EQ(a.entries[i].id, b.entries[i].id);
      EXPECT_NEAR(a.entries[i].share, b.entries[i].share, 1e-12);
    }
  }
}
