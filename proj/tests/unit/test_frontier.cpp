#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hullprice/errors.hpp"
#include "hullprice/frontier.hpp"
#include "hullprice/geometry.hpp"
#include "hullprice/oracle.hpp"
#include "random_markets.hpp"

using namespace hullprice;

namespace {

std::vector<std::string> ids(const Frontier& f) {
  std::vector<std::string> out;
  for (const auto& v : f.vertices()) out.push_back(v.id());
  return out;
}

NormalizedItem item(const char* id, double p, double r) { return NormalizedItem::make(id, p, r); }

}  // namespace

TEST(Slope, Examples) {
  EXPECT_NEAR(slope(item("a", 0.25, 1.0), item("b", 1.0, 0.25)), -1.0, 1e-15);
  EXPECT_NEAR(slope(item("a", 0.25, 1.0), item("b", 0.5, 0.25)), -2.0, 1e-15);
  EXPECT_NEAR(slope(item("a", 0.5, 1.0), item("b", 1.0, 0.5)), -1.0, 1e-15);
  EXPECT_DOUBLE_EQ(slope(item("a", 0.3, 0.9), item("b", 0.7, 0.2)),
                   slope(item("b", 0.7, 0.2), item("a", 0.3, 0.9)));
  try {
    slope(item("a", 0.5, 1.0), item("b", 0.5, 0.2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VerticalPair);
  }
}

TEST(Orientation, ExactOnNearDegenerateInput) {
  // Points that are collinear only up to rounding; the sign must be
  // stable under permutation of the arguments.
  const LogCoord a{0.1, 0.3};
  const LogCoord b{0.1 + 1e-17 * 3, 0.3 + 1e-17};
  const LogCoord c{0.7, 0.5};
  const int s = orientation(a, b, c);
  EXPECT_EQ(orientation(b, c, a), s);
  EXPECT_EQ(orientation(c, a, b), s);
  EXPECT_EQ(orientation(b, a, c), -s);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
}

TEST(UpperFrontier, InteriorPointExcluded) {
  // Chord from (ln .2, 0) to (0, ln .2) sits at -0.81093 at ln .45; the middle
  // item is at ln .4 = -0.91629, below it.
  const MarketSnapshot m({item("A", 0.2, 1.0), item("X", 0.45, 0.4), item("B", 1.0, 0.2)});
  for (const auto& f : {upper_frontier_scan(m), upper_frontier_chain(m)}) {
    EXPECT_EQ(ids(f), (std::vector<std::string>{"A", "B"}));
  }
  const auto roles = classify(m, upper_frontier(m));
  EXPECT_EQ(roles.items[0].role, Role::Vertex);
  EXPECT_EQ(roles.items[1].role, Role::Interior);
  EXPECT_EQ(roles.items[2].role, Role::Vertex);
  EXPECT_EQ(roles.items[2].position, 1u);
}

TEST(UpperFrontier, SingleAndDominated) {
  const MarketSnapshot one({item("a", 0.5, 0.5)});
  EXPECT_EQ(ids(upper_frontier_scan(one)), std::vector<std::string>{"a"});
  EXPECT_TRUE(upper_frontier_chain(one).edge_slopes().empty());

  const MarketSnapshot dom({item("lo", 0.5, 0.5), item("hi", 0.6, 0.6)});
  EXPECT_EQ(ids(upper_frontier_scan(dom)), std::vector<std::string>{"hi"});
  EXPECT_EQ(ids(upper_frontier_chain(dom)), std::vector<std::string>{"hi"});
}

TEST(UpperFrontier, CollinearMiddleExcluded) {
  const MarketSnapshot m({item("a", 0.25, 1.0), item("b", 0.5, 0.5), item("c", 1.0, 0.25)});
  EXPECT_EQ(ids(upper_frontier_scan(m)), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(ids(upper_frontier_chain(m)), (std::vector<std::string>{"a", "c"}));
}

TEST(UpperFrontier, StrictlyConcaveChainAllVertices) {
  const MarketSnapshot m({item("A", 0.25, 1.0), item("M", 0.5, 0.6), item("B", 1.0, 0.25)});
  const auto f = upper_frontier(m);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_NEAR(f.edge_slopes()[0], -0.7369655941662062, 1e-12);
  EXPECT_NEAR(f.edge_slopes()[1], -1.2630344058337937, 1e-12);
  for (const auto& c : classify(m, f).items) EXPECT_EQ(c.role, Role::Vertex);
}

TEST(UpperFrontier, TiePolicy) {
  // Same price: the higher reputation wins. Exact duplicates: lowest id wins.
  const MarketSnapshot m({item("b", 0.5, 0.5), item("a", 0.5, 0.5), item("c", 0.5, 0.3),
                          item("z", 0.25, 1.0)});
  const auto f = upper_frontier_scan(m);
  EXPECT_EQ(ids(f), (std::vector<std::string>{"z", "a"}));
  EXPECT_EQ(ids(upper_frontier_chain(m)), ids(f));
  const auto roles = classify(m, f);
  EXPECT_EQ(roles.items[0].role, Role::DominatedDuplicate);
  EXPECT_EQ(roles.items[1].role, Role::Vertex);
  EXPECT_EQ(roles.items[2].role, Role::DominatedDuplicate);
}

TEST(Classify, MismatchedMarket) {
  const MarketSnapshot m({item("a", 0.5, 0.5)});
  const MarketSnapshot other({item("q", 0.5, 0.5)});
  try {
    classify(m, upper_frontier(other));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedMarket);
  }
}

TEST(Frontier, ConstructorChecksInvariants) {
  EXPECT_THROW(Frontier({item("a", 0.5, 0.5), item("b", 0.4, 0.4)}), Error);
  EXPECT_THROW(Frontier({item("a", 0.25, 1.0), item("b", 0.5, 0.5), item("c", 1.0, 0.25)}), Error);
  EXPECT_NO_THROW(Frontier({item("a", 0.25, 1.0), item("b", 1.0, 0.25)}));
}

TEST(UpperFrontier, RandomPropertiesAgainstBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gen::random_market(rng, gen::random_size(rng, 1, 40));
    const auto f = upper_frontier_chain(m);
    ASSERT_EQ(ids(f), ids(upper_frontier_scan(m)));

    const auto& s = f.edge_slopes();
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_LT(s[i], 0.0);
      if (i > 0) EXPECT_LT(s[i], s[i - 1]);
    }

    // Every non-vertex lies strictly below some hull edge or is weakly dominated.
    const auto roles = classify(m, f);
    std::size_t vertices = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (roles.items[i].role == Role::Vertex) {
        EXPECT_EQ(f.vertices()[roles.items[i].position].id(), m.items()[i].id());
        ++vertices;
      }
    }
    EXPECT_EQ(vertices, f.size());

    // Argmax over a grid only ever picks vertices.
    for (const auto& id : oracle::frontier_bruteforce(m, {2001})) {
      const auto* it = m.find(id);
      ASSERT_NE(it, nullptr);
      EXPECT_EQ(roles.items[static_cast<std::size_t>(it - m.items().data())].role, Role::Vertex);
    }

    // Shuffled input and re-running on the vertices give the same frontier.
    auto items = m.items();
    std::shuffle(items.begin(), items.end(), rng);
    EXPECT_EQ(ids(upper_frontier_chain(MarketSnapshot(items))), ids(f));
    EXPECT_EQ(ids(upper_frontier_scan(MarketSnapshot(f.vertices()))), ids(f));
  }
}

TEST(UpperFrontier, DegenerateConstructionsAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = gen::random_size(rng, 1, 30);
    const auto m = trial % 2 ? gen::lattice_market(rng, n) : gen::collinear_market(rng, n);
    EXPECT_EQ(ids(upper_frontier_scan(m)), ids(upper_frontier_chain(m)));
  }
}
