#include "hullprice/frontier.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hullprice/errors.hpp"
#include "hullprice/geometry.hpp"

namespace hullprice {

Frontier::Frontier(std::vector<NormalizedItem> vertices) : vertices_(std::move(vertices)) {
  const auto n = vertices_.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto& a = vertices_[j];
    const auto& b = vertices_[j + 1];
    if (!(a.ln_p() < b.ln_p()) || !(a.ln_r() > b.ln_r())) {
      throw Error(ErrorKind::InvariantViolation,
                  "frontier vertices must increase in ln p and decrease in ln r");
    }
    if (j + 2 < n && orientation(coord(a), coord(b), coord(vertices_[j + 2])) >= 0) {
      throw Error(ErrorKind::InvariantViolation, "frontier is not strictly concave");
    }
    edge_slopes_.push_back(hullprice::slope(coord(a), coord(b)));
  }
}

double slope(const NormalizedItem& a, const NormalizedItem& b) {
  if (a.ln_p() == b.ln_p()) {
    throw Error(ErrorKind::VerticalPair, a.id() + ", " + b.id());
  }
  return hullprice::slope(coord(a), coord(b));
}

namespace {

// Tie policy: one candidate per ln p, the one with the highest ln r, then
// the lowest id. Returned in increasing ln p.
std::vector<const NormalizedItem*> canonical_candidates(const MarketSnapshot& market) {
  std::vector<const NormalizedItem*> sorted;
  sorted.reserve(market.size());
  for (const auto& item : market.items()) sorted.push_back(&item);
  std::sort(sorted.begin(), sorted.end(), [](const NormalizedItem* a, const NormalizedItem* b) {
    if (a->ln_p() != b->ln_p()) return a->ln_p() < b->ln_p();
    if (a->ln_r() != b->ln_r()) return a->ln_r() > b->ln_r();
    return a->id() < b->id();
  });
  std::vector<const NormalizedItem*> out;
  out.reserve(sorted.size());
  for (const auto* item : sorted) {
    if (out.empty() || out.back()->ln_p() != item->ln_p()) out.push_back(item);
  }
  return out;
}

Frontier to_frontier(const std::vector<const NormalizedItem*>& chain) {
  std::vector<NormalizedItem> vertices;
  vertices.reserve(chain.size());
  for (const auto* item : chain) vertices.push_back(*item);
  return Frontier(std::move(vertices));
}

}  // namespace

Frontier upper_frontier_scan(const MarketSnapshot& market) {
  auto items = canonical_candidates(market);
  // Reputation order, best first; among equal r the larger p leads, which
  // makes the first item the top-left frontier vertex.
  std::sort(items.begin(), items.end(), [](const NormalizedItem* a, const NormalizedItem* b) {
    if (a->ln_r() != b->ln_r()) return a->ln_r() > b->ln_r();
    return a->ln_p() > b->ln_p();
  });

  std::vector<const NormalizedItem*> chain{items.front()};
  std::size_t index = 0;
  for (;;) {
    const NormalizedItem* current = items[index];
    std::size_t best = items.size();
    for (std::size_t n = index + 1; n < items.size(); ++n) {
      const NormalizedItem* cand = items[n];
      if (!(cand->ln_p() > current->ln_p())) continue;
      if (best == items.size()) {
        best = n;
        continue;
      }
      // Larger slope from `current` == candidate above the line current->best.
      const int side = orientation(coord(*current), coord(*items[best]), coord(*cand));
      if (side > 0 || (side == 0 && cand->ln_p() > items[best]->ln_p())) best = n;
    }
    if (best == items.size()) break;
    chain.push_back(items[best]);
    index = best;
  }
  return to_frontier(chain);
}

Frontier upper_frontier_chain(const MarketSnapshot& market) {
  const auto items = canonical_candidates(market);

  // Leftmost vertex: the highest r; the last such in ln p order has the largest p.
  std::size_t start = 0;
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i]->ln_r() >= items[start]->ln_r()) start = i;
  }

  std::vector<const NormalizedItem*> hull;
  for (std::size_t i = start; i < items.size(); ++i) {
    const auto c = coord(*items[i]);
    while (hull.size() >= 2 &&
           orientation(coord(*hull[hull.size() - 2]), coord(*hull.back()), c) >= 0) {
      hull.pop_back();
    }
    hull.push_back(items[i]);
  }
  return to_frontier(hull);
}

FrontierClassification classify(const MarketSnapshot& market, const Frontier& frontier) {
  const auto& items = market.items();

  std::unordered_map<std::string_view, std::size_t> vertex_pos;
  for (std::size_t v = 0; v < frontier.size(); ++v) {
    const auto& vertex = frontier.vertices()[v];
    const auto* item = market.find(vertex.id());
    if (item == nullptr || item->p() != vertex.p() || item->r() != vertex.r()) {
      throw Error(ErrorKind::MismatchedMarket, "vertex " + vertex.id() + " is not in the market");
    }
    vertex_pos.emplace(vertex.id(), v);
  }

  // Representative of every ln p group under the tie policy.
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = items[a];
    const auto& y = items[b];
    if (x.ln_p() != y.ln_p()) return x.ln_p() < y.ln_p();
    if (x.ln_r() != y.ln_r()) return x.ln_r() > y.ln_r();
    return x.id() < y.id();
  });
  std::vector<bool> representative(items.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || items[order[k - 1]].ln_p() != items[order[k]].ln_p()) {
      representative[order[k]] = true;
    }
  }

  FrontierClassification out;
  out.items.resize(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (auto it = vertex_pos.find(items[i].id()); it != vertex_pos.end()) {
      out.items[i] = {Role::Vertex, it->second};
    } else if (!representative[i]) {
      out.items[i] = {Role::DominatedDuplicate, 0};
    } else {
      out.items[i] = {Role::Interior, 0};
    }
  }
  return out;
}

}  // namespace hullprice
