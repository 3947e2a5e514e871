#include "hyperim/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperim/rng.hpp"

namespace hyperim {

namespace {

std::vector<NodeId> weighted_sample(const std::vector<double>& weights,
                                    std::size_t count, Rng& rng) {
  std::vector<double> remaining = weights;
  std::vector<NodeId> picked;
  picked.reserve(count);
  double total = 0;
  for (double w : remaining) total += w;
  for (std::size_t i = 0; i < count; ++i) {
    double target = rng.uniform() * total;
    std::size_t chosen = remaining.size();
    for (std::size_t v = 0; v < remaining.size(); ++v) {
      if (remaining[v] <= 0) continue;
      chosen = v;
      target -= remaining[v];
      if (target < 0) break;
    }
    picked.push_back(static_cast<NodeId>(chosen));
    total -= remaining[chosen];
    remaining[chosen] = 0;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

Hypergraph generate_synthetic(const SyntheticParams& params) {
  const std::size_t n = params.nodes;
  if (n < 2) throw std::invalid_argument("synthetic hypergraph needs at least 2 nodes");
  if (params.edges == 0) throw std::invalid_argument("synthetic hypergraph needs edges");
  if (params.min_edge_size < 2 || params.min_edge_size > params.max_edge_size) {
    throw std::invalid_argument("edge sizes must satisfy 2 <= min <= max");
  }
  const std::size_t max_size = std::min(params.max_edge_size, n);
  const std::size_t min_size = std::min(params.min_edge_size, max_size);
  if (params.edges * max_size < n) {
    throw std::invalid_argument("too few hyperedges to cover every node");
  }

  Rng rng(params.seed);

  std::vector<NodeId> rank(n);
  for (std::size_t v = 0; v < n; ++v) rank[v] = static_cast<NodeId>(v);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(rank[i], rank[rng.below(i + 1)]);
  std::vector<double> weight(n);
  for (std::size_t v = 0; v < n; ++v) {
    weight[v] = std::pow(static_cast<double>(rank[v]) + 1.0, -params.popularity_exponent);
  }

  std::set<std::vector<NodeId>> seen;
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(params.edges);
  std::size_t attempts = 0;
  const std::size_t max_attempts = params.edges * 1000;
  while (edges.size() < params.edges) {
    if (++attempts > max_attempts) {
      throw std::invalid_argument("could not draw enough distinct hyperedges");
    }
    const std::size_t size = min_size + rng.below(max_size - min_size + 1);
    auto members = weighted_sample(weight, size, rng);
    if (seen.insert(members).second) edges.push_back(std::move(members));
  }

  std::vector<bool> covered(n, false);
  for (const auto& members : edges) {
    for (NodeId v : members) covered[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v]) continue;
    // Appending keeps the edge count fixed; retry on set collisions.
    for (std::size_t tries = 0;; ++tries) {
      if (tries > 10 * params.edges) {
        throw std::invalid_argument("could not cover every node");
      }
      auto& members = edges[rng.below(edges.size())];
      auto grown = members;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), static_cast<NodeId>(v)),
                   static_cast<NodeId>(v));
      if (seen.contains(grown)) continue;
      seen.erase(members);
      seen.insert(grown);
      members = std::move(grown);
      break;
    }
    covered[v] = true;
  }

  return Hypergraph(n, std::move(edges));
}

}  // namespace hyperim
