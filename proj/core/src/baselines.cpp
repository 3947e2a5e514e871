#include "hyperim/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperim/parallel.hpp"

namespace hyperim {

namespace {

void check_bounds(const Hypergraph& h, std::size_t k_min, std::size_t k_max) {
  if (k_min < 1 || k_min > k_max) {
    throw std::invalid_argument("baseline sizes must satisfy 1 <= k_min <= k_max");
  }
  if (k_max > h.node_count()) {
    throw std::invalid_argument("k_max (" + std::to_string(k_max) +
                                ") exceeds the node count (" +
                                std::to_string(h.node_count()) + ")");
  }
}

BaselineFamily chain_family(const std::vector<NodeId>& order, std::size_t k_min,
                            std::size_t k_max) {
  BaselineFamily family;
  family.k_min = k_min;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    family.seed_sets.emplace_back(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return family;
}

}  // namespace

BaselineFamily random_baseline(const Hypergraph& h, std::size_t k_min, std::size_t k_max,
                               Rng& rng) {
  check_bounds(h, k_min, k_max);
  // Partial Fisher-Yates: position k-1 holds the node added at step k.
  std::vector<NodeId> order(h.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  for (std::size_t i = 0; i < k_max; ++i) {
    std::swap(order[i], order[i + rng.below(order.size() - i)]);
  }
  return chain_family(order, k_min, k_max);
}

BaselineFamily high_degree_baseline(const Hypergraph& h, std::size_t k_min,
                                    std::size_t k_max) {
  check_bounds(h, k_min, k_max);
  std::vector<NodeId> order(h.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return h.degree(a) > h.degree(b); });
  return chain_family(order, k_min, k_max);
}

ParetoFront family_to_front(const Hypergraph& h, const BaselineFamily& family,
                            const PropagationModel& model, const SpreadConfig& spread) {
  validate_model(model);
  const auto n = static_cast<double>(h.node_count());
  std::vector<FrontEntry> entries(family.seed_sets.size());
  parallel_for(entries.size(), spread.jobs, [&](std::size_t i) {
    const auto& seeds = family.seed_sets[i];
    SpreadConfig config = spread;
    config.rng_seed = derive_seed(spread.rng_seed, {family.k_min + i});
    config.jobs = 1;
    const auto result = expected_spread(h, seeds, model, config);
    entries[i] = FrontEntry{seeds, Fitness{result.mean_activated / n,
                                           static_cast<double>(seeds.size()) / n}};
  });
  return nondominated_front(std::move(entries));
}

}  // namespace hyperim
