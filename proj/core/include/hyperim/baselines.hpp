#pragma once

#include <cstddef>
#include <vector>

#include "hyperim/evolutionary.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/propagation.hpp"
#include "hyperim/rng.hpp"

namespace hyperim {

/// Seed sets S_k for k = k_min..k_max; seed_sets[i] has k_min + i nodes.
struct BaselineFamily {
  std::size_t k_min = 1;
  std::vector<std::vector<NodeId>> seed_sets;

  std::size_t k_max() const noexcept { return k_min + seed_sets.size() - 1; }
  const std::vector<NodeId>& of_size(std::size_t k) const { return seed_sets.at(k - k_min); }
};

/// One nested chain per call: starts from a uniform singleton and repeatedly
/// adds a uniform node not yet in the set. Throws std::invalid_argument when
/// k_max exceeds the node count or k_min is out of [1, k_max].
BaselineFamily random_baseline(const Hypergraph& h, std::size_t k_min, std::size_t k_max,
                               Rng& rng);

/// S_k = the k nodes of highest degree, ties by lower id.
BaselineFamily high_degree_baseline(const Hypergraph& h, std::size_t k_min,
                                    std::size_t k_max);

/// Evaluates every S_k and returns the non-dominated ones. S_k is simulated
/// with the spread seed derive_seed(spread.rng_seed, {k}).
ParetoFront family_to_front(const Hypergraph& h, const BaselineFamily& family,
                            const PropagationModel& model, const SpreadConfig& spread);

}  // namespace hyperim
