#pragma once

#include <cstddef>
#include <cstdint>

#include "hyperim/hypergraph.hpp"

namespace hyperim {

/// Parameters of the seeded random hypergraph generator.
///
/// Edge sizes are uniform in [min_edge_size, max_edge_size]. Members are drawn
/// without replacement with probability proportional to a Zipf-like node
/// popularity (rank r gets weight (r+1)^-popularity_exponent), so the result
/// has the heavy-tailed degree profile of real co-authorship and review
/// hypergraphs. Popularity ranks are a random permutation of the node ids.
struct SyntheticParams {
  std::size_t nodes = 200;
  std::size_t edges = 400;
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 6;
  double popularity_exponent = 0.8;
  std::uint64_t seed = 1;
};

/// Generates a hypergraph with exactly `nodes` nodes and `edges` distinct
/// hyperedges. Nodes left uncovered by the random draw are appended to
/// random hyperedges. Throws std::invalid_argument for unsatisfiable
/// parameters.
Hypergraph generate_synthetic(const SyntheticParams& params);

}  // namespace hyperim
