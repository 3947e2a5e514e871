#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperim/evolutionary.hpp"
#include "hyperim/hypergraph.hpp"

namespace hyperim {

struct HypervolumeResult {
  double value = 0.0;
  /// Set when no point is strictly better than the reference point in both
  /// objectives; value is then 0.
  bool empty = false;
};

/// Exact area dominated by `front` and bounded by `ref` in the
/// (influence up, seed_fraction down) plane. Points that are not strictly
/// better than ref in both objectives are ignored. Dominated input points
/// are tolerated and contribute nothing.
HypervolumeResult hypervolume_2d(std::span<const Fitness> front, const Fitness& ref);

/// Reference point used for reporting: influence 0, seed fraction
/// (k_max + 1) / n, so a k_max-sized solution still has a positive share.
Fitness reference_point(std::size_t k_max, std::size_t node_count);

/// D(P) = 1 - 1/(|P|(|P|-1)) * sum_i sum_{j != i} |x_i & x_j| / |x_i|.
/// The divisor is the size of the first set of each ordered pair. Throws
/// std::domain_error for fewer than two seed sets.
double population_diversity(std::span<const std::vector<NodeId>> seed_sets);

/// ND(P) = |union of all x_i| / sum_i |x_i|.
double node_diversity(std::span<const std::vector<NodeId>> seed_sets);

struct DegreeProfile {
  /// d(v) for every gene of every seed set, with multiplicity, ascending.
  std::vector<std::size_t> degrees;
  double mean = 0.0;
  /// Mean degree over all nodes of the hypergraph, for reference.
  double hypergraph_mean = 0.0;
};

DegreeProfile degree_profile(const Hypergraph& h,
                             std::span<const std::vector<NodeId>> seed_sets);

struct FrontMetrics {
  double hypervolume = 0.0;
  bool hypervolume_empty = false;
  /// Undefined for fronts with a single entry.
  std::optional<double> population_diversity;
  double node_diversity = 0.0;
  DegreeProfile degrees;
};

FrontMetrics compute_front_metrics(const Hypergraph& h, const ParetoFront& front,
                                   const Fitness& ref);

}  // namespace hyperim
