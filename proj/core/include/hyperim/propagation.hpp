#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"

namespace hyperim {

/// Weighted cascade: every node activated in the previous timestep attempts
/// each inactive neighbor m once, succeeding with probability 1/d(m).
struct WeightedCascade {};

/// Susceptible-infected contact process: at every timestep a probability p is
/// drawn from U[p_min, p_max]; each active node samples one incident hyperedge
/// uniformly and attempts each inactive member with probability p.
struct Sicp {
  double p_min = 0.005;
  double p_max = 0.02;
};

/// Hyperedge linear threshold: a hyperedge touched by the last activations
/// fires once the active fraction of its members reaches theta, activating
/// all of its members at the next timestep. Deterministic.
struct LinearThreshold {
  double theta = 0.5;
};

using PropagationModel = std::variant<WeightedCascade, Sicp, LinearThreshold>;

/// Throws std::invalid_argument unless 0 <= p_min <= p_max <= 1 (SICP) or
/// 0 < theta < 1 (LT).
void validate_model(const PropagationModel& model);

/// Short human-readable label, e.g. "WC", "SICP[0.005,0.02]", "LT(0.8)".
std::string describe(const PropagationModel& model);

std::string model_name(const PropagationModel& model);

bool is_deterministic(const PropagationModel& model) noexcept;

struct SpreadConfig {
  std::uint32_t max_hops = 5;
  /// Ignored (treated as 1) for deterministic models.
  std::uint32_t num_simulations = 100;
  std::uint64_t rng_seed = 0;
  /// Worker threads for the Monte-Carlo loop; 0 = hardware concurrency.
  unsigned jobs = 1;
};

struct SpreadResult {
  double mean_activated = 0.0;
  std::vector<std::uint32_t> per_simulation_counts;

  /// Standard error of mean_activated (sample standard deviation / sqrt(N)).
  double standard_error() const;
};

/// Runs single spread processes on one hypergraph, reusing scratch buffers
/// between runs. Not thread-safe; use one Simulator per thread.
///
/// All processes start from the seeds at timestep 0 and stop when a timestep
/// activates nothing or after max_hops timesteps. A node that is already
/// active (including nodes activated earlier in the current timestep) is never
/// attempted, so no random numbers are spent on it. Random draws happen in
/// ascending (source node, target node) order.
class Simulator {
 public:
  explicit Simulator(const Hypergraph& h);

  std::size_t run_wc(std::span<const NodeId> seeds, std::uint32_t max_hops, Rng& rng);
  std::size_t run_sicp(std::span<const NodeId> seeds, double p_min, double p_max,
                       std::uint32_t max_hops, Rng& rng);
  std::size_t run_lt(std::span<const NodeId> seeds, double theta, std::uint32_t max_hops);

  std::size_t run(std::span<const NodeId> seeds, const PropagationModel& model,
                  std::uint32_t max_hops, Rng& rng);

  /// Timestep at which v became active in the last run (0 for seeds), or -1.
  int activation_step(NodeId v) const;

  /// Nodes active at the end of the last run; order unspecified.
  std::span<const NodeId> activated() const noexcept { return active_; }

 private:
  void begin(std::span<const NodeId> seeds);
  bool is_active(NodeId v) const noexcept { return mark_[v] == epoch_; }
  void activate(NodeId v, std::uint32_t step) {
    mark_[v] = epoch_;
    step_[v] = step;
    active_.push_back(v);
  }

  const Hypergraph& graph_;
  std::vector<double> inverse_degree_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> step_;
  std::vector<std::uint32_t> edge_mark_;
  std::vector<NodeId> active_;
  std::uint32_t epoch_ = 0;
};

std::size_t simulate_wc(const Hypergraph& h, std::span<const NodeId> seeds,
                        std::uint32_t max_hops, Rng& rng);
std::size_t simulate_sicp(const Hypergraph& h, std::span<const NodeId> seeds,
                          double p_min, double p_max, std::uint32_t max_hops, Rng& rng);
std::size_t simulate_lt(const Hypergraph& h, std::span<const NodeId> seeds,
                        double theta, std::uint32_t max_hops);

/// Monte-Carlo estimate of the expected final number of active nodes.
///
/// Simulation i draws from Rng::stream(config.rng_seed, {i}), so the result is
/// a pure function of (h, seeds, model, config) regardless of config.jobs.
/// Deterministic models run exactly one simulation.
SpreadResult expected_spread(const Hypergraph& h, std::span<const NodeId> seeds,
                             const PropagationModel& model, const SpreadConfig& config);

}  // namespace hyperim
