#include "hyperim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hyperim/parallel.hpp"

namespace hyperim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void validate_model(const PropagationModel& model) {
  std::visit(Overloaded{
                 [](const WeightedCascade&) {},
                 [](const Sicp& m) {
                   if (!(m.p_min >= 0.0 && m.p_min <= m.p_max && m.p_max <= 1.0)) {
                     throw std::invalid_argument(
                         "SICP probabilities must satisfy 0 <= p_min <= p_max <= 1");
                   }
                 },
                 [](const LinearThreshold& m) {
                   if (!(m.theta > 0.0 && m.theta < 1.0)) {
                     throw std::invalid_argument("LT theta must lie in (0, 1)");
                   }
                 },
             },
             model);
}

std::string model_name(const PropagationModel& model) {
  return std::visit(Overloaded{
                        [](const WeightedCascade&) { return std::string("WC"); },
                        [](const Sicp&) { return std::string("SICP"); },
                        [](const LinearThreshold&) { return std::string("LT"); },
                    },
                    model);
}

std::string describe(const PropagationModel& model) {
  std::ostringstream out;
  out << model_name(model);
  if (const auto* sicp = std::get_if<Sicp>(&model)) {
    out << '[' << sicp->p_min << ',' << sicp->p_max << ']';
  } else if (const auto* lt = std::get_if<LinearThreshold>(&model)) {
    out << '(' << lt->theta << ')';
  }
  return out.str();
}

bool is_deterministic(const PropagationModel& model) noexcept {
  return std::holds_alternative<LinearThreshold>(model);
}

double SpreadResult::standard_error() const {
  const std::size_t n = per_simulation_counts.size();
  if (n < 2) return 0.0;
  double sq = 0.0;
  for (auto c : per_simulation_counts) {
    const double d = static_cast<double>(c) - mean_activated;
    sq += d * d;
  }
  return std::sqrt(sq / static_cast<double>(n - 1) / static_cast<double>(n));
}

Simulator::Simulator(const Hypergraph& h)
    : graph_(h),
      inverse_degree_(h.node_count()),
      mark_(h.node_count(), 0),
      step_(h.node_count(), 0),
      edge_mark_(h.edge_count(), 0) {
  for (NodeId v = 0; v < h.node_count(); ++v) {
    inverse_degree_[v] = 1.0 / static_cast<double>(h.degree(v));
  }
  active_.reserve(h.node_count());
}

void Simulator::begin(std::span<const NodeId> seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed set must not be empty");
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(mark_.begin(), mark_.end(), 0);
    std::fill(edge_mark_.begin(), edge_mark_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
  active_.clear();
  for (NodeId s : seeds) {
    if (s >= graph_.node_count()) {
      throw std::out_of_range("seed node " + std::to_string(s) + " out of range");
    }
    if (!is_active(s)) activate(s, 0);
  }
  std::sort(active_.begin(), active_.end());
}

int Simulator::activation_step(NodeId v) const {
  if (v >= graph_.node_count()) throw std::out_of_range("node id out of range");
  return is_active(v) ? static_cast<int>(step_[v]) : -1;
}

std::size_t Simulator::run_wc(std::span<const NodeId> seeds, std::uint32_t max_hops,
                              Rng& rng) {
  begin(seeds);
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = active_.size();
  for (std::uint32_t t = 0; frontier_begin < frontier_end && t < max_hops; ++t) {
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (NodeId m : graph_.neighbors(active_[i])) {
        if (!is_active(m) && rng.bernoulli(inverse_degree_[m])) activate(m, t + 1);
      }
    }
    frontier_begin = frontier_end;
    frontier_end = active_.size();
    std::sort(active_.begin() + static_cast<std::ptrdiff_t>(frontier_begin),
              active_.end());
  }
  return active_.size();
}

std::size_t Simulator::run_sicp(std::span<const NodeId> seeds, double p_min,
                                double p_max, std::uint32_t max_hops, Rng& rng) {
  begin(seeds);
  bool progressed = true;
  for (std::uint32_t t = 0; progressed && t < max_hops; ++t) {
    const std::size_t active_before = active_.size();
    std::sort(active_.begin(), active_.end());
    const double p = rng.uniform(p_min, p_max);
    for (std::size_t i = 0; i < active_before; ++i) {
      const auto incident = graph_.incident_edges(active_[i]);
      const EdgeId e = incident.size() == 1 ? incident[0] : incident[rng.below(incident.size())];
      for (NodeId m : graph_.edge(e)) {
        if (!is_active(m) && rng.bernoulli(p)) activate(m, t + 1);
      }
    }
    progressed = active_.size() > active_before;
  }
  return active_.size();
}

std::size_t Simulator::run_lt(std::span<const NodeId> seeds, double theta,
                              std::uint32_t max_hops) {
  begin(seeds);
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = active_.size();
  for (std::uint32_t t = 0; frontier_begin < frontier_end && t < max_hops; ++t) {
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (EdgeId e : graph_.incident_edges(active_[i])) {
        if (edge_mark_[e] == epoch_) continue;
        const auto members = graph_.edge(e);
        // Only nodes active before this timestep count towards the threshold.
        std::size_t count = 0;
        for (NodeId m : members) {
          if (is_active(m) && step_[m] <= t) ++count;
        }
        if (static_cast<double>(count) / static_cast<double>(members.size()) < theta) {
          continue;
        }
        edge_mark_[e] = epoch_;
        for (NodeId m : members) {
          if (!is_active(m)) activate(m, t + 1);
        }
      }
    }
    frontier_begin = frontier_end;
    frontier_end = active_.size();
  }
  return active_.size();
}

std::size_t Simulator::run(std::span<const NodeId> seeds, const PropagationModel& model,
                           std::uint32_t max_hops, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const WeightedCascade&) { return run_wc(seeds, max_hops, rng); },
          [&](const Sicp& m) { return run_sicp(seeds, m.p_min, m.p_max, max_hops, rng); },
          [&](const LinearThreshold& m) { return run_lt(seeds, m.theta, max_hops); },
      },
      model);
}

std::size_t simulate_wc(const Hypergraph& h, std::span<const NodeId> seeds,
                        std::uint32_t max_hops, Rng& rng) {
  return Simulator(h).run_wc(seeds, max_hops, rng);
}

std::size_t simulate_sicp(const Hypergraph& h, std::span<const NodeId> seeds,
                          double p_min, double p_max, std::uint32_t max_hops, Rng& rng) {
  return Simulator(h).run_sicp(seeds, p_min, p_max, max_hops, rng);
}

std::size_t simulate_lt(const Hypergraph& h, std::span<const NodeId> seeds, double theta,
                        std::uint32_t max_hops) {
  return Simulator(h).run_lt(seeds, theta, max_hops);
}

SpreadResult expected_spread(const Hypergraph& h, std::span<const NodeId> seeds,
                             const PropagationModel& model, const SpreadConfig& config) {
  validate_model(model);
  if (config.max_hops < 1) throw std::invalid_argument("max_hops must be at least 1");
  if (config.num_simulations < 1) {
    throw std::invalid_argument("num_simulations must be at least 1");
  }
  const std::size_t sims = is_deterministic(model) ? 1 : config.num_simulations;

  SpreadResult result;
  result.per_simulation_counts.assign(sims, 0);
  const std::size_t blocks = std::min<std::size_t>(resolve_jobs(config.jobs), sims);
  parallel_for(blocks, static_cast<unsigned>(blocks), [&](std::size_t block) {
    Simulator simulator(h);
    const std::size_t begin = sims * block / blocks;
    const std::size_t end = sims * (block + 1) / blocks;
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = Rng::stream(config.rng_seed, {i});
      result.per_simulation_counts[i] =
          static_cast<std::uint32_t>(simulator.run(seeds, model, config.max_hops, rng));
    }
  });

  std::uint64_t total = 0;
  for (auto c : result.per_simulation_counts) total += c;
  result.mean_activated = static_cast<double>(total) / static_cast<double>(sims);
  return result;
}

}  // namespace hyperim
