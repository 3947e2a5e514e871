#include "hyperim/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperim {

namespace {

std::vector<std::vector<NodeId>> sorted_sets(std::span<const std::vector<NodeId>> sets) {
  std::vector<std::vector<NodeId>> sorted(sets.begin(), sets.end());
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  return sorted;
}

std::size_t intersection_size(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

HypervolumeResult hypervolume_2d(std::span<const Fitness> front, const Fitness& ref) {
  std::vector<Fitness> points;
  for (const auto& p : front) {
    if (p.influence > ref.influence && p.seed_fraction < ref.seed_fraction) points.push_back(p);
  }
  if (points.empty()) return {0.0, true};

  std::sort(points.begin(), points.end(), [](const Fitness& a, const Fitness& b) {
    return a.seed_fraction < b.seed_fraction ||
           (a.seed_fraction == b.seed_fraction && a.influence > b.influence);
  });
  // Sweep along seed_fraction; each strip [f_i, f_{i+1}) is covered up to the
  // best influence seen so far.
  double area = 0.0;
  double best = ref.influence;
  for (std::size_t i = 0; i < points.size(); ++i) {
    best = std::max(best, points[i].influence);
    const double next =
        i + 1 < points.size() ? points[i + 1].seed_fraction : ref.seed_fraction;
    area += (best - ref.influence) * (next - points[i].seed_fraction);
  }
  return {area, false};
}

Fitness reference_point(std::size_t k_max, std::size_t node_count) {
  return Fitness{0.0, static_cast<double>(k_max + 1) / static_cast<double>(node_count)};
}

double population_diversity(std::span<const std::vector<NodeId>> seed_sets) {
  const std::size_t p = seed_sets.size();
  if (p < 2) throw std::domain_error("population diversity needs at least two seed sets");
  const auto sets = sorted_sets(seed_sets);
  double overlap = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    if (sets[i].empty()) throw std::domain_error("population diversity of an empty seed set");
    std::size_t shared = 0;
    for (std::size_t j = 0; j < p; ++j) {
      if (j != i) shared += intersection_size(sets[i], sets[j]);
    }
    overlap += static_cast<double>(shared) / static_cast<double>(sets[i].size());
  }
  return 1.0 - overlap / (static_cast<double>(p) * static_cast<double>(p - 1));
}

double node_diversity(std::span<const std::vector<NodeId>> seed_sets) {
  std::vector<NodeId> all;
  for (const auto& s : seed_sets) all.insert(all.end(), s.begin(), s.end());
  if (all.empty()) throw std::domain_error("node diversity of an empty front");
  const std::size_t total = all.size();
  std::sort(all.begin(), all.end());
  const auto unique = static_cast<std::size_t>(
      std::unique(all.begin(), all.end()) - all.begin());
  return static_cast<double>(unique) / static_cast<double>(total);
}

DegreeProfile degree_profile(const Hypergraph& h,
                             std::span<const std::vector<NodeId>> seed_sets) {
  DegreeProfile profile;
  double sum = 0.0;
  for (const auto& s : seed_sets) {
    for (NodeId v : s) {
      profile.degrees.push_back(h.degree(v));
      sum += static_cast<double>(h.degree(v));
    }
  }
  if (profile.degrees.empty()) throw std::domain_error("degree profile of an empty front");
  std::sort(profile.degrees.begin(), profile.degrees.end());
  profile.mean = sum / static_cast<double>(profile.degrees.size());
  double all = 0.0;
  for (NodeId v = 0; v < h.node_count(); ++v) all += static_cast<double>(h.degree(v));
  profile.hypergraph_mean = all / static_cast<double>(h.node_count());
  return profile;
}

FrontMetrics compute_front_metrics(const Hypergraph& h, const ParetoFront& front,
                                   const Fitness& ref) {
  std::vector<Fitness> points;
  std::vector<std::vector<NodeId>> sets;
  for (const auto& entry : front) {
    points.push_back(entry.fitness);
    sets.push_back(entry.genes);
  }
  FrontMetrics metrics;
  const auto hv = hypervolume_2d(points, ref);
  metrics.hypervolume = hv.value;
  metrics.hypervolume_empty = hv.empty;
  if (sets.size() >= 2) metrics.population_diversity = population_diversity(sets);
  metrics.node_diversity = node_diversity(sets);
  metrics.degrees = degree_profile(h, sets);
  return metrics;
}

}  // namespace hyperim
