#include "hyperim/evolutionary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperim/parallel.hpp"

namespace hyperim {

namespace {

constexpr std::uint64_t kOperatorStream = 0;
constexpr std::uint64_t kEvaluationStream = 1;

std::vector<NodeId> sorted_copy(std::span<const NodeId> genes) {
  std::vector<NodeId> key(genes.begin(), genes.end());
  std::sort(key.begin(), key.end());
  return key;
}

// Index drawn proportionally to weights[i]; weights must be positive.
std::size_t pick_weighted(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double target = rng.uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    target -= weights[i];
    if (target < 0.0) return i;
  }
  // Rounding can leave target marginally non-negative.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return weights.size() - 1;
}

std::vector<NodeId> absent_nodes(std::size_t node_count, std::span<const NodeId> genes) {
  std::vector<bool> present(node_count, false);
  for (NodeId g : genes) present[g] = true;
  std::vector<NodeId> absent;
  absent.reserve(node_count - std::min(node_count, genes.size()));
  for (std::size_t v = 0; v < node_count; ++v) {
    if (!present[v]) absent.push_back(static_cast<NodeId>(v));
  }
  return absent;
}

}  // namespace

bool dominates(const Fitness& a, const Fitness& b) noexcept {
  const bool no_worse = a.influence >= b.influence && a.seed_fraction <= b.seed_fraction;
  const bool better = a.influence > b.influence || a.seed_fraction < b.seed_fraction;
  return no_worse && better;
}

std::optional<std::string> check_individual(const Individual& ind, std::size_t node_count,
                                            std::size_t k_min, std::size_t k_max) {
  const std::size_t size = ind.genes.size();
  if (size == 0) return "empty genotype";
  if (size < k_min) return "genotype smaller than k_min";
  if (size > k_max) return "genotype larger than k_max";
  for (NodeId g : ind.genes) {
    if (g >= node_count) return "gene " + std::to_string(g) + " is not a valid node id";
  }
  const auto key = sorted_copy(ind.genes);
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) return "duplicate gene";
  return std::nullopt;
}

void EAParams::validate(std::size_t node_count) const {
  if (population_size < 1) throw std::invalid_argument("population_size must be positive");
  if (offspring_size < 1) throw std::invalid_argument("offspring_size must be positive");
  if (tournament_size < 1 || tournament_size > population_size) {
    throw std::invalid_argument("tournament_size must lie in [1, population_size]");
  }
  if (elites > population_size) {
    throw std::invalid_argument("elites must not exceed population_size");
  }
  if (k_min < 1) throw std::invalid_argument("k_min must be at least 1");
  if (k_min > k_max) throw std::invalid_argument("k_min must not exceed k_max");
  if (k_min > node_count) {
    throw std::invalid_argument("unsatisfiable configuration: k_min (" +
                                std::to_string(k_min) + ") exceeds the node count (" +
                                std::to_string(node_count) + ")");
  }
  if (k_max > node_count) {
    throw std::invalid_argument("k_max (" + std::to_string(k_max) +
                                ") exceeds the node count (" +
                                std::to_string(node_count) + ")");
  }
  if (!(lambda_fraction > 0.0 && lambda_fraction <= 1.0)) {
    throw std::invalid_argument("lambda_fraction must lie in (0, 1]");
  }
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<NodeId> top_degree_nodes(const Hypergraph& h, double fraction) {
  const std::size_t n = h.node_count();
  auto count = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  count = std::clamp<std::size_t>(count, 1, n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return h.degree(a) > h.degree(b);
  });
  order.resize(count);
  return order;
}

std::vector<NodeId> sample_proportional(std::span<const NodeId> pool,
                                        std::span<const double> weights,
                                        std::size_t count, Rng& rng) {
  if (pool.size() != weights.size()) {
    throw std::invalid_argument("pool and weights differ in size");
  }
  if (count > pool.size()) throw std::invalid_argument("sample larger than pool");
  std::vector<double> remaining(weights.begin(), weights.end());
  std::vector<NodeId> picked;
  picked.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = pick_weighted(remaining, rng);
    picked.push_back(pool[j]);
    remaining[j] = 0.0;
  }
  return picked;
}

std::vector<NodeId> sample_uniform(std::span<const NodeId> pool, std::size_t count,
                                   Rng& rng) {
  if (count > pool.size()) throw std::invalid_argument("sample larger than pool");
  std::vector<NodeId> scratch(pool.begin(), pool.end());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(scratch.size() - i);
    std::swap(scratch[i], scratch[j]);
  }
  scratch.resize(count);
  return scratch;
}

std::vector<Individual> smart_initialize(const Hypergraph& h, const EAParams& params,
                                         Rng& rng) {
  params.validate(h.node_count());
  const std::size_t n = h.node_count();

  const auto filtered = top_degree_nodes(h, params.lambda_fraction);
  std::vector<double> filtered_weights;
  filtered_weights.reserve(filtered.size());
  for (NodeId v : filtered) filtered_weights.push_back(static_cast<double>(h.degree(v)));

  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});

  auto draw_size = [&](std::size_t pool) {
    const std::size_t hi = std::max(params.k_min, std::min(params.k_max, pool));
    return params.k_min + rng.below(hi - params.k_min + 1);
  };

  const std::size_t degree_half = (params.population_size + 1) / 2;
  std::vector<Individual> population;
  population.reserve(params.population_size);
  for (std::size_t i = 0; i < params.population_size; ++i) {
    Individual ind;
    if (i < degree_half) {
      const std::size_t size = draw_size(filtered.size());
      const std::size_t from_pool = std::min(size, filtered.size());
      ind.genes = sample_proportional(filtered, filtered_weights, from_pool, rng);
      if (from_pool < size) {
        const auto rest = absent_nodes(n, ind.genes);
        const auto extra = sample_uniform(rest, size - from_pool, rng);
        ind.genes.insert(ind.genes.end(), extra.begin(), extra.end());
      }
    } else {
      ind.genes = sample_uniform(all, draw_size(n), rng);
    }
    population.push_back(std::move(ind));
  }
  return population;
}

// ---------------------------------------------------------------------------
// Fitness

Fitness evaluate(const Hypergraph& h, Individual& ind, const PropagationModel& model,
                 const SpreadConfig& spread) {
  const auto n = static_cast<double>(h.node_count());
  const auto result = expected_spread(h, ind.genes, model, spread);
  Fitness f{result.mean_activated / n, static_cast<double>(ind.genes.size()) / n};
  ind.fitness = f;
  return f;
}

Evaluator::Evaluator(const Hypergraph& h, PropagationModel model, SpreadConfig spread)
    : graph_(h), model_(std::move(model)), spread_(spread) {
  validate_model(model_);
}

void Evaluator::evaluate_all(std::span<Individual> population, std::uint64_t run_seed,
                             std::size_t generation, unsigned jobs) {
  struct Pending {
    std::vector<NodeId> key;
    std::size_t first_index;
    std::vector<std::size_t> members;
    Fitness fitness;
  };
  std::vector<Pending> pending;
  std::map<std::vector<NodeId>, std::size_t> pending_index;

  for (std::size_t i = 0; i < population.size(); ++i) {
    auto& ind = population[i];
    if (ind.fitness) continue;
    auto key = sorted_copy(ind.genes);
    if (auto hit = cache_.find(key); hit != cache_.end()) {
      ind.fitness = hit->second;
      continue;
    }
    auto [it, inserted] = pending_index.try_emplace(key, pending.size());
    if (inserted) pending.push_back(Pending{std::move(key), i, {}, {}});
    pending[it->second].members.push_back(i);
  }

  const auto n = static_cast<double>(graph_.node_count());
  parallel_for(pending.size(), jobs, [&](std::size_t p) {
    auto& job = pending[p];
    SpreadConfig config = spread_;
    config.rng_seed = derive_seed(run_seed, {kEvaluationStream, generation, job.first_index});
    config.jobs = 1;
    const auto result = expected_spread(graph_, job.key, model_, config);
    job.fitness = Fitness{result.mean_activated / n, static_cast<double>(job.key.size()) / n};
  });

  for (auto& job : pending) {
    for (std::size_t i : job.members) population[i].fitness = job.fitness;
    cache_.emplace(std::move(job.key), job.fitness);
  }
  evaluated_ += pending.size();
}

// ---------------------------------------------------------------------------
// Ranking

std::vector<std::size_t> nondominated_sort(std::span<const Fitness> points) {
  const std::size_t size = points.size();
  std::vector<std::vector<std::size_t>> dominated_by(size);
  std::vector<std::size_t> domination_count(size, 0);
  std::vector<std::size_t> rank(size, 0);
  std::vector<std::size_t> current;

  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = p + 1; q < size; ++q) {
      if (dominates(points[p], points[q])) {
        dominated_by[p].push_back(q);
        ++domination_count[q];
      } else if (dominates(points[q], points[p])) {
        dominated_by[q].push_back(p);
        ++domination_count[p];
      }
    }
  }
  for (std::size_t p = 0; p < size; ++p) {
    if (domination_count[p] == 0) current.push_back(p);
  }
  for (std::size_t r = 0; !current.empty(); ++r) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      rank[p] = r;
      for (std::size_t q : dominated_by[p]) {
        if (--domination_count[q] == 0) next.push_back(q);
      }
    }
    current = std::move(next);
  }
  return rank;
}

std::vector<double> crowding_distance(std::span<const Fitness> front) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t size = front.size();
  std::vector<double> distance(size, 0.0);
  if (size <= 2) {
    std::fill(distance.begin(), distance.end(), kInf);
    return distance;
  }

  std::vector<std::size_t> order(size);
  auto accumulate = [&](auto objective) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double va = objective(front[a]);
      const double vb = objective(front[b]);
      return va < vb || (va == vb && a < b);
    });
    const double lo = objective(front[order.front()]);
    const double hi = objective(front[order.back()]);
    const double range = hi - lo;
    if (!(range > 0.0)) return;
    distance[order.front()] = kInf;
    distance[order.back()] = kInf;
    for (std::size_t i = 1; i + 1 < size; ++i) {
      distance[order[i]] +=
          (objective(front[order[i + 1]]) - objective(front[order[i - 1]])) / range;
    }
  };
  accumulate([](const Fitness& f) { return f.influence; });
  accumulate([](const Fitness& f) { return f.seed_fraction; });
  return distance;
}

bool Ranking::better(std::size_t a, std::size_t b) const noexcept {
  if (rank[a] != rank[b]) return rank[a] < rank[b];
  if (crowding[a] != crowding[b]) return crowding[a] > crowding[b];
  return a < b;
}

Ranking rank_population(std::span<const Fitness> points) {
  Ranking ranking;
  ranking.rank = nondominated_sort(points);
  ranking.crowding.assign(points.size(), 0.0);
  const std::size_t fronts =
      points.empty() ? 0 : *std::max_element(ranking.rank.begin(), ranking.rank.end()) + 1;
  std::vector<std::vector<std::size_t>> members(fronts);
  for (std::size_t i = 0; i < points.size(); ++i) members[ranking.rank[i]].push_back(i);
  std::vector<Fitness> front;
  for (const auto& indices : members) {
    front.clear();
    for (std::size_t i : indices) front.push_back(points[i]);
    const auto distance = crowding_distance(front);
    for (std::size_t j = 0; j < indices.size(); ++j) ranking.crowding[indices[j]] = distance[j];
  }
  return ranking;
}

std::vector<std::size_t> environmental_selection(std::span<const Fitness> points,
                                                 std::size_t count) {
  const auto ranking = rank_population(points);
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Sorting the whole pool by the crowded comparison fills whole fronts in
  // rank order and truncates the last one by crowding distance.
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ranking.better(a, b); });
  order.resize(std::min(count, order.size()));
  return order;
}

std::size_t tournament_select(const Ranking& ranking, std::size_t tournament_size,
                              Rng& rng) {
  const std::size_t size = ranking.rank.size();
  if (size == 0) throw std::invalid_argument("tournament on an empty population");
  const std::size_t k = std::clamp<std::size_t>(tournament_size, 1, size);
  std::vector<std::size_t> indices(size);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  std::size_t best = size;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(size - i);
    std::swap(indices[i], indices[j]);
    if (best == size || ranking.better(indices[i], best)) best = indices[i];
  }
  return best;
}

// ---------------------------------------------------------------------------
// Variation

std::pair<std::vector<NodeId>, std::vector<NodeId>> splice(std::span<const NodeId> a,
                                                           std::span<const NodeId> b,
                                                           std::size_t cut_a,
                                                           std::size_t cut_b) {
  if (cut_a > a.size() || cut_b > b.size()) throw std::out_of_range("cut point past end");
  std::vector<NodeId> first(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut_a));
  first.insert(first.end(), b.begin() + static_cast<std::ptrdiff_t>(cut_b), b.end());
  std::vector<NodeId> second(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut_b));
  second.insert(second.end(), a.begin() + static_cast<std::ptrdiff_t>(cut_a), a.end());
  return {std::move(first), std::move(second)};
}

void repair(std::vector<NodeId>& genes, std::size_t node_count, std::size_t k_min,
            std::size_t k_max, Rng& rng) {
  std::vector<bool> seen(node_count, false);
  std::size_t kept = 0;
  for (NodeId g : genes) {
    if (seen[g]) continue;
    seen[g] = true;
    genes[kept++] = g;
  }
  genes.resize(std::min(kept, k_max));
  const std::size_t target = std::max<std::size_t>(k_min, 1);
  if (genes.size() < target) {
    const auto absent = absent_nodes(node_count, genes);
    const auto extra = sample_uniform(absent, target - genes.size(), rng);
    genes.insert(genes.end(), extra.begin(), extra.end());
  }
}

std::pair<Individual, Individual> one_point_crossover(const Individual& a,
                                                      const Individual& b,
                                                      std::size_t node_count,
                                                      std::size_t k_min,
                                                      std::size_t k_max, Rng& rng) {
  const std::size_t shorter = std::min(a.genes.size(), b.genes.size());
  const std::size_t cut = shorter >= 2 ? 1 + rng.below(shorter - 1) : rng.below(2) * shorter;
  auto [first, second] = splice(a.genes, b.genes, cut, cut);
  repair(first, node_count, k_min, k_max, rng);
  repair(second, node_count, k_min, k_max, rng);
  return {Individual{std::move(first), std::nullopt},
          Individual{std::move(second), std::nullopt}};
}

std::string to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::kNone: return "none";
    case MutationKind::kReplacement: return "replacement";
    case MutationKind::kInsertion: return "insertion";
    case MutationKind::kRemoval: return "removal";
    case MutationKind::kHypergraphReplacement: return "hypergraph-replacement";
  }
  return "unknown";
}

std::size_t pick_gene_inverse_degree(const Hypergraph& h, std::span<const NodeId> genes,
                                     Rng& rng) {
  if (genes.empty()) throw std::invalid_argument("no genes to pick from");
  std::vector<double> weights;
  weights.reserve(genes.size());
  for (NodeId g : genes) weights.push_back(1.0 / static_cast<double>(h.degree(g)));
  return pick_weighted(weights, rng);
}

NodeId pick_node_by_degree(const Hypergraph& h, std::span<const NodeId> candidates,
                           Rng& rng) {
  if (candidates.empty()) throw std::invalid_argument("no candidates to pick from");
  std::vector<double> weights;
  weights.reserve(candidates.size());
  for (NodeId v : candidates) weights.push_back(static_cast<double>(h.degree(v)));
  return candidates[pick_weighted(weights, rng)];
}

MutationKind stochastic_mutation(std::size_t node_count, std::vector<NodeId>& genes,
                                 MutationKind requested, std::size_t k_min,
                                 std::size_t k_max, Rng& rng) {
  MutationKind kind = requested;
  if (kind == MutationKind::kInsertion && genes.size() >= k_max) {
    kind = MutationKind::kReplacement;
  }
  if (kind == MutationKind::kRemoval && genes.size() <= k_min) {
    kind = MutationKind::kReplacement;
  }
  const auto absent = absent_nodes(node_count, genes);
  if ((kind == MutationKind::kReplacement || kind == MutationKind::kInsertion) &&
      absent.empty()) {
    kind = genes.size() > k_min ? MutationKind::kRemoval : MutationKind::kNone;
  }

  switch (kind) {
    case MutationKind::kReplacement: {
      const std::size_t i = rng.below(genes.size());
      genes[i] = absent[rng.below(absent.size())];
      break;
    }
    case MutationKind::kInsertion:
      genes.push_back(absent[rng.below(absent.size())]);
      break;
    case MutationKind::kRemoval:
      genes.erase(genes.begin() + static_cast<std::ptrdiff_t>(rng.below(genes.size())));
      break;
    default:
      break;
  }
  return kind;
}

MutationKind hypergraph_mutation(const Hypergraph& h, std::vector<NodeId>& genes,
                                 std::size_t k_min, Rng& rng) {
  if (genes.empty()) return MutationKind::kNone;
  const std::size_t index = pick_gene_inverse_degree(h, genes, rng);
  const NodeId gene = genes[index];
  const bool from_neighbors = rng.below(2) == 1;

  std::vector<NodeId> pool;
  if (from_neighbors) {
    const auto neighbors = h.neighbors(gene);
    const auto current = sorted_copy(genes);
    std::set_difference(neighbors.begin(), neighbors.end(), current.begin(), current.end(),
                        std::back_inserter(pool));
  }
  if (pool.empty()) pool = absent_nodes(h.node_count(), genes);
  if (pool.empty()) {
    if (genes.size() <= k_min) return MutationKind::kNone;
    genes.erase(genes.begin() + static_cast<std::ptrdiff_t>(index));
    return MutationKind::kRemoval;
  }
  genes[index] = pick_node_by_degree(h, pool, rng);
  return MutationKind::kHypergraphReplacement;
}

Individual mutate(const Hypergraph& h, const Individual& ind, const EAParams& params,
                  Rng& rng, MutationKind* applied) {
  Individual child{ind.genes, std::nullopt};
  MutationKind kind;
  if (rng.below(2) == 0) {
    static constexpr MutationKind kStochastic[] = {
        MutationKind::kReplacement, MutationKind::kInsertion, MutationKind::kRemoval};
    kind = stochastic_mutation(h.node_count(), child.genes, kStochastic[rng.below(3)],
                               params.k_min, params.k_max, rng);
  } else {
    kind = hypergraph_mutation(h, child.genes, params.k_min, rng);
  }
  if (applied) *applied = kind;
  return child;
}

// ---------------------------------------------------------------------------
// Main loop

ParetoFront nondominated_front(std::vector<FrontEntry> entries) {
  for (auto& entry : entries) std::sort(entry.genes.begin(), entry.genes.end());
  std::vector<FrontEntry> unique;
  {
    std::map<std::vector<NodeId>, bool> seen;
    for (auto& entry : entries) {
      if (seen.try_emplace(entry.genes, true).second) unique.push_back(std::move(entry));
    }
  }
  ParetoFront front;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unique.size() && !dominated; ++j) {
      dominated = j != i && dominates(unique[j].fitness, unique[i].fitness);
    }
    if (!dominated) front.push_back(unique[i]);
  }
  std::sort(front.begin(), front.end(), [](const FrontEntry& a, const FrontEntry& b) {
    if (a.fitness.seed_fraction != b.fitness.seed_fraction) {
      return a.fitness.seed_fraction < b.fitness.seed_fraction;
    }
    if (a.fitness.influence != b.fitness.influence) {
      return a.fitness.influence > b.fitness.influence;
    }
    return a.genes < b.genes;
  });
  return front;
}

ParetoFront evolve(const Hypergraph& h, const PropagationModel& model,
                   const SpreadConfig& spread, const EAParams& params,
                   const GenerationObserver& observer) {
  params.validate(h.node_count());
  validate_model(model);

  Rng rng = Rng::stream(params.rng_seed, {kOperatorStream});
  Evaluator evaluator(h, model, spread);

  auto population = smart_initialize(h, params, rng);
  evaluator.evaluate_all(population, params.rng_seed, 0, params.jobs);
  if (observer) observer(0, population);

  std::vector<Fitness> fitness;
  for (std::size_t generation = 1; generation <= params.generations; ++generation) {
    fitness.clear();
    for (const auto& ind : population) fitness.push_back(*ind.fitness);
    const auto ranking = rank_population(fitness);

    std::vector<Individual> offspring;
    offspring.reserve(params.offspring_size + 1);
    while (offspring.size() < params.offspring_size) {
      const auto& mother = population[tournament_select(ranking, params.tournament_size, rng)];
      const auto& father = population[tournament_select(ranking, params.tournament_size, rng)];
      auto [first, second] =
          one_point_crossover(mother, father, h.node_count(), params.k_min, params.k_max, rng);
      offspring.push_back(mutate(h, first, params, rng));
      auto mutated_second = mutate(h, second, params, rng);
      if (offspring.size() < params.offspring_size) {
        offspring.push_back(std::move(mutated_second));
      }
    }
    evaluator.evaluate_all(offspring, params.rng_seed, generation, params.jobs);

    std::vector<std::size_t> parent_order(population.size());
    std::iota(parent_order.begin(), parent_order.end(), std::size_t{0});
    std::sort(parent_order.begin(), parent_order.end(),
              [&](std::size_t a, std::size_t b) { return ranking.better(a, b); });

    std::vector<Individual> pool = population;
    pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                std::make_move_iterator(offspring.end()));
    for (std::size_t e = 0; e < params.elites; ++e) pool.push_back(population[parent_order[e]]);

    fitness.clear();
    for (const auto& ind : pool) fitness.push_back(*ind.fitness);
    const auto survivors = environmental_selection(fitness, params.population_size);
    std::vector<Individual> next;
    next.reserve(survivors.size());
    for (std::size_t i : survivors) next.push_back(std::move(pool[i]));
    population = std::move(next);
    if (observer) observer(generation, population);
  }

  fitness.clear();
  for (const auto& ind : population) fitness.push_back(*ind.fitness);
  const auto ranks = nondominated_sort(fitness);
  std::vector<FrontEntry> entries;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (ranks[i] == 0) entries.push_back(FrontEntry{population[i].genes, fitness[i]});
  }
  return nondominated_front(std::move(entries));
}

}  // namespace hyperim
