#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/propagation.hpp"
#include "hyperim/rng.hpp"

namespace hyperim {

/// Objective pair, both normalized by the node count: influence = sigma(S)/n
/// is maximized, seed_fraction = |S|/n is minimized.
struct Fitness {
  double influence = 0.0;
  double seed_fraction = 0.0;

  friend bool operator==(const Fitness&, const Fitness&) = default;
};

/// a dominates b: no worse in both objectives and strictly better in one.
bool dominates(const Fitness& a, const Fitness& b) noexcept;

/// A candidate seed set. Genes are distinct node ids; their order only
/// matters to one-point crossover.
struct Individual {
  std::vector<NodeId> genes;
  std::optional<Fitness> fitness;
};

/// Returns a description of the first violated invariant, or nullopt when
/// genes are distinct valid ids with k_min <= |genes| <= k_max.
std::optional<std::string> check_individual(const Individual& ind, std::size_t node_count,
                                            std::size_t k_min, std::size_t k_max);

struct EAParams {
  std::size_t population_size = 100;
  std::size_t offspring_size = 100;
  std::size_t generations = 100;
  std::size_t elites = 2;
  std::size_t tournament_size = 5;
  std::size_t k_min = 1;
  std::size_t k_max = 100;
  double lambda_fraction = 0.30;
  std::uint64_t rng_seed = 0;
  /// Worker threads for fitness evaluation; 0 = hardware concurrency.
  unsigned jobs = 1;

  /// Throws std::invalid_argument when the parameters cannot be satisfied on
  /// a hypergraph with `node_count` nodes.
  void validate(std::size_t node_count) const;
};

struct FrontEntry {
  std::vector<NodeId> genes;  // ascending
  Fitness fitness;
};

/// Mutually non-dominated (genotype, fitness) pairs.
using ParetoFront = std::vector<FrontEntry>;

// ---------------------------------------------------------------------------
// Sampling helpers

/// The ceil(fraction * n) nodes of highest degree, ties by lower id.
std::vector<NodeId> top_degree_nodes(const Hypergraph& h, double fraction);

/// Draws `count` distinct entries of `pool` without replacement, each draw
/// proportional to the weight of the entries still available.
std::vector<NodeId> sample_proportional(std::span<const NodeId> pool,
                                        std::span<const double> weights,
                                        std::size_t count, Rng& rng);

/// Draws `count` distinct entries of `pool` uniformly without replacement.
std::vector<NodeId> sample_uniform(std::span<const NodeId> pool, std::size_t count,
                                   Rng& rng);

/// Initial population. The first ceil(P/2) individuals sample the top
/// lambda_fraction of nodes by degree with degree-proportional probability;
/// the rest sample V uniformly. Sizes are uniform in
/// [k_min, min(k_max, pool size)]; a pool smaller than k_min is topped up
/// uniformly from the remaining nodes.
std::vector<Individual> smart_initialize(const Hypergraph& h, const EAParams& params,
                                         Rng& rng);

// ---------------------------------------------------------------------------
// Fitness

/// Evaluates one seed set and stores the result in ind.fitness.
Fitness evaluate(const Hypergraph& h, Individual& ind, const PropagationModel& model,
                 const SpreadConfig& spread);

/// Per-run fitness evaluator. Each distinct seed set (as a set) is simulated
/// once; later occurrences reuse the cached value, so Monte-Carlo noise is
/// frozen per genotype for the whole run.
class Evaluator {
 public:
  Evaluator(const Hypergraph& h, PropagationModel model, SpreadConfig spread);

  /// Fills in the fitness of every individual lacking one. New genotypes are
  /// simulated (in parallel on `jobs` workers) with the spread seed
  /// derive_seed(run_seed, {1, generation, i}) where i is the index of the first
  /// individual carrying the genotype, which keeps results independent of the
  /// worker count.
  void evaluate_all(std::span<Individual> population, std::uint64_t run_seed,
                    std::size_t generation, unsigned jobs);

  std::size_t cache_size() const noexcept { return cache_.size(); }
  std::size_t simulations_run() const noexcept { return evaluated_; }

 private:
  const Hypergraph& graph_;
  PropagationModel model_;
  SpreadConfig spread_;
  std::map<std::vector<NodeId>, Fitness> cache_;
  std::size_t evaluated_ = 0;
};

// ---------------------------------------------------------------------------
// NSGA-II ranking

/// Fast non-dominated sort: rank 0 for the non-dominated points, rank r for
/// points non-dominated once ranks < r are removed.
std::vector<std::size_t> nondominated_sort(std::span<const Fitness> points);

/// Crowding distance within one front. Fronts of at most two points are all
/// infinite. Otherwise, per objective with a non-zero range, the extreme
/// points get +inf and interior points add (next - previous) / range, where
/// neighbors come from sorting by (objective value, index). Objectives with
/// zero range contribute nothing.
std::vector<double> crowding_distance(std::span<const Fitness> front);

struct Ranking {
  std::vector<std::size_t> rank;
  std::vector<double> crowding;

  /// NSGA-II crowded comparison: lower rank, then larger crowding distance,
  /// then lower index.
  bool better(std::size_t a, std::size_t b) const noexcept;
};

/// Ranks every point and computes crowding distances front by front.
Ranking rank_population(std::span<const Fitness> points);

/// NSGA-II environmental selection: indices of the `count` survivors, filled
/// front by front in rank order; the last front that does not fit is
/// truncated by descending crowding distance, ties by lower index.
std::vector<std::size_t> environmental_selection(std::span<const Fitness> points,
                                                 std::size_t count);

/// Samples tournament_size distinct indices uniformly and returns the best
/// under Ranking::better.
std::size_t tournament_select(const Ranking& ranking, std::size_t tournament_size,
                              Rng& rng);

// ---------------------------------------------------------------------------
// Variation operators

/// Prefix of `a` up to cut_a followed by the suffix of `b` from cut_b, and the
/// complementary child. No repair is applied.
std::pair<std::vector<NodeId>, std::vector<NodeId>> splice(std::span<const NodeId> a,
                                                           std::span<const NodeId> b,
                                                           std::size_t cut_a,
                                                           std::size_t cut_b);

/// Restores the Individual invariants after crossover: drops repeated genes
/// (first occurrence wins), truncates to k_max, then adds uniformly random
/// absent nodes until the size reaches k_min (at least one).
void repair(std::vector<NodeId>& genes, std::size_t node_count, std::size_t k_min,
            std::size_t k_max, Rng& rng);

/// One-point crossover: one cut point, drawn uniformly from [1, m - 1] with m
/// the shorter parent's length, splits both parents and the suffixes are
/// swapped. With a single-gene parent the cut is 0 or 1 with equal
/// probability, so the parents are either swapped whole or kept.
std::pair<Individual, Individual> one_point_crossover(const Individual& a,
                                                      const Individual& b,
                                                      std::size_t node_count,
                                                      std::size_t k_min,
                                                      std::size_t k_max, Rng& rng);

enum class MutationKind { kNone, kReplacement, kInsertion, kRemoval, kHypergraphReplacement };

std::string to_string(MutationKind kind);

/// Index of a gene drawn with probability proportional to 1 / degree.
std::size_t pick_gene_inverse_degree(const Hypergraph& h, std::span<const NodeId> genes,
                                     Rng& rng);

/// Node from `candidates` drawn with probability proportional to degree.
NodeId pick_node_by_degree(const Hypergraph& h, std::span<const NodeId> candidates,
                           Rng& rng);

/// Applies the requested stochastic sub-operator with the size fallbacks:
/// insertion at k_max and removal at k_min become replacement; replacement or
/// insertion with no absent node left becomes removal. Returns what was
/// applied (kNone when nothing was possible).
MutationKind stochastic_mutation(std::size_t node_count, std::vector<NodeId>& genes,
                                 MutationKind requested, std::size_t k_min,
                                 std::size_t k_max, Rng& rng);

/// Degree-guided replacement: a gene is chosen with probability proportional
/// to 1/degree and replaced, after a fair coin, by a node from V \ x or from
/// N(gene) \ x, chosen with probability proportional to degree. An empty
/// neighbor pool falls back to V \ x; if V \ x is empty too, a gene is removed
/// when the size allows it.
MutationKind hypergraph_mutation(const Hypergraph& h, std::vector<NodeId>& genes,
                                 std::size_t k_min, Rng& rng);

/// Picks the stochastic or the hypergraph-aware operator with equal
/// probability (the stochastic one then picks its sub-operator uniformly) and
/// returns the mutated copy without a fitness.
Individual mutate(const Hypergraph& h, const Individual& ind, const EAParams& params,
                  Rng& rng, MutationKind* applied = nullptr);

// ---------------------------------------------------------------------------
// Main loop

/// Called after every generation's environmental selection (generation 0 is
/// the evaluated initial population).
using GenerationObserver =
    std::function<void(std::size_t generation, std::span<const Individual> population)>;

/// NSGA-II over variable-size seed sets.
///
/// Every generation breeds offspring_size children (two tournament winners,
/// one-point crossover, both children mutated), evaluates them, adds copies
/// of the `elites` best parents to parents + offspring and keeps
/// population_size survivors by rank and then crowding distance. Operator
/// randomness comes from Rng::stream(params.rng_seed, {0}); fitness
/// evaluation seeds derive from params.rng_seed as described at Evaluator.
///
/// Returns the rank-0 individuals of the final population with duplicate
/// seed sets collapsed, sorted by seed-set size.
ParetoFront evolve(const Hypergraph& h, const PropagationModel& model,
                   const SpreadConfig& spread, const EAParams& params,
                   const GenerationObserver& observer = {});

/// Non-dominated subset of (genes, fitness) pairs with duplicate seed sets
/// removed, sorted by ascending seed fraction then descending influence.
ParetoFront nondominated_front(std::vector<FrontEntry> entries);

}  // namespace hyperim
