#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hyperim/metrics.hpp"
#include "oracles.hpp"

using hyperim::Fitness;
using hyperim::Hypergraph;
using hyperim::NodeId;

using Sets = std::vector<std::vector<NodeId>>;

TEST(Hypervolume, SinglePoint) {
  const std::vector<Fitness> front{{0.5, 0.01}};
  const auto hv = hyperim::hypervolume_2d(front, {0.0, 0.02});
  EXPECT_DOUBLE_EQ(hv.value, 0.005);
  EXPECT_FALSE(hv.empty);
}

TEST(Hypervolume, PointOnReferenceIsEmpty) {
  const std::vector<Fitness> front{{0.0, 0.02}};
  const auto hv = hyperim::hypervolume_2d(front, {0.0, 0.02});
  EXPECT_EQ(hv.value, 0.0);
  EXPECT_TRUE(hv.empty);
}

TEST(Hypervolume, TwoPointStaircase) {
  const std::vector<Fitness> front{{0.8, 0.01}, {0.9, 0.015}};
  EXPECT_NEAR(hyperim::hypervolume_2d(front, {0.0, 0.02}).value, 0.0085, 1e-15);
  std::mt19937_64 gen(1);
  const auto mc = oracle::monte_carlo_hypervolume(front, {0.0, 0.02}, 1000000, gen);
  EXPECT_NEAR(hyperim::hypervolume_2d(front, {0.0, 0.02}).value, mc.value, 3 * mc.sigma);
}

TEST(Hypervolume, MatchesGridArea) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Fitness ref{0.1, 0.9};
  for (int t = 0; t < 500; ++t) {
    std::vector<Fitness> pts(1 + gen() % 20);
    for (auto& p : pts) p = {u(gen), u(gen)};
    ASSERT_NEAR(hyperim::hypervolume_2d(pts, ref).value, oracle::grid_hypervolume(pts, ref),
                1e-12);
  }
}

TEST(Hypervolume, PermutationInvariantAndMonotone) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Fitness ref{0.0, 1.0};
  for (int t = 0; t < 200; ++t) {
    std::vector<Fitness> pts(1 + gen() % 12);
    for (auto& p : pts) p = {u(gen), u(gen)};
    const double base = hyperim::hypervolume_2d(pts, ref).value;
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_NEAR(hyperim::hypervolume_2d(shuffled, ref).value, base, 1e-12);
    auto more = pts;
    more.push_back({u(gen), u(gen)});
    EXPECT_GE(hyperim::hypervolume_2d(more, ref).value, base - 1e-12);
  }
}

TEST(Hypervolume, ReferencePoint) {
  const auto ref = hyperim::reference_point(100, 400);
  EXPECT_EQ(ref.influence, 0.0);
  EXPECT_DOUBLE_EQ(ref.seed_fraction, 101.0 / 400.0);
}

TEST(PopulationDiversity, Examples) {
  EXPECT_EQ(hyperim::population_diversity(Sets{{1, 2}, {1, 2}}), 0.0);
  EXPECT_EQ(hyperim::population_diversity(Sets{{1, 2}, {3}}), 1.0);
  EXPECT_DOUBLE_EQ(hyperim::population_diversity(Sets{{0, 1}, {0, 2}}), 0.5);
  EXPECT_THROW(hyperim::population_diversity(Sets{{1}}), std::domain_error);
}

TEST(PopulationDiversity, AsymmetricDivisor) {
  // |x1 & x2| = 1: 1/1 + 1/3 over 2 ordered pairs -> D = 1 - 2/3.
  const Sets sets{{5}, {5, 6, 7}};
  const auto exact = oracle::rational_population_diversity(sets);
  EXPECT_EQ(exact, oracle::Rational(1, 3));
  EXPECT_NEAR(hyperim::population_diversity(sets), 1.0 / 3.0, 1e-15);
}

TEST(NodeDiversity, Examples) {
  EXPECT_EQ(hyperim::node_diversity(Sets{{1, 2}, {3}}), 1.0);
  EXPECT_EQ(hyperim::node_diversity(Sets{{0, 1}, {0, 2}}), 0.75);
  EXPECT_EQ(hyperim::node_diversity(Sets{{4, 5}, {4, 5}, {4, 5}}), 1.0 / 3.0);
}

TEST(Diversity, RationalOracleOnRandomFronts) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 500; ++t) {
    Sets sets(2 + gen() % 8);
    for (auto& s : sets) {
      std::vector<NodeId> pool(15);
      for (NodeId i = 0; i < 15; ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), gen);
      s.assign(pool.begin(), pool.begin() + 1 + gen() % 6);
    }
    const auto d = hyperim::population_diversity(sets);
    const auto nd = hyperim::node_diversity(sets);
    EXPECT_NEAR(d, boost::rational_cast<double>(oracle::rational_population_diversity(sets)),
                1e-12);
    EXPECT_EQ(nd, boost::rational_cast<double>(oracle::rational_node_diversity(sets)));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_GT(nd, 0.0);
    EXPECT_LE(nd, 1.0);
  }
}

TEST(DegreeProfile, Examples) {
  // a = 0 with degree 4, b = 1 with degree 2.
  const auto h = Hypergraph::from_edges({{0, 1, 2}, {0, 3, 4}});
  ASSERT_EQ(h.degree(0), 4u);
  ASSERT_EQ(h.degree(1), 2u);
  const auto p = hyperim::degree_profile(h, Sets{{0}, {0, 1}});
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{2, 4, 4}));
  EXPECT_DOUBLE_EQ(p.mean, 10.0 / 3.0);
  const auto single = hyperim::degree_profile(h, Sets{{0}});
  EXPECT_DOUBLE_EQ(single.mean, 4.0);
  const auto cover = hyperim::degree_profile(h, Sets{{0, 1}, {2, 3, 4}});
  EXPECT_DOUBLE_EQ(cover.mean, cover.hypergraph_mean);
}

TEST(FrontMetrics, SingleEntryHasNoPopulationDiversity) {
  const auto h = Hypergraph::from_edges({{0, 1}});
  hyperim::ParetoFront front{{{0}, {1.0, 0.5}}};
  const auto m = hyperim::compute_front_metrics(h, front, hyperim::reference_point(1, 2));
  EXPECT_FALSE(m.population_diversity);
  EXPECT_EQ(m.node_diversity, 1.0);
  EXPECT_DOUBLE_EQ(m.hypervolume, 1.0 * (1.0 - 0.5));
}
