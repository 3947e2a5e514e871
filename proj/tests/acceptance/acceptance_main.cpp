// Acceptance checks. Each criterion prints exactly one line:
//   criterion <N> <PASS|FAIL>: <name> (<details>)
// Run one with --criterion N, or all of them without it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperim/baselines.hpp"
#include "hyperim/evolutionary.hpp"
#include "hyperim/experiment.hpp"
#include "hyperim/metrics.hpp"
#include "hyperim/propagation.hpp"
#include "hyperim/synthetic.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using hyperim::Fitness;
using hyperim::Hypergraph;
using hyperim::NodeId;

namespace {

struct Options {
  int criterion = 0;
  fs::path cli;
  fs::path workdir = fs::temp_directory_path() / "hyperim_acceptance";
};

struct Outcome {
  bool pass = false;
  std::string details;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

fs::path synthetic_dataset() { return fs::path(HYPERIM_TEST_DATA_DIR) / "synthetic-200.txt"; }

Outcome lt_worked_example(const Options&) {
  const auto h = Hypergraph::from_edges({{0, 1, 2, 3}});
  hyperim::Simulator sim(h);
  const std::vector<NodeId> seeds{0, 2};
  const auto start = Clock::now();
  const auto count = sim.run_lt(seeds, 0.5, 5);
  const double ms = seconds_since(start) * 1e3;
  const bool ok = count == 4 && sim.activation_step(1) == 1 && sim.activation_step(3) == 1 &&
                  sim.activation_step(0) == 0 && sim.activation_step(2) == 0 && ms < 1.0;
  return {ok, "count " + std::to_string(count) + ", v2/v4 activated at step " +
                  std::to_string(sim.activation_step(1)) + "/" +
                  std::to_string(sim.activation_step(3)) + ", " + fmt(ms, 3) + " ms"};
}

Outcome propagation_oracle(const Options&) {
  const auto start = Clock::now();
  std::mt19937_64 gen(20240501);
  double worst = 0.0;  // largest |error| / SE
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + gen() % 8;
    const auto h = oracle::random_hypergraph(n, 2 + gen() % 5, 4, gen);
    std::vector<NodeId> seeds{static_cast<NodeId>(gen() % n)};
    if (gen() % 2) {
      const auto extra = static_cast<NodeId>(gen() % n);
      if (extra != seeds[0]) seeds.push_back(extra);
    }
    const std::uint32_t hops = 1 + gen() % 5;
    hyperim::SpreadConfig cfg;
    cfg.num_simulations = 100000;
    cfg.max_hops = hops;
    cfg.rng_seed = gen();
    cfg.jobs = 0;

    auto check = [&](double exact, const hyperim::SpreadResult& r) {
      const double se = r.standard_error();
      const double err = std::abs(r.mean_activated - exact);
      if (err > std::max(4 * se, 1e-9)) ++failures;
      if (se > 0) worst = std::max(worst, err / se);
    };
    check(oracle::exact_wc_spread(h, seeds, hops),
          hyperim::expected_spread(h, seeds, hyperim::WeightedCascade{}, cfg));
    const hyperim::Sicp sicp{0.1, 0.6};
    check(oracle::exact_sicp_spread(h, seeds, sicp.p_min, sicp.p_max, hops),
          hyperim::expected_spread(h, seeds, sicp, cfg));
  }
  const double secs = seconds_since(start);
  return {failures == 0 && secs <= 120.0,
          "100 comparisons, " + std::to_string(failures) + " beyond 4 SE, worst " + fmt(worst, 3) +
              " SE, " + fmt(secs, 3) + " s"};
}

Outcome sorting_and_crowding(const Options&) {
  const auto start = Clock::now();
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Fitness> pts(1 + gen() % 50);
    const bool coarse = trial % 2 == 0;
    for (auto& f : pts) {
      f = coarse ? Fitness{static_cast<double>(gen() % 6) / 6, static_cast<double>(gen() % 6) / 6}
                 : Fitness{u(gen), u(gen)};
    }
    const auto ranking = hyperim::rank_population(pts);
    const auto expected_rank = oracle::peel_ranks(pts);
    if (ranking.rank != expected_rank) {
      ++mismatches;
      continue;
    }
    const auto max_rank = *std::max_element(expected_rank.begin(), expected_rank.end());
    for (std::size_t r = 0; r <= max_rank; ++r) {
      std::vector<Fitness> front;
      std::vector<double> got;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (expected_rank[i] == r) {
          front.push_back(pts[i]);
          got.push_back(ranking.crowding[i]);
        }
      }
      if (got != oracle::direct_crowding(front)) ++mismatches;
    }
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs <= 10.0,
          "1000 sets, " + std::to_string(mismatches) + " mismatches, " + fmt(secs, 3) + " s"};
}

Outcome diversity_formulas(const Options&) {
  const auto start = Clock::now();
  std::mt19937_64 gen(11);
  int mismatches = 0;
  double worst_d = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::vector<NodeId>> sets(2 + gen() % 10);
    for (auto& s : sets) {
      std::vector<NodeId> pool(30);
      for (NodeId i = 0; i < 30; ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), gen);
      s.assign(pool.begin(), pool.begin() + 1 + gen() % 12);
    }
    const double d = hyperim::population_diversity(sets);
    const double d_exact =
        boost::rational_cast<double>(oracle::rational_population_diversity(sets));
    const double nd = hyperim::node_diversity(sets);
    const double nd_exact = boost::rational_cast<double>(oracle::rational_node_diversity(sets));
    worst_d = std::max(worst_d, std::abs(d - d_exact));
    if (std::abs(d - d_exact) > 1e-12 || nd != nd_exact) ++mismatches;
  }
  const std::vector<std::vector<NodeId>> same{{1, 2, 3}, {1, 2, 3}};
  const std::vector<std::vector<NodeId>> disjoint{{1, 2}, {3}, {4, 5, 6}};
  const bool corners = hyperim::population_diversity(same) == 0.0 &&
                       hyperim::population_diversity(disjoint) == 1.0 &&
                       hyperim::node_diversity(disjoint) == 1.0;
  const double secs = seconds_since(start);
  return {mismatches == 0 && corners && secs <= 5.0,
          "1000 fronts, " + std::to_string(mismatches) + " mismatches, max |D - exact| " +
              fmt(worst_d, 3) + ", identical/disjoint cases " + (corners ? "exact" : "WRONG") +
              ", " + fmt(secs, 3) + " s"};
}

Outcome hypervolume(const Options&) {
  const auto start = Clock::now();
  std::mt19937_64 gen(20261016);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int outside = 0;
  double worst = 0.0;
  double worst_grid = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<hyperim::FrontEntry> entries;
    const std::size_t count = 1 + gen() % 15;
    for (std::size_t i = 0; i < count; ++i) {
      entries.push_back({{static_cast<NodeId>(i)}, {u(gen), u(gen) * 0.5}});
    }
    std::vector<Fitness> front;
    for (const auto& e : hyperim::nondominated_front(entries)) front.push_back(e.fitness);
    const Fitness ref{0.0, 0.5};
    const double exact = hyperim::hypervolume_2d(front, ref).value;
    const auto mc = oracle::monte_carlo_hypervolume(front, ref, 1000000, gen);
    worst_grid = std::max(worst_grid, std::abs(exact - oracle::grid_hypervolume(front, ref)));
    const double err = std::abs(exact - mc.value);
    if (err > 3 * mc.sigma + 1e-12) ++outside;
    if (mc.sigma > 0) worst = std::max(worst, err / mc.sigma);
  }
  const std::vector<Fitness> single{{0.5, 0.01}};
  const double hand = hyperim::hypervolume_2d(single, {0.0, 0.02}).value;
  const bool hand_ok = std::abs(hand - 0.005) < 1e-15;
  const double secs = seconds_since(start);
  return {outside == 0 && hand_ok && secs <= 30.0,
          "100 fronts, " + std::to_string(outside) + " beyond 3 sigma, worst " + fmt(worst, 3) +
              " sigma, max |HV - grid area| " + fmt(worst_grid, 3) + ", single point " +
              fmt(hand, 6) + ", " + fmt(secs, 3) + " s"};
}

// Desk-scale trend experiment shared by criteria 6 and 7.
struct TrendResult {
  std::map<std::string, hyperim::RunReport> reports;  // key: "<model>/<algorithm>"
  double seconds = 0.0;
};

TrendResult run_trend() {
  const auto start = Clock::now();
  const auto h = hyperim::load_hypergraph(synthetic_dataset());
  TrendResult out;
  for (const std::string model : {"sicp", "lt"}) {
    for (const std::string algorithm : {"hn-moea", "random", "high-degree"}) {
      hyperim::ConfigValues values{{"dataset", synthetic_dataset().string()},
                                   {"algorithm", algorithm},
                                   {"model", model},
                                   {"generations", "20"},
                                   {"runs", "5"},
                                   {"seed", "42"}};
      if (model == "lt") values["theta"] = "0.7";
      auto config = hyperim::parse_config(values);
      config.jobs = 0;
      out.reports[model + "/" + algorithm] = hyperim::run_experiment(config, h);
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

Outcome hypervolume_ordering(const Options&) {
  const auto trend = run_trend();
  auto hv = [&](const std::string& key) { return trend.reports.at(key).hypervolume.mean; };
  const bool sicp_random = hv("sicp/hn-moea") >= 1.2 * hv("sicp/random");
  const bool lt_random = hv("lt/hn-moea") >= 1.2 * hv("lt/random");
  const bool sicp_hd = hv("sicp/hn-moea") >= hv("sicp/high-degree");
  return {sicp_random && lt_random && sicp_hd,
          "SICP hn-moea " + fmt(hv("sicp/hn-moea")) + " vs random " + fmt(hv("sicp/random")) +
              " (x" + fmt(hv("sicp/hn-moea") / hv("sicp/random"), 3) + ") vs high-degree " +
              fmt(hv("sicp/high-degree")) + "; LT hn-moea " + fmt(hv("lt/hn-moea")) +
              " vs random " + fmt(hv("lt/random")) + " (x" +
              fmt(hv("lt/hn-moea") / hv("lt/random"), 3) + "); " + fmt(trend.seconds, 3) + " s"};
}

Outcome node_diversity_ordering(const Options&) {
  const auto trend = run_trend();
  auto nd = [&](const std::string& key) { return trend.reports.at(key).node_diversity.mean; };
  bool ok = true;
  std::string details;
  for (const std::string model : {"sicp", "lt"}) {
    const double ours = nd(model + "/hn-moea");
    const double random = nd(model + "/random");
    const double degree = nd(model + "/high-degree");
    ok = ok && ours > random && ours > degree;
    details += model + " ND hn-moea " + fmt(ours) + " vs random " + fmt(random) +
               " vs high-degree " + fmt(degree) + "; ";
  }
  return {ok, details + fmt(trend.seconds, 3) + " s"};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_determinism(const Options& opt) {
  if (opt.cli.empty() || !fs::exists(opt.cli)) return {false, "CLI binary not found"};
  fs::create_directories(opt.workdir);
  auto invoke = [&](const std::string& name, unsigned jobs) {
    const auto out = opt.workdir / (name + ".json");
    std::ostringstream cmd;
    cmd << '"' << opt.cli.string() << "\" run --dataset \"" << synthetic_dataset().string()
        << "\" --model wc --generations 5 --runs 3 --seed 7 --jobs " << jobs << " --output \""
        << out.string() << "\" 2>/dev/null";
    const int status = std::system(cmd.str().c_str());
    return status == 0 ? read_file(hyperim::csv_path_for(out)) : std::string();
  };
  const auto first = invoke("det_a", 1);
  const auto second = invoke("det_b", 1);
  const auto threaded = invoke("det_c", 4);
  const bool ok = !first.empty() && first == second && first == threaded;
  return {ok, "three invocations (jobs 1, 1, 4): CSVs " +
                  std::string(ok ? "byte-identical" : "DIFFER or missing") + ", " +
                  std::to_string(first.size()) + " bytes"};
}

Outcome runtime_envelope(const Options&) {
  hyperim::SyntheticParams params;
  params.nodes = 500;
  params.edges = 1000;
  params.seed = 9;
  const auto h = hyperim::generate_synthetic(params);
  hyperim::EAParams ea;  // population 100, offspring 100, 100 generations
  ea.rng_seed = 1;
  ea.jobs = 0;
  hyperim::SpreadConfig spread;  // 100 simulations, 5 hops
  spread.jobs = 1;
  const auto start = Clock::now();
  const auto front = hyperim::evolve(h, hyperim::WeightedCascade{}, spread, ea);
  const double secs = seconds_since(start);
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  return {secs <= 900.0 && !front.empty(),
          "n=500 m=1000 WC full run in " + fmt(secs, 4) + " s on " + std::to_string(cores) +
              " core(s), budget 900 s, front size " + std::to_string(front.size())};
}

Outcome operator_fuzz(const Options&) {
  const auto start = Clock::now();
  std::mt19937_64 gen(13);
  std::size_t applications = 0;
  std::size_t violations = 0;
  std::string first_violation;
  hyperim::Rng rng(14);
  while (applications < 100000) {
    const std::size_t n = 2 + gen() % 30;
    const auto h = oracle::random_hypergraph(n, 1 + gen() % 40, 6, gen);
    hyperim::EAParams p;
    p.k_max = 1 + gen() % n;
    p.k_min = 1 + gen() % p.k_max;
    std::vector<hyperim::Individual> pool(8);
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    for (auto& ind : pool) {
      ind.genes = hyperim::sample_uniform(all, p.k_min + rng.below(p.k_max - p.k_min + 1), rng);
    }
    for (int step = 0; step < 500; ++step) {
      const auto& a = pool[rng.below(pool.size())];
      const auto& b = pool[rng.below(pool.size())];
      auto [c, d] = hyperim::one_point_crossover(a, b, n, p.k_min, p.k_max, rng);
      for (auto* child : {&c, &d}) {
        *child = hyperim::mutate(h, *child, p, rng);
        ++applications;
        if (auto why = hyperim::check_individual(*child, n, p.k_min, p.k_max)) {
          if (violations++ == 0) first_violation = *why;
        }
      }
      pool[rng.below(pool.size())] = std::move(c);
      pool[rng.below(pool.size())] = std::move(d);
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs <= 30.0,
          std::to_string(applications) + " crossover+mutation applications, " +
              std::to_string(violations) + " invalid" +
              (first_violation.empty() ? "" : " (" + first_violation + ")") + ", " +
              fmt(secs, 3) + " s"};
}

struct Criterion {
  const char* name;
  std::function<Outcome(const Options&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"LT worked example", lt_worked_example},
      {"propagation matches exact enumeration", propagation_oracle},
      {"non-dominated sorting and crowding distance", sorting_and_crowding},
      {"diversity formulas", diversity_formulas},
      {"hypervolume", hypervolume},
      {"hypervolume ordering at desk scale", hypervolume_ordering},
      {"node diversity ordering at desk scale", node_diversity_ordering},
      {"CLI determinism", cli_determinism},
      {"runtime envelope", runtime_envelope},
      {"operator fuzz validity", operator_fuzz},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      opt.criterion = std::atoi(argv[++i]);
    } else if (arg == "--cli" && i + 1 < argc) {
      opt.cli = argv[++i];
    } else if (arg == "--workdir" && i + 1 < argc) {
      opt.workdir = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N] [--cli path] [--workdir dir]\n";
      return 2;
    }
  }
  const auto& list = criteria();
  if (opt.criterion < 0 || opt.criterion > static_cast<int>(list.size())) {
    std::cerr << "criterion must be in 1.." << list.size() << '\n';
    return 2;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (opt.criterion != 0 && static_cast<int>(i + 1) != opt.criterion) continue;
    Outcome outcome;
    try {
      outcome = list[i].run(opt);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && outcome.pass;
    std::cout << "criterion " << i + 1 << ' ' << (outcome.pass ? "PASS" : "FAIL") << ": "
              << list[i].name << " (" << outcome.details << ")" << std::endl;
  }
  return all_pass ? 0 : 1;
}
