#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperim/evolutionary.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/metrics.hpp"
#include "hyperim/propagation.hpp"

namespace hyperim {

enum class Algorithm { kHnMoea, kRandom, kHighDegree };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// Invalid or missing configuration entry. field() names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Flat key/value configuration document.
using ConfigValues = std::map<std::string, std::string>;

/// Keys accepted by parse_config, in documentation order.
std::span<const std::string_view> config_keys();

/// Parses `key = value` lines; blank lines and '#' comments are skipped.
ConfigValues parse_key_values(std::istream& in);

/// Reads a flat key/value file, or the echoed "config" object of a JSON run
/// report when the file name ends in ".json".
ConfigValues read_config_file(const std::filesystem::path& path);

/// Name of the environment variable holding the default worker count.
inline constexpr const char* kJobsEnvVar = "HYPERIM_JOBS";

struct RunConfig {
  std::filesystem::path dataset_path;
  Algorithm algorithm = Algorithm::kHnMoea;
  PropagationModel model = WeightedCascade{};
  SpreadConfig spread;
  EAParams ea;
  std::size_t num_runs = 5;
  std::uint64_t master_seed = 42;
  /// Report path; the front CSV is written next to it with a ".csv"
  /// extension. Empty means "do not write files".
  std::filesystem::path output_path;
  /// Worker threads (0 = all cores). Never affects results.
  unsigned jobs = 0;
};

/// Builds a RunConfig from a file document and flag overrides (overrides win).
/// Unset entries take the published experimental defaults: max_hops 5,
/// 100 simulations, population 100, offspring 100, 2 elites, tournament 5,
/// 100 generations, k in [1, 100], lambda 0.30, p in [0.005, 0.02] and
/// 5 runs. The deterministic high-degree baseline always runs once. Throws
/// ConfigError for unknown keys, malformed values, a missing dataset and a
/// missing theta under the LT model.
RunConfig parse_config(const ConfigValues& file, const ConfigValues& overrides = {});

/// Fully materialized key/value form of a config, as echoed in reports.
/// Feeding it back to parse_config reproduces the config (except jobs).
ConfigValues to_values(const RunConfig& config);

/// Reads the `name = theta` presets file.
std::map<std::string, double> read_theta_presets(const std::filesystem::path& path);

/// Location of the bundled presets file.
std::filesystem::path default_presets_path();

struct Aggregate {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  std::size_t count = 0;
};

Aggregate aggregate(std::span<const double> values);

struct RunResult {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  ParetoFront front;
  /// Node tokens of front[i].genes, same order.
  std::vector<std::vector<std::string>> genotype_tokens;
  FrontMetrics metrics;
  double wall_seconds = 0.0;
};

struct RunReport {
  ConfigValues config;
  std::string dataset_path;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::string algorithm;
  std::string model;
  std::uint64_t master_seed = 0;
  Fitness reference;
  std::vector<RunResult> runs;
  Aggregate hypervolume;
  Aggregate population_diversity;
  Aggregate node_diversity;
  std::vector<std::string> warnings;
  std::string version;
  std::string generated_at;
};

/// Executes config.num_runs independent runs and aggregates their metrics.
/// Run r uses the seed derive_seed(master_seed, {r}); runs execute
/// concurrently but are reported in run order.
RunReport run_experiment(const RunConfig& config, const Hypergraph& h);

/// Loads the dataset, runs the experiment and writes the report files when
/// output_path is set.
RunReport run_experiment(const RunConfig& config);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(std::string_view json);
RunReport load_report(const std::filesystem::path& path);

/// Front points as CSV with the header run,k,influence,seed_fraction,genotype.
/// Genotypes are space-separated node tokens.
void write_front_csv(std::ostream& out, const RunReport& report);

/// Writes <output>.json and <output>.csv (the CSV path replaces the
/// extension of output_path).
void write_report_files(const RunReport& report, const std::filesystem::path& output_path);

std::filesystem::path csv_path_for(const std::filesystem::path& output_path);

struct ComparisonRow {
  std::string algorithm;
  Aggregate hypervolume;
  Aggregate population_diversity;
  Aggregate node_diversity;
  bool best_hypervolume = false;
  bool best_population_diversity = false;
  bool best_node_diversity = false;
};

struct Comparison {
  std::string dataset_path;
  std::string model;
  std::vector<ComparisonRow> rows;
};

/// Tabulates reports over the same dataset and model, flagging the maximum
/// mean of each metric (every tied row is flagged). Throws
/// std::invalid_argument for fewer than two reports or mismatched
/// dataset/model.
Comparison compare(std::span<const RunReport> reports);

std::string format_comparison_text(const Comparison& comparison);
std::string format_comparison_csv(const Comparison& comparison);

}  // namespace hyperim
