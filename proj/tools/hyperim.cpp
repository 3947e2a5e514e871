// hyperim: command-line front end for the hyperim library.
//
//   hyperim stats <dataset>
//   hyperim run [config] [--key value ...] [--jobs N]
//   hyperim compare <report.json> <report.json>... [--csv path]
//   hyperim gen-synthetic --nodes N --edges M ... --output path

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperim/experiment.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/synthetic.hpp"
#include "hyperim/version.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFailure = 1;

std::string flag_name(std::string_view key) {
  std::string name = "--";
  for (char c : key) name += c == '_' ? '-' : c;
  return name;
}

int cmd_stats(const std::string& dataset) {
  hyperim::LoadReport load;
  const auto h = hyperim::load_hypergraph(dataset, &load);
  const auto s = hyperim::compute_stats(h);
  nlohmann::ordered_json j;
  j["node_count"] = s.node_count;
  j["hyperedge_count"] = s.hyperedge_count;
  j["avg_hyperdegree"] = s.avg_hyperdegree;
  j["std_hyperdegree"] = s.std_hyperdegree;
  j["max_hyperdegree"] = s.max_hyperdegree;
  j["avg_degree"] = s.avg_degree;
  j["std_degree"] = s.std_degree;
  j["max_degree"] = s.max_degree;
  std::cout << j.dump(2) << '\n';
  if (load.duplicate_tokens_dropped || load.short_lines_dropped || load.duplicate_edges_dropped) {
    std::cerr << "note: dropped " << load.duplicate_tokens_dropped << " repeated tokens, "
              << load.short_lines_dropped << " short lines and " << load.duplicate_edges_dropped
              << " duplicate hyperedges\n";
  }
  return 0;
}

int cmd_run(const std::string& config_path, const std::map<std::string, std::string>& flags) {
  hyperim::ConfigValues file;
  if (!config_path.empty()) file = hyperim::read_config_file(config_path);
  hyperim::ConfigValues overrides(flags.begin(), flags.end());
  const auto config = hyperim::parse_config(file, overrides);

  const auto h = hyperim::load_hypergraph(config.dataset_path);
  const auto report = hyperim::run_experiment(config, h);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';

  if (config.output_path.empty()) {
    std::cout << hyperim::report_to_json(report);
  } else {
    hyperim::write_report_files(report, config.output_path);
    std::cerr << "wrote " << config.output_path.string() << " and "
              << hyperim::csv_path_for(config.output_path).string() << '\n';
  }
  const auto& hv = report.hypervolume;
  std::cerr << report.algorithm << ' ' << report.model << ": hypervolume " << hv.mean << " +- "
            << hv.std << " over " << hv.count << " run(s)\n";
  return 0;
}

int cmd_compare(const std::vector<std::string>& paths, const std::string& csv_path) {
  std::vector<hyperim::RunReport> reports;
  for (const auto& p : paths) reports.push_back(hyperim::load_report(p));
  const auto table = hyperim::compare(reports);
  std::cout << hyperim::format_comparison_text(table);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
    out << hyperim::format_comparison_csv(table);
  }
  return 0;
}

int cmd_gen_synthetic(const hyperim::SyntheticParams& params, const std::string& output) {
  const auto h = hyperim::generate_synthetic(params);
  if (output.empty() || output == "-") {
    hyperim::write_hypergraph(std::cout, h);
  } else {
    hyperim::save_hypergraph(output, h);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective influence maximization on hypergraphs"};
  app.set_version_flag("--version", std::string(hyperim::kVersion));
  app.require_subcommand(1);

  std::string stats_dataset;
  auto* stats = app.add_subcommand("stats", "Print node and hyperedge statistics as JSON");
  stats->add_option("dataset", stats_dataset, "Hyperedge-list file")->required();

  std::string config_path;
  std::map<std::string, std::string> run_flags;
  auto* run = app.add_subcommand("run", "Run an experiment and write its report");
  run->add_option("config", config_path, "key = value file or a previous JSON report");
  for (auto key : hyperim::config_keys()) {
    std::string name = flag_name(key);
    if (key.find('_') != std::string_view::npos) name += ",--" + std::string(key);
    run->add_option_function<std::string>(
        name, [&run_flags, k = std::string(key)](const std::string& v) { run_flags[k] = v; },
        "Overrides '" + std::string(key) + "'");
  }

  std::vector<std::string> report_paths;
  std::string compare_csv;
  auto* cmp = app.add_subcommand("compare", "Tabulate reports over one dataset and model");
  cmp->add_option("reports", report_paths, "JSON reports")->required()->expected(2, -1);
  cmp->add_option("--csv", compare_csv, "Also write the table as CSV");

  hyperim::SyntheticParams synth;
  std::string synth_output;
  auto* gen = app.add_subcommand("gen-synthetic", "Write a seeded random hypergraph");
  gen->add_option("--nodes", synth.nodes, "Node count")->capture_default_str();
  gen->add_option("--edges", synth.edges, "Hyperedge count")->capture_default_str();
  gen->add_option("--min-size", synth.min_edge_size, "Smallest hyperedge")->capture_default_str();
  gen->add_option("--max-size", synth.max_edge_size, "Largest hyperedge")->capture_default_str();
  gen->add_option("--exponent", synth.popularity_exponent, "Popularity exponent")
      ->capture_default_str();
  gen->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--output", synth_output, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) return cmd_stats(stats_dataset);
    if (run->parsed()) return cmd_run(config_path, run_flags);
    if (cmp->parsed()) return cmd_compare(report_paths, compare_csv);
    if (gen->parsed()) return cmd_gen_synthetic(synth, synth_output);
  } catch (const hyperim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
