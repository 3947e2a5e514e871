#include "hyperim/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hyperim/baselines.hpp"
#include "hyperim/parallel.hpp"
#include "hyperim/version.hpp"

namespace hyperim {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 22> kKeys = {
    "dataset",     "algorithm",   "model",      "p_min",      "p_max",    "theta",
    "theta_preset", "presets_file", "max_hops",  "simulations", "population", "offspring",
    "generations", "elites",      "tournament", "k_min",      "k_max",    "lambda",
    "runs",        "seed",        "output",     "jobs",
};

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  return s.substr(begin, s.find_last_not_of(kSpace) - begin + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

template <typename T>
T parse_unsigned(const std::string& field, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(field, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

double parse_real(const std::string& field, std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(field, "expected a real number, got '" + std::string(text) + "'");
  }
  return value;
}

std::string format_real(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnvVar); env && *env) {
    return parse_unsigned<unsigned>(kJobsEnvVar, trim(env));
  }
  return 0;
}

Json aggregate_json(const Aggregate& a) {
  Json j;
  j["mean"] = a.count ? Json(a.mean) : Json(nullptr);
  j["std"] = a.count ? Json(a.std) : Json(nullptr);
  j["count"] = a.count;
  return j;
}

Aggregate aggregate_from_json(const Json& j) {
  Aggregate a;
  a.count = j.at("count").get<std::size_t>();
  if (a.count) {
    a.mean = j.at("mean").get<double>();
    a.std = j.at("std").get<double>();
  }
  return a;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kHnMoea: return "hn-moea";
    case Algorithm::kRandom: return "random";
    case Algorithm::kHighDegree: return "high-degree";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  const auto key = lower(trim(name));
  if (key == "hn-moea") return Algorithm::kHnMoea;
  if (key == "random") return Algorithm::kRandom;
  if (key == "high-degree") return Algorithm::kHighDegree;
  throw ConfigError("algorithm", "expected one of hn-moea, random, high-degree; got '" +
                                     std::string(name) + "'");
}

std::span<const std::string_view> config_keys() { return kKeys; }

ConfigValues parse_key_values(std::istream& in) {
  ConfigValues values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(number), "expected 'key = value'");
    }
    const auto key = std::string(trim(content.substr(0, eq)));
    if (key.empty()) throw ConfigError("line " + std::to_string(number), "empty key");
    values[key] = std::string(trim(content.substr(eq + 1)));
  }
  return values;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  if (path.extension() == ".json") {
    const auto doc = Json::parse(in);
    ConfigValues values;
    for (const auto& [key, value] : doc.at("config").items()) {
      values[key] = value.get<std::string>();
    }
    return values;
  }
  return parse_key_values(in);
}

std::filesystem::path default_presets_path() {
#ifdef HYPERIM_DEFAULT_PRESETS
  return HYPERIM_DEFAULT_PRESETS;
#else
  return "presets/theta.conf";
#endif
}

std::map<std::string, double> read_theta_presets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("presets_file", "cannot open '" + path.string() + "'");
  std::map<std::string, double> presets;
  for (const auto& [name, value] : parse_key_values(in)) {
    presets[lower(name)] = parse_real("presets_file", value);
  }
  return presets;
}

RunConfig parse_config(const ConfigValues& file, const ConfigValues& overrides) {
  ConfigValues values = file;
  for (const auto& [key, value] : overrides) values[key] = value;
  for (const auto& [key, value] : values) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(key, "unknown configuration key");
    }
  }
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };
  auto get_size = [&](const std::string& key, std::size_t& out) {
    if (const auto* v = get(key)) out = parse_unsigned<std::size_t>(key, *v);
  };
  auto get_positive = [&](const std::string& key, std::size_t& out) {
    get_size(key, out);
    if (out == 0) throw ConfigError(key, "must be positive");
  };

  RunConfig config;
  const auto* dataset = get("dataset");
  if (!dataset || dataset->empty()) throw ConfigError("dataset", "missing required field");
  config.dataset_path = *dataset;
  if (const auto* v = get("algorithm")) config.algorithm = parse_algorithm(*v);

  const std::string model = get("model") ? lower(*get("model")) : "wc";
  if (model == "wc") {
    config.model = WeightedCascade{};
  } else if (model == "sicp") {
    Sicp sicp;
    if (const auto* v = get("p_min")) sicp.p_min = parse_real("p_min", *v);
    if (const auto* v = get("p_max")) sicp.p_max = parse_real("p_max", *v);
    if (!(sicp.p_min >= 0.0 && sicp.p_min <= sicp.p_max && sicp.p_max <= 1.0)) {
      throw ConfigError("p_min", "SICP requires 0 <= p_min <= p_max <= 1");
    }
    config.model = sicp;
  } else if (model == "lt") {
    LinearThreshold lt;
    if (const auto* v = get("theta")) {
      lt.theta = parse_real("theta", *v);
    } else if (const auto* preset = get("theta_preset")) {
      const auto* file_key = get("presets_file");
      const auto presets =
          read_theta_presets(file_key ? std::filesystem::path(*file_key) : default_presets_path());
      auto it = presets.find(lower(*preset));
      if (it == presets.end()) {
        throw ConfigError("theta_preset", "no preset named '" + *preset + "'");
      }
      lt.theta = it->second;
    } else {
      throw ConfigError("theta", "required when model = lt");
    }
    if (!(lt.theta > 0.0 && lt.theta < 1.0)) throw ConfigError("theta", "must lie in (0, 1)");
    config.model = lt;
  } else {
    throw ConfigError("model", "expected one of wc, sicp, lt; got '" + model + "'");
  }

  std::size_t hops = config.spread.max_hops;
  std::size_t sims = config.spread.num_simulations;
  get_positive("max_hops", hops);
  get_positive("simulations", sims);
  config.spread.max_hops = static_cast<std::uint32_t>(hops);
  config.spread.num_simulations = static_cast<std::uint32_t>(sims);

  auto& ea = config.ea;
  get_positive("population", ea.population_size);
  get_positive("offspring", ea.offspring_size);
  get_size("generations", ea.generations);
  get_size("elites", ea.elites);
  get_positive("tournament", ea.tournament_size);
  get_positive("k_min", ea.k_min);
  get_positive("k_max", ea.k_max);
  if (const auto* v = get("lambda")) ea.lambda_fraction = parse_real("lambda", *v);
  if (!(ea.lambda_fraction > 0.0 && ea.lambda_fraction <= 1.0)) {
    throw ConfigError("lambda", "must lie in (0, 1]");
  }
  if (ea.k_min > ea.k_max) throw ConfigError("k_min", "must not exceed k_max");
  if (ea.elites > ea.population_size) throw ConfigError("elites", "must not exceed population");
  if (ea.tournament_size > ea.population_size) {
    throw ConfigError("tournament", "must not exceed population");
  }

  get_positive("runs", config.num_runs);
  if (config.algorithm == Algorithm::kHighDegree) config.num_runs = 1;
  if (const auto* v = get("seed")) config.master_seed = parse_unsigned<std::uint64_t>("seed", *v);
  if (const auto* v = get("output")) config.output_path = *v;
  config.jobs = get("jobs") ? parse_unsigned<unsigned>("jobs", *get("jobs")) : default_jobs();
  return config;
}

ConfigValues to_values(const RunConfig& config) {
  ConfigValues values;
  values["dataset"] = config.dataset_path.string();
  values["algorithm"] = to_string(config.algorithm);
  values["model"] = lower(model_name(config.model));
  if (const auto* sicp = std::get_if<Sicp>(&config.model)) {
    values["p_min"] = format_real(sicp->p_min);
    values["p_max"] = format_real(sicp->p_max);
  } else if (const auto* lt = std::get_if<LinearThreshold>(&config.model)) {
    values["theta"] = format_real(lt->theta);
  }
  values["max_hops"] = std::to_string(config.spread.max_hops);
  values["simulations"] = std::to_string(config.spread.num_simulations);
  values["population"] = std::to_string(config.ea.population_size);
  values["offspring"] = std::to_string(config.ea.offspring_size);
  values["generations"] = std::to_string(config.ea.generations);
  values["elites"] = std::to_string(config.ea.elites);
  values["tournament"] = std::to_string(config.ea.tournament_size);
  values["k_min"] = std::to_string(config.ea.k_min);
  values["k_max"] = std::to_string(config.ea.k_max);
  values["lambda"] = format_real(config.ea.lambda_fraction);
  values["runs"] = std::to_string(config.num_runs);
  values["seed"] = std::to_string(config.master_seed);
  if (!config.output_path.empty()) values["output"] = config.output_path.string();
  return values;
}

Aggregate aggregate(std::span<const double> values) {
  Aggregate a;
  a.count = values.size();
  if (values.empty()) return a;
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - a.mean) * (v - a.mean);
  a.std = std::sqrt(sq / static_cast<double>(values.size()));
  return a;
}

RunReport run_experiment(const RunConfig& input, const Hypergraph& h) {
  RunConfig config = input;
  RunReport report;
  validate_model(config.model);

  const std::size_t n = h.node_count();
  if (config.ea.k_min > n) {
    throw ConfigError("k_min", "exceeds the node count (" + std::to_string(n) + ")");
  }
  if (config.ea.k_max > n) {
    report.warnings.push_back("k_max " + std::to_string(config.ea.k_max) +
                              " clamped to the node count " + std::to_string(n));
    config.ea.k_max = n;
  }
  config.ea.validate(n);

  report.config = to_values(config);
  report.dataset_path = config.dataset_path.string();
  report.node_count = n;
  report.edge_count = h.edge_count();
  report.algorithm = to_string(config.algorithm);
  report.model = describe(config.model);
  report.master_seed = config.master_seed;
  report.reference = reference_point(config.ea.k_max, n);
  report.version = kVersion;

  const unsigned jobs = resolve_jobs(config.jobs);
  const auto concurrent_runs =
      static_cast<unsigned>(std::min<std::size_t>(jobs, config.num_runs));
  const unsigned inner_jobs = std::max(1u, jobs / std::max(1u, concurrent_runs));

  report.runs.resize(config.num_runs);
  parallel_for(config.num_runs, concurrent_runs, [&](std::size_t r) {
    const auto start = std::chrono::steady_clock::now();
    RunResult& run = report.runs[r];
    run.run = r;
    run.seed = derive_seed(config.master_seed, {r});

    SpreadConfig spread = config.spread;
    spread.jobs = inner_jobs;
    spread.rng_seed = derive_seed(run.seed, {1});
    switch (config.algorithm) {
      case Algorithm::kHnMoea: {
        EAParams ea = config.ea;
        ea.rng_seed = run.seed;
        ea.jobs = inner_jobs;
        run.front = evolve(h, config.model, spread, ea);
        break;
      }
      case Algorithm::kRandom: {
        Rng rng = Rng::stream(run.seed, {0});
        const auto family = random_baseline(h, config.ea.k_min, config.ea.k_max, rng);
        run.front = family_to_front(h, family, config.model, spread);
        break;
      }
      case Algorithm::kHighDegree: {
        const auto family = high_degree_baseline(h, config.ea.k_min, config.ea.k_max);
        run.front = family_to_front(h, family, config.model, spread);
        break;
      }
    }
    run.metrics = compute_front_metrics(h, run.front, report.reference);
    for (const auto& entry : run.front) {
      auto& tokens = run.genotype_tokens.emplace_back();
      for (NodeId v : entry.genes) tokens.emplace_back(h.token(v));
    }
    run.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  std::vector<double> hv, pd, nd;
  for (const auto& run : report.runs) {
    hv.push_back(run.metrics.hypervolume);
    if (run.metrics.population_diversity) pd.push_back(*run.metrics.population_diversity);
    nd.push_back(run.metrics.node_diversity);
  }
  report.hypervolume = aggregate(hv);
  report.population_diversity = aggregate(pd);
  report.node_diversity = aggregate(nd);
  if (pd.size() < report.runs.size()) {
    report.warnings.push_back("population diversity undefined for single-entry fronts in " +
                              std::to_string(report.runs.size() - pd.size()) + " run(s)");
  }
  report.generated_at = utc_timestamp();
  return report;
}

RunReport run_experiment(const RunConfig& config) {
  const auto h = load_hypergraph(config.dataset_path);
  auto report = run_experiment(config, h);
  if (!config.output_path.empty()) write_report_files(report, config.output_path);
  return report;
}

std::string report_to_json(const RunReport& report) {
  Json doc;
  doc["software"] = {{"name", "hyperim"}, {"version", report.version}};
  doc["generated_at"] = report.generated_at;
  Json config = Json::object();
  for (const auto& [key, value] : report.config) config[key] = value;
  doc["config"] = config;
  doc["dataset"] = {{"path", report.dataset_path},
                    {"nodes", report.node_count},
                    {"hyperedges", report.edge_count}};
  doc["algorithm"] = report.algorithm;
  doc["model"] = report.model;
  doc["master_seed"] = report.master_seed;
  doc["reference_point"] = {{"influence", report.reference.influence},
                            {"seed_fraction", report.reference.seed_fraction}};

  Json runs = Json::array();
  for (const auto& run : report.runs) {
    Json front = Json::array();
    for (std::size_t i = 0; i < run.front.size(); ++i) {
      const auto& entry = run.front[i];
      front.push_back({{"k", entry.genes.size()},
                       {"influence", entry.fitness.influence},
                       {"seed_fraction", entry.fitness.seed_fraction},
                       {"genotype", run.genotype_tokens.at(i)}});
    }
    const auto& m = run.metrics;
    Json metrics;
    metrics["hypervolume"] = m.hypervolume;
    metrics["hypervolume_empty"] = m.hypervolume_empty;
    metrics["population_diversity"] =
        m.population_diversity ? Json(*m.population_diversity) : Json(nullptr);
    metrics["node_diversity"] = m.node_diversity;
    metrics["degree_profile"] = {{"degrees", m.degrees.degrees},
                                 {"mean", m.degrees.mean},
                                 {"hypergraph_mean", m.degrees.hypergraph_mean}};
    runs.push_back({{"run", run.run},
                    {"seed", run.seed},
                    {"wall_clock_seconds", run.wall_seconds},
                    {"metrics", metrics},
                    {"front", front}});
  }
  doc["runs"] = runs;
  doc["aggregate"] = {{"hypervolume", aggregate_json(report.hypervolume)},
                      {"population_diversity", aggregate_json(report.population_diversity)},
                      {"node_diversity", aggregate_json(report.node_diversity)}};
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  const auto doc = Json::parse(text);
  RunReport report;
  for (const auto& [key, value] : doc.at("config").items()) {
    report.config[key] = value.get<std::string>();
  }
  report.version = doc.at("software").at("version").get<std::string>();
  report.generated_at = doc.value("generated_at", "");
  report.dataset_path = doc.at("dataset").at("path").get<std::string>();
  report.node_count = doc.at("dataset").at("nodes").get<std::size_t>();
  report.edge_count = doc.at("dataset").at("hyperedges").get<std::size_t>();
  report.algorithm = doc.at("algorithm").get<std::string>();
  report.model = doc.at("model").get<std::string>();
  report.master_seed = doc.at("master_seed").get<std::uint64_t>();
  report.reference.influence = doc.at("reference_point").at("influence").get<double>();
  report.reference.seed_fraction = doc.at("reference_point").at("seed_fraction").get<double>();
  for (const auto& r : doc.at("runs")) {
    RunResult run;
    run.run = r.at("run").get<std::size_t>();
    run.seed = r.at("seed").get<std::uint64_t>();
    run.wall_seconds = r.at("wall_clock_seconds").get<double>();
    for (const auto& entry : r.at("front")) {
      FrontEntry parsed;
      parsed.fitness.influence = entry.at("influence").get<double>();
      parsed.fitness.seed_fraction = entry.at("seed_fraction").get<double>();
      run.genotype_tokens.push_back(entry.at("genotype").get<std::vector<std::string>>());
      run.front.push_back(std::move(parsed));
    }
    const auto& m = r.at("metrics");
    run.metrics.hypervolume = m.at("hypervolume").get<double>();
    run.metrics.hypervolume_empty = m.at("hypervolume_empty").get<bool>();
    if (!m.at("population_diversity").is_null()) {
      run.metrics.population_diversity = m.at("population_diversity").get<double>();
    }
    run.metrics.node_diversity = m.at("node_diversity").get<double>();
    const auto& profile = m.at("degree_profile");
    run.metrics.degrees.degrees = profile.at("degrees").get<std::vector<std::size_t>>();
    run.metrics.degrees.mean = profile.at("mean").get<double>();
    run.metrics.degrees.hypergraph_mean = profile.at("hypergraph_mean").get<double>();
    report.runs.push_back(std::move(run));
  }
  const auto& agg = doc.at("aggregate");
  report.hypervolume = aggregate_from_json(agg.at("hypervolume"));
  report.population_diversity = aggregate_from_json(agg.at("population_diversity"));
  report.node_diversity = aggregate_from_json(agg.at("node_diversity"));
  report.warnings = doc.value("warnings", std::vector<std::string>{});
  return report;
}

RunReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

void write_front_csv(std::ostream& out, const RunReport& report) {
  out << "run,k,influence,seed_fraction,genotype\n";
  for (const auto& run : report.runs) {
    for (std::size_t i = 0; i < run.front.size(); ++i) {
      const auto& entry = run.front[i];
      std::string genotype;
      for (const auto& token : run.genotype_tokens.at(i)) {
        if (!genotype.empty()) genotype += ' ';
        genotype += token;
      }
      if (genotype.find_first_of("\",\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : genotype) {
          if (c == '"') quoted += '"';
          quoted += c;
        }
        genotype = quoted + "\"";
      }
      out << run.run << ',' << run.genotype_tokens.at(i).size() << ','
          << format_real(entry.fitness.influence) << ','
          << format_real(entry.fitness.seed_fraction) << ',' << genotype << '\n';
    }
  }
}

std::filesystem::path csv_path_for(const std::filesystem::path& output_path) {
  auto csv = output_path;
  csv.replace_extension(".csv");
  return csv;
}

void write_report_files(const RunReport& report, const std::filesystem::path& output_path) {
  if (output_path.has_parent_path()) {
    std::filesystem::create_directories(output_path.parent_path());
  }
  {
    std::ofstream json(output_path);
    if (!json) throw std::runtime_error("cannot write '" + output_path.string() + "'");
    json << report_to_json(report);
    if (!json) throw std::runtime_error("write error on '" + output_path.string() + "'");
  }
  const auto csv_path = csv_path_for(output_path);
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot write '" + csv_path.string() + "'");
  write_front_csv(csv, report);
  if (!csv) throw std::runtime_error("write error on '" + csv_path.string() + "'");
}

Comparison compare(std::span<const RunReport> reports) {
  if (reports.size() < 2) throw std::invalid_argument("compare needs at least two reports");
  Comparison table;
  table.dataset_path = reports.front().dataset_path;
  table.model = reports.front().model;
  for (const auto& report : reports) {
    if (report.dataset_path != table.dataset_path || report.model != table.model) {
      throw std::invalid_argument("reports differ in dataset or model: '" +
                                  report.dataset_path + "' / " + report.model + " vs '" +
                                  table.dataset_path + "' / " + table.model);
    }
    table.rows.push_back(ComparisonRow{report.algorithm, report.hypervolume,
                                       report.population_diversity, report.node_diversity});
  }
  auto flag = [&](auto metric, auto flag_member) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
      if ((row.*metric).count) best = std::max(best, (row.*metric).mean);
    }
    for (auto& row : table.rows) {
      row.*flag_member = (row.*metric).count && (row.*metric).mean == best;
    }
  };
  flag(&ComparisonRow::hypervolume, &ComparisonRow::best_hypervolume);
  flag(&ComparisonRow::population_diversity, &ComparisonRow::best_population_diversity);
  flag(&ComparisonRow::node_diversity, &ComparisonRow::best_node_diversity);
  return table;
}

std::string format_comparison_text(const Comparison& comparison) {
  auto cell = [](const Aggregate& a, bool best) {
    std::ostringstream out;
    if (a.count == 0) {
      out << "n/a";
    } else {
      out << std::scientific << std::setprecision(2) << a.mean << " +- " << a.std;
    }
    if (best) out << " *";
    return out.str();
  };
  std::ostringstream out;
  out << "dataset: " << comparison.dataset_path << "\nmodel:   " << comparison.model << "\n\n";
  out << std::left << std::setw(14) << "algorithm" << std::setw(24) << "hypervolume"
      << std::setw(24) << "population_diversity" << "node_diversity\n";
  for (const auto& row : comparison.rows) {
    out << std::left << std::setw(14) << row.algorithm << std::setw(24)
        << cell(row.hypervolume, row.best_hypervolume) << std::setw(24)
        << cell(row.population_diversity, row.best_population_diversity)
        << cell(row.node_diversity, row.best_node_diversity) << '\n';
  }
  out << "\n* highest mean per metric\n";
  return out.str();
}

std::string format_comparison_csv(const Comparison& comparison) {
  std::ostringstream out;
  out << "algorithm,hv_mean,hv_std,hv_best,d_mean,d_std,d_best,nd_mean,nd_std,nd_best\n";
  auto cells = [](const Aggregate& a, bool best) {
    if (a.count == 0) return std::string(",,") + (best ? "1" : "0");
    return format_real(a.mean) + ',' + format_real(a.std) + ',' + (best ? "1" : "0");
  };
  for (const auto& row : comparison.rows) {
    out << row.algorithm << ',' << cells(row.hypervolume, row.best_hypervolume) << ','
        << cells(row.population_diversity, row.best_population_diversity) << ','
        << cells(row.node_diversity, row.best_node_diversity) << '\n';
  }
  return out.str();
}

}  // namespace hyperim
