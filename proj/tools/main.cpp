#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"

namespace {

using rankcal::report::Json;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rankcal::ConfigError("cannot open output file: " + path);
  out << content;
}

std::string render(const Json& json, const std::string& format,
                   std::string (*text_renderer)(const Json&)) {
  if (format == "text") return text_renderer(json);
  return json.dump(2) + "\n";
}

rankcal::DeformationRegime parse_regime(const std::string& name) {
  if (name == "none") return rankcal::DeformationRegime::none;
  if (name == "moderate") return rankcal::DeformationRegime::moderate;
  if (name == "strong") return rankcal::DeformationRegime::strong;
  throw rankcal::ConfigError("unknown regime: " + name);
}

std::vector<rankcal::ScenarioConfig> parse_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rankcal::ConfigError("cannot open config file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw rankcal::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.contains("scenarios") || !doc["scenarios"].is_array() || doc["scenarios"].empty())
    throw rankcal::ConfigError("config needs a non-empty \"scenarios\" array");
  std::vector<rankcal::ScenarioConfig> configs;
  for (const auto& node : doc["scenarios"]) {
    rankcal::ScenarioConfig c;
    try {
      c.label = node.value("label", "scenario-" + std::to_string(configs.size() + 1));
      c.n = node.at("n").get<int>();
      c.spacing_c = node.at("c").get<double>();
      c.noise.sigma = node.at("sigma").get<double>();
      c.noise.rho = node.at("rho").get<double>();
      c.regime = parse_regime(node.at("regime").get<std::string>());
      if (node.contains("s")) c.deformation = node["s"].get<std::vector<double>>();
      c.replications = node.at("replications").get<std::uint64_t>();
      c.samples_per_rep = node.at("samples").get<std::uint64_t>();
      // No default seed: every scenario must pin its own.
      if (!node.contains("seed")) throw rankcal::ConfigError("scenario is missing \"seed\"");
      c.seed = node.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw rankcal::ConfigError(std::string("bad scenario entry: ") + e.what());
    }
    configs.push_back(std::move(c));
  }
  return configs;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const rankcal::TieError*>(&e)) return 4;
  if (dynamic_cast<const rankcal::DimensionError*>(&e)) return 3;
  if (dynamic_cast<const rankcal::RegimeError*>(&e)) return 3;
  if (dynamic_cast<const rankcal::ParseError*>(&e)) return 2;
  if (dynamic_cast<const rankcal::ConfigError*>(&e)) return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankcal: structured analysis of noisy nonreciprocal pairwise comparison matrices"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format = "json";
  int threads = 1;
  app.add_option("-o,--output", output_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (result bytes do not depend on this)")
      ->envname("RANKCAL_THREADS")
      ->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one comparison matrix (CSV)");
  analyze_cmd->fallthrough();
  std::string matrix_path;
  rankcal::report::AnalyzeOptions analyze_options;
  analyze_cmd->add_option("matrix", matrix_path, "Matrix CSV file")->required();
  analyze_cmd->add_option("--samples", analyze_options.samples, "Monte Carlo samples")
      ->capture_default_str();
  analyze_cmd->add_option("--seed", analyze_options.seed, "Sampling seed (required)")->required();
  analyze_cmd
      ->add_option("--lambda0", analyze_options.thresholds.lambda0,
                   "Deformation ratio threshold for \"negligible\"")
      ->capture_default_str();
  analyze_cmd
      ->add_option("--gamma0", analyze_options.thresholds.gamma0,
                   "Gap-impact threshold for \"negligible\"")
      ->capture_default_str();
  analyze_cmd
      ->add_option("--gamma1", analyze_options.thresholds.gamma1,
                   "Gap-impact threshold for \"influential\"")
      ->capture_default_str();

  auto* simulate_cmd = app.add_subcommand("simulate", "Run a scenario grid from a JSON config");
  simulate_cmd->fallthrough();
  std::string config_path;
  simulate_cmd->add_option("config", config_path, "Scenario config JSON")->required();

  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Recompute the built-in reference studies");
  reproduce_cmd->fallthrough();
  std::string which = "all";
  rankcal::report::ReproduceOptions reproduce_options;
  reproduce_cmd->add_option("which", which, "worked_example | mc_table | tau_table | all")
      ->check(CLI::IsMember({"worked_example", "mc_table", "tau_table", "all"}))
      ->capture_default_str();
  reproduce_cmd->add_option("--seed", reproduce_options.seed, "Seed for the Monte Carlo parts")
      ->capture_default_str();
  reproduce_cmd
      ->add_option("--mc-replications", reproduce_options.mc_replications,
                   "Replications for the Monte Carlo table")
      ->capture_default_str();
  reproduce_cmd
      ->add_option("--tau-replications", reproduce_options.tau_replications,
                   "Replications for the Monte Carlo tau table")
      ->capture_default_str();
  reproduce_cmd->add_flag("--mc", reproduce_options.tau_monte_carlo,
                          "Check the tau table in Monte Carlo mode instead of analytic mode");

  auto* echo_cmd = app.add_subcommand("echo", "Parse a matrix CSV and write it back canonically");
  echo_cmd->fallthrough();
  std::string echo_path;
  echo_cmd->add_option("matrix", echo_path, "Matrix CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      analyze_options.threads = threads;
      const rankcal::ComparisonMatrix x = rankcal::load_matrix_csv(matrix_path);
      const rankcal::report::AnalyzeOutcome outcome =
          rankcal::report::analyze(x, analyze_options, matrix_path);
      write_output(output_path, render(outcome.json, format, rankcal::report::analyze_text));
      return outcome.exit_code;
    }
    if (*simulate_cmd) {
      const std::vector<rankcal::ScenarioConfig> configs = parse_scenarios(config_path);
      const Json json = rankcal::report::simulate(rankcal::run_scenario_grid(configs, threads));
      write_output(output_path, render(json, format, rankcal::report::simulate_text));
      return 0;
    }
    if (*reproduce_cmd) {
      reproduce_options.threads = threads;
      const Json json = rankcal::report::reproduce(which, reproduce_options);
      write_output(output_path, render(json, format, rankcal::report::reproduce_text));
      return 0;
    }
    if (*echo_cmd) {
      write_output(output_path, rankcal::format_matrix_csv(rankcal::load_matrix_csv(echo_path)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
