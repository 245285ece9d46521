#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankcal/rankcal.hpp"

namespace rankcal::report {

inline constexpr const char* kSchemaVersion = "rankcal-report-v1";

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
  ClassificationThresholds thresholds;
};

/// Full analysis report for one observed matrix. When the estimated scores
/// are tied the report is partial (input digest + structured estimates,
/// no ranking probabilities) and exit_code is 4.
struct AnalyzeOutcome {
  Json json;
  int exit_code = 0;
};

AnalyzeOutcome analyze(const ComparisonMatrix& x, const AnalyzeOptions& options,
                       const std::string& input_path);

std::string analyze_text(const Json& report);

Json simulate(const std::vector<ScenarioResult>& results);
std::string simulate_text(const Json& report);

struct ReproduceOptions {
  std::uint64_t seed = 42;
  std::uint64_t mc_replications = 100000;
  std::uint64_t tau_replications = 20000;
  bool tau_monte_carlo = false;
  int threads = 1;
};

/// Recomputes the built-in reference studies ("worked_example", "mc_table",
/// "tau_table" or "all") and checks every reference cell at its tolerance.
Json reproduce(const std::string& which, const ReproduceOptions& options);
std::string reproduce_text(const Json& report);

}  // namespace rankcal::report
