#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankcal/projection.hpp"
#include "rankcal/synth.hpp"

namespace rankcal {

/// Fixed 4-alternative demonstration: a consistent latent matrix whose
/// noisy observation becomes non-admissible under brutal reciprocal
/// projection while least-squares consistencization flips the ranking.
/// All intermediates are exposed; `checks` lists named assertions that an
/// implementation bug would turn false.
struct WorkedExampleReport {
  ComparisonMatrix latent;     // consistent matrix built from the latent scores
  ComparisonMatrix observed;   // fixed noisy nonreciprocal observation
  ComparisonMatrix noise;      // observed - latent
  ComparisonMatrix projected;  // brutal reciprocal projection of observed
  ScoreVector latent_scores;
  ScoreVector recovered_scores;
  std::vector<double> row_sums;  // row sums of the projected matrix
  Ranking latent_ranking;
  Ranking recovered_ranking;
  std::optional<std::array<int, 3>> cycle;
  bool observed_reciprocal = false;
  bool observed_consistent = false;
  bool projected_admissible = false;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const;
};

WorkedExampleReport run_worked_example();

/// The latent scores (0.15, 0.05, 0, -0.20) and observed matrix of the
/// worked example, for reuse in tests and the Monte Carlo study.
ScoreVector worked_example_latent_scores();
ComparisonMatrix worked_example_observed();

/// One row of the local Monte Carlo study around the worked example's
/// latent matrix: X = A + noise with i.i.d. N(0, sigma^2) off-diagonal
/// entries. p_na = frequency of non-admissible brutal projections, p_wr =
/// frequency of consistencized rankings differing from the latent one,
/// p_both = joint frequency; standard_errors holds sqrt(p(1-p)/R) for each.
struct McStudyResult {
  double sigma = 0.0;
  std::uint64_t replications = 0;
  double p_na = 0.0;
  double p_wr = 0.0;
  double p_both = 0.0;
  std::array<double, 3> standard_errors{};
};

std::vector<McStudyResult> run_mc_study(const std::vector<double>& sigmas,
                                        std::uint64_t replications, std::uint64_t seed,
                                        int threads = 1);

enum class TauMode { analytic, monte_carlo };

/// One-parameter deformation family s = tau * profile around a fixed latent
/// vector, with fixed noise. Defaults reproduce the built-in reference
/// study: u = (0.30, 0.12, -0.06, -0.36), profile (0.08, 0.03, -0.03,
/// -0.08), sigma0 = 0.10, rho0 = 0.
struct TauStudyConfig {
  std::vector<double> scores{0.30, 0.12, -0.06, -0.36};
  std::vector<double> profile{0.08, 0.03, -0.03, -0.08};
  double sigma0 = 0.10;
  double rho0 = 0.0;
  TauMode mode = TauMode::analytic;
  std::uint64_t replications = 20000;
  std::uint64_t seed = 1;
  int threads = 1;

  /// Largest tau keeping 2||tau q||_inf < gap(u).
  double critical_tau() const;
};

/// A tau-study row. In analytic mode the calibration columns are the exact
/// expectations (sigma_struct/rho_struct are the data-generating values).
/// In Monte Carlo mode the headline columns apply the plug-in calibration
/// to replication-averaged defect indicators, whose expectations the
/// analytic formulas describe; rep_mean_* additionally reports the raw
/// per-replication calibration means, which at n = 4 carry a visible
/// finite-sample bias (measured here, not corrected).
struct TauStudyRow {
  double tau = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;
  double sigma_struct = 0.0;
  double sigma_sharp = 0.0;
  double rho_struct = 0.0;
  double rho_sharp = 0.0;
  TauMode mode = TauMode::analytic;
  bool beyond_compatibility = false;  // tau >= critical tau
  double rep_mean_sigma_struct = 0.0;
  double rep_mean_rho_struct = 0.0;
  double rep_mean_sigma_sharp = 0.0;
  double rep_mean_rho_sharp = 0.0;
  // Monte Carlo means of the fitted deformation diagnostics; the lambda and
  // gamma columns above always hold the design values.
  double rep_mean_lambda = 0.0;
  double rep_mean_gamma = 0.0;
};

std::vector<TauStudyRow> run_tau_study(const std::vector<double>& taus,
                                       const TauStudyConfig& config = {});

/// Aggregated results of one simulation scenario. Probability aggregates
/// skip replications whose estimated scores are exactly tied (counted in
/// tie_errors; measure zero under continuous noise).
struct ScenarioResult {
  ScenarioConfig config;
  std::vector<double> scores;       // latent u actually used
  std::vector<double> deformation;  // resolved s
  std::uint64_t replications = 0;
  double mean_sigma_hat = 0.0, sd_sigma_hat = 0.0;
  double mean_rho_hat = 0.0, sd_rho_hat = 0.0;
  double mean_lambda = 0.0, sd_lambda = 0.0;
  double mean_gamma = 0.0, sd_gamma = 0.0;
  std::uint64_t gamma_undefined = 0;
  double mean_central_prob_structured = 0.0;
  double mean_central_prob_brutal = 0.0;
  double mean_entropy_structured = 0.0;
  double mean_entropy_brutal = 0.0;
  double mean_tv = 0.0;
  double top1_recovery = 0.0;  // mean P(true best alternative ranked first), structured
  std::vector<std::vector<double>> mean_topk_structured;      // [k-1][i]
  std::vector<std::vector<double>> mean_precedence_structured;  // [i][j]
  std::vector<std::vector<double>> mean_precedence_brutal;
  std::uint64_t tie_errors = 0;
};

std::vector<ScenarioResult> run_scenario_grid(const std::vector<ScenarioConfig>& configs,
                                              int threads = 1);

}  // namespace rankcal
