#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace rankcal::report {

namespace {

std::vector<int> one_based(const Ranking& r) {
  std::vector<int> out;
  out.reserve(r.size());
  for (int item : r.order()) out.push_back(item + 1);
  return out;
}

Json distribution_json(const RankingDistribution& dist, std::size_t max_entries = 100) {
  std::vector<std::pair<Ranking, std::uint64_t>> entries(dist.counts.begin(), dist.counts.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  Json out = Json::array();
  for (std::size_t i = 0; i < entries.size() && i < max_entries; ++i) {
    Json row;
    row["ranking"] = one_based(entries[i].first);
    row["label"] = entries[i].first.to_string();
    row["count"] = entries[i].second;
    row["probability"] =
        static_cast<double>(entries[i].second) / static_cast<double>(dist.total);
    out.push_back(std::move(row));
  }
  return out;
}

Json diagnostics_json(const ResidualDiagnostics& d) {
  Json out;
  out["reciprocity_defect"] = d.reciprocity_defect;
  out["triangle_defect"] = d.triangle_defect;
  out["sigma_hat"] = d.sigma_hat;
  out["rho_raw"] = d.rho_raw;
  out["rho_hat"] = d.rho_hat;
  out["rho_clamped"] = d.rho_clamped;
  out["degenerate"] = d.degenerate;
  return out;
}

Json optional_json(const std::optional<double>& v) {
  if (v.has_value()) return *v;
  return nullptr;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

AnalyzeOutcome analyze(const ComparisonMatrix& x, const AnalyzeOptions& options,
                       const std::string& input_path) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["report_type"] = "analyze";

  const Admissibility adm = strict_ranking_admissible(x);
  Json input;
  input["path"] = input_path;
  input["n"] = x.size();
  input["reciprocal"] = is_reciprocal(x);
  input["additively_consistent"] = is_additively_consistent(x);
  input["strict_ranking_admissible"] = adm.admissible;
  if (adm.cycle) {
    const auto& c = *adm.cycle;
    input["cycle"] = std::vector<int>{c[0] + 1, c[1] + 1, c[2] + 1};
  } else {
    input["cycle"] = nullptr;
  }
  out["input"] = std::move(input);

  const StructuredFit fit = fit_structured(x);
  const ResidualDiagnostics diag = calibrate_noise(fit.residual);
  const DeformationDiagnostics deform = deformation_diagnostics(fit.scores, fit.scale);
  const DeformationAssessment assessment = classify_deformation(deform, options.thresholds);

  Json structured;
  structured["scores"] = fit.scores.values();
  structured["scale"] = fit.scale.values();
  structured["calibration"] = diagnostics_json(diag);
  Json deformation;
  deformation["lambda"] = optional_json(deform.lambda);
  deformation["gamma"] = optional_json(deform.gamma);
  deformation["gap"] = deform.gap;
  deformation["scale_max"] = deform.scale_max;
  deformation["score_frobenius"] = deform.score_frob;
  deformation["scale_frobenius"] = deform.scale_frob;
  deformation["category"] = to_string(assessment.category);
  structured["deformation"] = std::move(deformation);
  out["structured"] = std::move(structured);

  std::vector<std::string> warnings;
  if (diag.rho_clamped) warnings.emplace_back("rho_clamped");
  if (diag.degenerate) warnings.emplace_back("degenerate_residual");
  if (x.size() == 3) warnings.emplace_back("n_equals_3_scale_estimate_is_noise_sensitive");
  if (assessment.tie_warning) warnings.emplace_back("tied_scores_deformation_assessment");

  const RankedScores central = ranking_of(fit.scores);
  if (central.tied) {
    warnings.emplace_back("tied_scores_central_region_undefined");
    out["ranking"] = nullptr;
    out["brutal"] = nullptr;
    out["warnings"] = warnings;
    return {std::move(out), 4};
  }

  const MethodComparison mc = compare_methods(x, options.samples, options.seed, options.threads);
  const SummaryProbabilities ss = summary_probabilities(mc.structured.distribution);
  const SummaryProbabilities sb = summary_probabilities(mc.brutal.distribution);

  Json ranking;
  ranking["central_ranking"] = one_based(central.ranking);
  ranking["central_label"] = central.ranking.to_string();
  ranking["central_region_probability"] =
      central_region_probability(mc.structured.distribution, mc.structured.fit.scores);
  ranking["samples"] = options.samples;
  ranking["seed"] = options.seed;
  ranking["tie_samples"] = mc.structured.distribution.tie_samples;
  ranking["entropy_bits"] = ss.entropy_bits;
  ranking["top1"] = ss.top1;
  ranking["top_k"] = ss.top_k;
  ranking["precedence"] = ss.precedence;
  ranking["support_size"] = mc.structured.distribution.counts.size();
  ranking["distribution_top"] = distribution_json(mc.structured.distribution);
  out["ranking"] = std::move(ranking);

  Json brutal;
  brutal["calibration"] = diagnostics_json(mc.brutal.diagnostics);
  brutal["central_region_probability"] =
      central_region_probability(mc.brutal.distribution, mc.brutal.scores);
  brutal["entropy_bits"] = sb.entropy_bits;
  brutal["tie_samples"] = mc.brutal.distribution.tie_samples;
  brutal["central_prob_diff"] = mc.deltas.central_prob_diff;
  brutal["topk_diff"] = mc.deltas.topk_diff;
  brutal["tv_distance"] = mc.deltas.tv;
  out["brutal"] = std::move(brutal);

  if (mc.structured.distribution.tie_samples > 0 || mc.brutal.distribution.tie_samples > 0)
    warnings.emplace_back("tie_samples_counted_with_index_tie_break");
  if (mc.brutal.diagnostics.rho_clamped) warnings.emplace_back("brutal_rho_clamped");
  out["warnings"] = warnings;
  return {std::move(out), 0};
}

std::string analyze_text(const Json& r) {
  std::string t;
  t += "input: " + r["input"]["path"].get<std::string>() + "\n";
  t += "  n = " + std::to_string(r["input"]["n"].get<int>());
  t += r["input"]["reciprocal"].get<bool>() ? ", reciprocal" : ", nonreciprocal";
  t += r["input"]["additively_consistent"].get<bool>() ? ", consistent" : ", inconsistent";
  t += r["input"]["strict_ranking_admissible"].get<bool>() ? ", admissible\n" : ", non-admissible\n";
  if (!r["input"]["cycle"].is_null()) {
    const auto c = r["input"]["cycle"].get<std::vector<int>>();
    t += "  sign cycle: " + std::to_string(c[0]) + ">" + std::to_string(c[1]) + ">" +
         std::to_string(c[2]) + ">" + std::to_string(c[0]) + "\n";
  }
  t += "scores:";
  for (const auto& v : r["structured"]["scores"]) t += fmt(" %+.6f", v.get<double>());
  t += "\nscale: ";
  for (const auto& v : r["structured"]["scale"]) t += fmt(" %+.6f", v.get<double>());
  const auto& cal = r["structured"]["calibration"];
  t += "\nsigma_hat = " + fmt("%.6f", cal["sigma_hat"].get<double>());
  t += ", rho_hat = " + fmt("%.6f", cal["rho_hat"].get<double>());
  if (cal["degenerate"].get<bool>()) t += " (degenerate)";
  const auto& d = r["structured"]["deformation"];
  t += "\nlambda = " + (d["lambda"].is_null() ? "undefined" : fmt("%.6f", d["lambda"].get<double>()));
  t += ", gamma = " + (d["gamma"].is_null() ? "undefined" : fmt("%.6f", d["gamma"].get<double>()));
  t += ", category = " + d["category"].get<std::string>() + "\n";
  if (r["ranking"].is_null()) {
    t += "ranking: undefined (tied scores)\n";
    return t;
  }
  t += "central ranking " + r["ranking"]["central_label"].get<std::string>();
  t += ", probability " + fmt("%.5f", r["ranking"]["central_region_probability"].get<double>());
  t += ", entropy " + fmt("%.4f", r["ranking"]["entropy_bits"].get<double>()) + " bits\n";
  t += "brutal: sigma_sharp = " +
       fmt("%.6f", r["brutal"]["calibration"]["sigma_hat"].get<double>());
  t += ", rho_sharp = " + fmt("%.6f", r["brutal"]["calibration"]["rho_hat"].get<double>());
  t += ", central probability " +
       fmt("%.5f", r["brutal"]["central_region_probability"].get<double>());
  t += ", tv distance " + fmt("%.5f", r["brutal"]["tv_distance"].get<double>()) + "\n";
  return t;
}

Json simulate(const std::vector<ScenarioResult>& results) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["report_type"] = "simulate";
  Json rows = Json::array();
  for (const ScenarioResult& res : results) {
    Json row;
    Json config;
    config["label"] = res.config.label;
    config["n"] = res.config.n;
    config["c"] = res.config.spacing_c;
    config["regime"] = to_string(res.config.regime);
    config["sigma"] = res.config.noise.sigma;
    config["rho"] = res.config.noise.rho;
    config["replications"] = res.config.replications;
    config["samples"] = res.config.samples_per_rep;
    config["seed"] = res.config.seed;
    row["config"] = std::move(config);
    row["scores"] = res.scores;
    row["deformation"] = res.deformation;
    row["mean_sigma_hat"] = res.mean_sigma_hat;
    row["sd_sigma_hat"] = res.sd_sigma_hat;
    row["mean_rho_hat"] = res.mean_rho_hat;
    row["sd_rho_hat"] = res.sd_rho_hat;
    row["mean_lambda"] = res.mean_lambda;
    row["sd_lambda"] = res.sd_lambda;
    row["mean_gamma"] = res.mean_gamma;
    row["sd_gamma"] = res.sd_gamma;
    row["gamma_undefined"] = res.gamma_undefined;
    row["mean_central_prob_structured"] = res.mean_central_prob_structured;
    row["mean_central_prob_brutal"] = res.mean_central_prob_brutal;
    row["mean_entropy_structured"] = res.mean_entropy_structured;
    row["mean_entropy_brutal"] = res.mean_entropy_brutal;
    row["mean_tv"] = res.mean_tv;
    row["top1_recovery"] = res.top1_recovery;
    row["mean_topk_structured"] = res.mean_topk_structured;
    row["mean_precedence_structured"] = res.mean_precedence_structured;
    row["mean_precedence_brutal"] = res.mean_precedence_brutal;
    row["tie_errors"] = res.tie_errors;
    rows.push_back(std::move(row));
  }
  out["scenarios"] = std::move(rows);
  return out;
}

std::string simulate_text(const Json& report) {
  std::string t;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-16s %3s %-9s %6s %5s | %8s %8s %8s %8s | %8s %8s %8s\n",
                "label", "n", "regime", "sigma", "rho", "sigma^", "rho^", "lambda", "gamma",
                "P(cen)s", "P(cen)b", "tv");
  t += buf;
  for (const auto& row : report["scenarios"]) {
    const auto& c = row["config"];
    std::snprintf(buf, sizeof(buf),
                  "%-16s %3d %-9s %6.3f %5.2f | %8.4f %8.4f %8.4f %8.4f | %8.4f %8.4f %8.4f\n",
                  c["label"].get<std::string>().c_str(), c["n"].get<int>(),
                  c["regime"].get<std::string>().c_str(), c["sigma"].get<double>(),
                  c["rho"].get<double>(), row["mean_sigma_hat"].get<double>(),
                  row["mean_rho_hat"].get<double>(), row["mean_lambda"].get<double>(),
                  row["mean_gamma"].get<double>(),
                  row["mean_central_prob_structured"].get<double>(),
                  row["mean_central_prob_brutal"].get<double>(), row["mean_tv"].get<double>());
    t += buf;
  }
  return t;
}

namespace {

struct McRef {
  double sigma, p_na, p_wr, p_both;
};
constexpr McRef kMcRef[] = {
    {0.05, 0.00015, 0.02286, 0.00000},
    {0.10, 0.03245, 0.18163, 0.00889},
    {0.15, 0.11135, 0.34452, 0.05062},
    {0.20, 0.19690, 0.47416, 0.11029},
};
constexpr double kMcTol = 0.01;

struct TauRef {
  double tau, lambda, gamma, sigma_sharp, rho_sharp;
};
constexpr TauRef kTauRef[] = {
    {0.0, 0.000, 0.000, 0.100, 0.000},
    {0.5, 0.124, 0.444, 0.106, 0.109},
    {1.0, 0.248, 0.889, 0.122, 0.327},
};
constexpr double kTauTolAnalytic = 0.001;
constexpr double kTauTolMonteCarlo = 0.03;
constexpr double kSigmaStructRef = 0.100;
constexpr double kRhoStructRef = 0.000;

Json cell(const char* name, double computed, double reference, double tol) {
  Json c;
  c["name"] = name;
  c["computed"] = computed;
  c["reference"] = reference;
  c["tolerance"] = tol;
  c["pass"] = std::abs(computed - reference) <= tol;
  return c;
}

Json worked_example_json() {
  const WorkedExampleReport rep = run_worked_example();
  Json out;
  Json checks = Json::array();
  for (const auto& [name, ok] : rep.checks) {
    Json c;
    c["name"] = name;
    c["pass"] = ok;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["recovered_scores"] = rep.recovered_scores.values();
  out["recovered_ranking"] = rep.recovered_ranking.to_string();
  out["all_pass"] = rep.all_checks_pass();
  return out;
}

Json mc_table_json(std::uint64_t seed, std::uint64_t replications, int threads) {
  std::vector<double> sigmas;
  for (const McRef& ref : kMcRef) sigmas.push_back(ref.sigma);
  const std::vector<McStudyResult> rows = run_mc_study(sigmas, replications, seed, threads);
  Json out;
  out["replications"] = replications;
  out["tolerance"] = kMcTol;
  Json jrows = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row;
    row["sigma"] = rows[i].sigma;
    Json cells = Json::array();
    cells.push_back(cell("p_na", rows[i].p_na, kMcRef[i].p_na, kMcTol));
    cells.push_back(cell("p_wr", rows[i].p_wr, kMcRef[i].p_wr, kMcTol));
    cells.push_back(cell("p_both", rows[i].p_both, kMcRef[i].p_both, kMcTol));
    bool row_pass = true;
    for (const auto& c : cells) row_pass = row_pass && c["pass"].get<bool>();
    row["cells"] = std::move(cells);
    row["standard_errors"] = rows[i].standard_errors;
    row["pass"] = row_pass;
    all = all && row_pass;
    jrows.push_back(std::move(row));
  }
  out["rows"] = std::move(jrows);
  out["all_pass"] = all;
  return out;
}

Json tau_table_json(std::uint64_t seed, std::uint64_t replications, bool monte_carlo,
                    int threads) {
  TauStudyConfig config;
  config.mode = monte_carlo ? TauMode::monte_carlo : TauMode::analytic;
  config.replications = replications;
  config.seed = seed;
  config.threads = threads;
  std::vector<double> taus;
  for (const TauRef& ref : kTauRef) taus.push_back(ref.tau);
  const std::vector<TauStudyRow> rows = run_tau_study(taus, config);
  const double tol = monte_carlo ? kTauTolMonteCarlo : kTauTolAnalytic;
  Json out;
  out["mode"] = monte_carlo ? "monte_carlo" : "analytic";
  out["tolerance"] = tol;
  if (monte_carlo) out["replications"] = replications;
  Json jrows = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row;
    row["tau"] = rows[i].tau;
    Json cells = Json::array();
    cells.push_back(cell("lambda", rows[i].lambda, kTauRef[i].lambda, tol));
    cells.push_back(cell("gamma", rows[i].gamma, kTauRef[i].gamma, tol));
    cells.push_back(cell("sigma_sharp", rows[i].sigma_sharp, kTauRef[i].sigma_sharp, tol));
    cells.push_back(cell("rho_sharp", rows[i].rho_sharp, kTauRef[i].rho_sharp, tol));
    if (!monte_carlo) {
      cells.push_back(cell("sigma_struct", rows[i].sigma_struct, kSigmaStructRef, tol));
      cells.push_back(cell("rho_struct", rows[i].rho_struct, kRhoStructRef, tol));
    }
    bool row_pass = true;
    for (const auto& c : cells) row_pass = row_pass && c["pass"].get<bool>();
    row["cells"] = std::move(cells);
    if (monte_carlo) {
      row["sigma_struct"] = rows[i].sigma_struct;
      row["rho_struct"] = rows[i].rho_struct;
      row["rep_mean_sigma_sharp"] = rows[i].rep_mean_sigma_sharp;
      row["rep_mean_rho_sharp"] = rows[i].rep_mean_rho_sharp;
      row["rep_mean_sigma_struct"] = rows[i].rep_mean_sigma_struct;
      row["rep_mean_rho_struct"] = rows[i].rep_mean_rho_struct;
      row["rep_mean_lambda"] = rows[i].rep_mean_lambda;
      row["rep_mean_gamma"] = rows[i].rep_mean_gamma;
    }
    row["pass"] = row_pass;
    all = all && row_pass;
    jrows.push_back(std::move(row));
  }
  out["rows"] = std::move(jrows);
  out["all_pass"] = all;
  return out;
}

}  // namespace

Json reproduce(const std::string& which, const ReproduceOptions& options) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["report_type"] = "reproduce";
  out["which"] = which;
  out["seed"] = options.seed;
  bool all = true;
  if (which == "worked_example" || which == "all") {
    out["worked_example"] = worked_example_json();
    all = all && out["worked_example"]["all_pass"].get<bool>();
  }
  if (which == "mc_table" || which == "all") {
    out["mc_table"] = mc_table_json(options.seed, options.mc_replications, options.threads);
    all = all && out["mc_table"]["all_pass"].get<bool>();
  }
  if (which == "tau_table" || which == "all") {
    out["tau_table"] = tau_table_json(options.seed, options.tau_replications,
                                      options.tau_monte_carlo, options.threads);
    all = all && out["tau_table"]["all_pass"].get<bool>();
  }
  out["all_pass"] = all;
  return out;
}

std::string reproduce_text(const Json& report) {
  std::string t;
  char buf[256];
  if (report.contains("worked_example")) {
    t += "worked example:\n";
    for (const auto& c : report["worked_example"]["checks"]) {
      std::snprintf(buf, sizeof(buf), "  [%s] %s\n", c["pass"].get<bool>() ? "PASS" : "FAIL",
                    c["name"].get<std::string>().c_str());
      t += buf;
    }
  }
  if (report.contains("mc_table")) {
    t += "monte carlo table (tolerance " + fmt("%.3f", report["mc_table"]["tolerance"].get<double>()) +
         "):\n";
    std::snprintf(buf, sizeof(buf), "  %5s %23s %23s %23s\n", "sigma", "p_na (ref)", "p_wr (ref)",
                  "p_both (ref)");
    t += buf;
    for (const auto& row : report["mc_table"]["rows"]) {
      const auto& cells = row["cells"];
      std::snprintf(buf, sizeof(buf),
                    "  %5.2f %9.5f (%8.5f) %9.5f (%8.5f) %9.5f (%8.5f)  [%s]\n",
                    row["sigma"].get<double>(), cells[0]["computed"].get<double>(),
                    cells[0]["reference"].get<double>(), cells[1]["computed"].get<double>(),
                    cells[1]["reference"].get<double>(), cells[2]["computed"].get<double>(),
                    cells[2]["reference"].get<double>(), row["pass"].get<bool>() ? "PASS" : "FAIL");
      t += buf;
    }
  }
  if (report.contains("tau_table")) {
    t += "tau table (" + report["tau_table"]["mode"].get<std::string>() + ", tolerance " +
         fmt("%.3f", report["tau_table"]["tolerance"].get<double>()) + "):\n";
    for (const auto& row : report["tau_table"]["rows"]) {
      std::snprintf(buf, sizeof(buf), "  tau=%.1f", row["tau"].get<double>());
      t += buf;
      for (const auto& c : row["cells"]) {
        std::snprintf(buf, sizeof(buf), "  %s=%.4f(%0.3f)", c["name"].get<std::string>().c_str(),
                      c["computed"].get<double>(), c["reference"].get<double>());
        t += buf;
      }
      t += row["pass"].get<bool>() ? "  [PASS]\n" : "  [FAIL]\n";
    }
  }
  t += report["all_pass"].get<bool>() ? "ALL PASS\n" : "FAILURES PRESENT\n";
  return t;
}

}  // namespace rankcal::report
