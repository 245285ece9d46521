#include "rankcal/projection.hpp"

#include <cmath>
#include <string>

#include "rankcal/errors.hpp"
#include "rankcal/random.hpp"
#include "rankcal/structure.hpp"

namespace rankcal {

namespace {

// Sub-seed streams of compare_methods; both pipelines sample from
// independent streams derived from one master seed.
constexpr std::uint64_t kStructuredStream = 1;
constexpr std::uint64_t kBrutalStream = 2;

}  // namespace

ComparisonMatrix brutal_project(const ComparisonMatrix& x) {
  return decompose(x).antisymmetric;
}

StructuredAnalysis structured_pipeline(const ComparisonMatrix& x, std::uint64_t samples,
                                       std::uint64_t seed, int threads) {
  StructuredFit fit = fit_structured(x);
  const ResidualDiagnostics diag = calibrate_noise(fit.residual);
  const DeformationDiagnostics deform = deformation_diagnostics(fit.scores, fit.scale);
  ScoreLaw law = score_law(fit.scores, diag);
  RankingDistribution dist = ranking_distribution(law, samples, seed, threads);
  return {std::move(fit), diag, deform, std::move(law), std::move(dist)};
}

BrutalAnalysis brutal_pipeline(const ComparisonMatrix& x, std::uint64_t samples,
                               std::uint64_t seed, int threads) {
  ScoreVector scores = estimate_scores(brutal_project(x));
  const int n = x.size();
  ComparisonMatrix residual(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) residual.set(i, j, x(i, j) - (scores[i] - scores[j]));
  const ResidualDiagnostics diag = calibrate_noise(residual);
  ScoreLaw law = score_law(scores, diag);
  RankingDistribution dist = ranking_distribution(law, samples, seed, threads);
  return {std::move(scores), std::move(residual), diag, std::move(law), std::move(dist)};
}

MethodComparison compare_methods(const ComparisonMatrix& x, std::uint64_t samples,
                                 std::uint64_t seed, int threads) {
  MethodComparison c{
      structured_pipeline(x, samples, derive_seed(seed, kStructuredStream), threads),
      brutal_pipeline(x, samples, derive_seed(seed, kBrutalStream), threads),
      {}};
  c.deltas.central_prob_diff =
      central_region_probability(c.structured.distribution, c.structured.fit.scores) -
      central_region_probability(c.brutal.distribution, c.brutal.scores);
  const SummaryProbabilities ss = summary_probabilities(c.structured.distribution);
  const SummaryProbabilities sb = summary_probabilities(c.brutal.distribution);
  const int n = x.size();
  c.deltas.topk_diff.assign(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      c.deltas.topk_diff[k] =
          std::max(c.deltas.topk_diff[k], std::abs(ss.top_k[k][i] - sb.top_k[k][i]));
  c.deltas.tv = tv_distance(c.structured.distribution, c.brutal.distribution);
  return c;
}

ExpectedBrutalIndicators expected_brutal_indicators(const ScaleVector& scale, double sigma,
                                                    double rho) {
  if (sigma < 0.0) throw ConfigError("sigma must be nonnegative");
  if (rho < -1.0 || rho > 1.0) throw ConfigError("rho must lie in [-1, 1]");
  const int n = scale.size();
  if (n < 3) throw DimensionError("expected indicators need n >= 3");
  const double s2 = scale.squared_norm();
  const double nn = static_cast<double>(n);
  ExpectedBrutalIndicators e;
  e.triangle_defect = 3.0 * sigma * sigma + 4.0 * s2 / nn;
  e.reciprocity_defect = 2.0 * (1.0 + rho) * sigma * sigma + 8.0 * (nn - 2.0) * s2 / (nn * (nn - 1.0));
  e.sigma_sharp = std::sqrt(e.triangle_defect / 3.0);
  e.rho_sharp = e.triangle_defect > 0.0
                    ? 1.5 * e.reciprocity_defect / e.triangle_defect - 1.0
                    : rho;
  return e;
}

}  // namespace rankcal
