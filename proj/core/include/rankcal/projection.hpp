#pragma once

#include <cstdint>
#include <vector>

#include "rankcal/estimation.hpp"
#include "rankcal/uncertainty.hpp"

namespace rankcal {

/// Brutal reciprocal projection: keep the antisymmetric part (X - X^T)/2,
/// discard the symmetric part entirely. Idempotent.
ComparisonMatrix brutal_project(const ComparisonMatrix& x);

/// Full structured analysis: fit, residual calibration, deformation
/// diagnostics, score law, ranking distribution.
struct StructuredAnalysis {
  StructuredFit fit;
  ResidualDiagnostics diagnostics;
  DeformationDiagnostics deformation;
  ScoreLaw law;
  RankingDistribution distribution;
};

StructuredAnalysis structured_pipeline(const ComparisonMatrix& x, std::uint64_t samples,
                                       std::uint64_t seed, int threads = 1);

/// Brutal analysis: scores from the projected matrix, residual
/// X - (u_i - u_j) (the whole symmetric part stays in the residual),
/// then the same calibration and sampling as the structured path.
/// The score estimate coincides with the structured one for every X.
struct BrutalAnalysis {
  ScoreVector scores;
  ComparisonMatrix residual;
  ResidualDiagnostics diagnostics;
  ScoreLaw law;
  RankingDistribution distribution;
};

BrutalAnalysis brutal_pipeline(const ComparisonMatrix& x, std::uint64_t samples,
                               std::uint64_t seed, int threads = 1);

/// Side-by-side run of both pipelines under a shared seed discipline
/// (independent sub-seeds derived from one master seed).
///
/// central_prob_diff = structured minus brutal probability of the central
/// region; topk_diff[k-1] = max over alternatives of the absolute top-k
/// membership probability difference; tv = total variation distance
/// between the two ranking distributions.
struct MethodDeltas {
  double central_prob_diff = 0.0;
  std::vector<double> topk_diff;
  double tv = 0.0;
};

struct MethodComparison {
  StructuredAnalysis structured;
  BrutalAnalysis brutal;
  MethodDeltas deltas;
};

MethodComparison compare_methods(const ComparisonMatrix& x, std::uint64_t samples,
                                 std::uint64_t seed, int threads = 1);

/// Analytic expectations of the brutal residual indicators when the true
/// structure has centered scale vector s and the noise has parameters
/// (sigma, rho):
///   E[triangle defect]    = 3 sigma^2 + 4 ||s||^2 / n,
///   E[reciprocity defect] = 2 (1 + rho) sigma^2 + 8 (n-2) ||s||^2 / (n(n-1)),
/// plus the implied plug-in calibration sigma_sharp = sqrt(IC/3) and
/// rho_sharp = (3/2) IR/IC - 1.
struct ExpectedBrutalIndicators {
  double triangle_defect = 0.0;
  double reciprocity_defect = 0.0;
  double sigma_sharp = 0.0;
  double rho_sharp = 0.0;
};

ExpectedBrutalIndicators expected_brutal_indicators(const ScaleVector& scale, double sigma,
                                                    double rho);

}  // namespace rankcal
