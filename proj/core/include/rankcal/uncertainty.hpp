#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rankcal/calibration.hpp"
#include "rankcal/scores.hpp"

namespace rankcal {

/// Gaussian uncertainty law for the score vector on the centered
/// hyperplane: mean at the estimated scores, covariance
/// noise_variance * (I - J/n). noise_variance == 0 is a point mass.
struct ScoreLaw {
  ScoreVector mean;
  double noise_variance = 0.0;

  int size() const { return mean.size(); }
};

/// Covariance scalar from the calibrated residual:
/// noise_variance = (1 - rho_hat) * sigma_hat^2 / (2n), using the clamped
/// rho_hat. rho_hat = 1 or sigma_hat = 0 collapse to a point mass.
ScoreLaw score_law(const ScoreVector& scores, const ResidualDiagnostics& diag);

/// Sample i of the law as a pure function of (seed, i): draw n i.i.d.
/// Gaussians with variance noise_variance, subtract their mean, add the law
/// mean. The centering projection realizes the singular covariance
/// noise_variance * (I - J/n) exactly, with no matrix factorization.
/// Parallel and serial runs agree bit for bit.
ScoreVector sample_score(const ScoreLaw& law, std::uint64_t seed, std::uint64_t index);

/// Empirical distribution over strict rankings from Monte Carlo sampling.
/// Stored as a sparse count map: observed support is small even though n!
/// is huge. Tie-broken samples are counted under their tie-broken ranking
/// and tallied in tie_samples.
struct RankingDistribution {
  std::map<Ranking, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t tie_samples = 0;
  std::uint64_t seed = 0;
  int n = 0;

  double probability(const Ranking& r) const;
  /// Shannon entropy of the region frequencies, in bits.
  double entropy_bits() const;

  bool operator==(const RankingDistribution&) const = default;
};

/// Samples the law and counts induced rankings. Deterministic given
/// (law, samples, seed) for any thread count: per-sample sub-seeds plus
/// order-insensitive integer merges.
RankingDistribution ranking_distribution(const ScoreLaw& law, std::uint64_t samples,
                                         std::uint64_t seed, int threads = 1);

/// Empirical frequency of the ranking induced by the scores themselves.
/// Throws TieError when the scores are tied (their region is empty).
double central_region_probability(const RankingDistribution& dist, const ScoreVector& scores);

/// Marginal summaries of a ranking distribution.
/// top_k[k-1][i] = P(alternative i ranked within the best k); top_k[0] is
/// the top-1 vector. precedence[i][j] = P(i ranked above j), with
/// precedence[i][j] + precedence[j][i] = 1 on tie-free samples.
struct SummaryProbabilities {
  std::vector<double> top1;
  std::vector<std::vector<double>> top_k;
  std::vector<std::vector<double>> precedence;
  double entropy_bits = 0.0;
};

SummaryProbabilities summary_probabilities(const RankingDistribution& dist);

/// Total variation distance (1/2) sum_r |p1(r) - p2(r)| over the union of
/// supports. Throws DimensionError when the distributions rank different
/// numbers of alternatives.
double tv_distance(const RankingDistribution& a, const RankingDistribution& b);

}  // namespace rankcal
