#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankcal/matrix.hpp"
#include "rankcal/scores.hpp"

namespace rankcal {

/// Gaussian perturbation parameters: common standard deviation sigma and
/// opposite-pair correlation rho, i.e. Cov(e_ij, e_ji) = rho sigma^2.
struct NoiseSpec {
  double sigma = 0.0;
  double rho = 0.0;

  /// Throws ConfigError unless sigma >= 0 and |rho| <= 1.
  void validate() const;
};

/// Equally spaced latent profile u_i = c((n+1)/2 - i), already centered,
/// strictly decreasing, with gap c.
ScoreVector latent_scores(int n, double c);

/// Draws a noise matrix: for each unordered pair, (e_ij, e_ji) is bivariate
/// Gaussian with the spec's moments, independent across pairs, zero
/// diagonal. Sampled as e_ij = sigma z1, e_ji = sigma (rho z1 +
/// sqrt(1 - rho^2) z2), which is exact for every rho in [-1, 1] including
/// the endpoints. Deterministic given the seed.
ComparisonMatrix noise_matrix(int n, const NoiseSpec& spec, std::uint64_t seed);

/// Observed matrix x_ij = u_i - u_j + s_i + s_j + noise_ij, zero diagonal.
ComparisonMatrix observed_matrix(const ScoreVector& u, const ScaleVector& s,
                                 const ComparisonMatrix& noise);

/// Deformation regimes relative to the latent gap:
///   none     : s = 0,
///   moderate : 0 < 2 max|s| < gap(u)   (ranking preserved by construction),
///   strong   : 2 max|s| >= 0.9 gap(u)  (deformation competes with the gap).
enum class DeformationRegime { none, moderate, strong };

const char* to_string(DeformationRegime r);

/// One cell of a simulation grid. The deformation vector may be left empty,
/// in which case a default profile matching the regime is used; explicit
/// vectors are validated against the regime inequality at resolution time.
struct ScenarioConfig {
  std::string label;
  int n = 4;
  double spacing_c = 0.12;
  DeformationRegime regime = DeformationRegime::none;
  std::vector<double> deformation;
  NoiseSpec noise;
  std::uint64_t replications = 100;
  std::uint64_t samples_per_rep = 10000;
  std::uint64_t seed = 0;
};

/// Resolves (and validates) the deformation vector of a scenario against
/// its declared regime. Throws RegimeError on violation, ConfigError on bad
/// noise parameters or sizes.
ScaleVector resolve_deformation(const ScenarioConfig& config);

}  // namespace rankcal
