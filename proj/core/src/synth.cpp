#include "rankcal/synth.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rankcal/errors.hpp"
#include "rankcal/random.hpp"
#include "rankcal/structure.hpp"

namespace rankcal {

namespace {

// "Strong" means the deformation competes with the latent gap; a 10% slack
// keeps near-threshold vectors accepted.
constexpr double kStrongSlack = 0.9;

// Default deformation shapes, normalized to max|.| = 1. For n = 4 the
// reference profile (0.08, 0.03, -0.03, -0.08) is reused; otherwise an
// equally spaced centered profile.
std::vector<double> default_profile(int n) {
  if (n == 4) return {1.0, 0.375, -0.375, -1.0};
  std::vector<double> p(n);
  const double half = (static_cast<double>(n) - 1.0) / 2.0;
  for (int i = 0; i < n; ++i) p[i] = (half - i) / half;
  return p;
}

}  // namespace

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0)) throw ConfigError("noise sigma must be nonnegative");
  if (!(rho >= -1.0 && rho <= 1.0)) throw ConfigError("noise rho must lie in [-1, 1]");
}

ScoreVector latent_scores(int n, double c) {
  if (n < 3) throw DimensionError("latent scores need n >= 3");
  if (!(c > 0.0)) throw ConfigError("spacing must be positive");
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = c * ((static_cast<double>(n) + 1.0) / 2.0 - static_cast<double>(i + 1));
  return ScoreVector(std::move(u));
}

ComparisonMatrix noise_matrix(int n, const NoiseSpec& spec, std::uint64_t seed) {
  spec.validate();
  ComparisonMatrix e(n);
  if (spec.sigma == 0.0) return e;
  Rng rng(seed);
  const double cross = spec.rho;
  const double indep = std::sqrt(std::max(0.0, 1.0 - spec.rho * spec.rho));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double z1 = rng.next_gaussian();
      const double z2 = rng.next_gaussian();
      e.set(i, j, spec.sigma * z1);
      e.set(j, i, spec.sigma * (cross * z1 + indep * z2));
    }
  return e;
}

ComparisonMatrix observed_matrix(const ScoreVector& u, const ScaleVector& s,
                                 const ComparisonMatrix& noise) {
  const int n = noise.size();
  if (u.size() != n || s.size() != n)
    throw DimensionError("score/scale/noise dimensions do not match");
  ComparisonMatrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) x.set(i, j, u[i] - u[j] + s[i] + s[j] + noise(i, j));
  return x;
}

const char* to_string(DeformationRegime r) {
  switch (r) {
    case DeformationRegime::none: return "none";
    case DeformationRegime::moderate: return "moderate";
    case DeformationRegime::strong: return "strong";
  }
  return "?";
}

ScaleVector resolve_deformation(const ScenarioConfig& config) {
  config.noise.validate();
  const ScoreVector u = latent_scores(config.n, config.spacing_c);
  const double g = gap(u);
  std::vector<double> s = config.deformation;
  if (s.empty()) {
    switch (config.regime) {
      case DeformationRegime::none:
        s.assign(config.n, 0.0);
        break;
      case DeformationRegime::moderate: {
        s = default_profile(config.n);
        const double target = 0.4 * g;  // 2 max|s| = 0.8 gap
        for (double& v : s) v *= target;
        break;
      }
      case DeformationRegime::strong: {
        s = default_profile(config.n);
        const double target = 0.625 * g;  // 2 max|s| = 1.25 gap
        for (double& v : s) v *= target;
        break;
      }
    }
  }
  if (static_cast<int>(s.size()) != config.n)
    throw ConfigError("deformation vector length does not match n");
  ScaleVector scale(std::move(s));
  const double reach = 2.0 * scale.max_abs();
  switch (config.regime) {
    case DeformationRegime::none:
      if (reach != 0.0)
        throw RegimeError("regime \"none\" requires a zero deformation vector");
      break;
    case DeformationRegime::moderate:
      if (reach == 0.0 || reach >= g)
        throw RegimeError("regime \"moderate\" requires 0 < 2 max|s| < gap(u)");
      break;
    case DeformationRegime::strong:
      if (reach < kStrongSlack * g)
        throw RegimeError("regime \"strong\" requires 2 max|s| >= 0.9 gap(u)");
      break;
  }
  return scale;
}

}  // namespace rankcal
