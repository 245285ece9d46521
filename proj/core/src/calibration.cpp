#include "rankcal/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rankcal/errors.hpp"
#include "rankcal/structure.hpp"

namespace rankcal {

namespace {

// Below this, the triangle defect is indistinguishable from accumulated
// rounding of a perfectly structured fit (residual entries ~1e-15 on unit
// scale give defects ~1e-30) and far below any real judgment noise.
constexpr double kDegenerateTriangleDefect = 1e-24;

}  // namespace

double reciprocity_defect(const ComparisonMatrix& e) {
  const int n = e.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = e(i, j) + e(j, i);
      sum += d * d;
    }
  return 2.0 * sum / (static_cast<double>(n) * (n - 1));
}

double triangle_defect(const ComparisonMatrix& e) {
  const int n = e.size();
  // Expansion of sum over pairwise-distinct (i,j,k) of
  // (E_ik - E_ij - E_jk)^2 in terms of row sums R, column sums C, the
  // squared Frobenius norm F2 and the pairing P = sum E_ij E_ji:
  //   (3n-2) F2 - 2|R|^2 - 2|C|^2 + 2<R,C> - 2P.
  std::vector<double> row(n, 0.0), col(n, 0.0);
  double f2 = 0.0, pairing = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = e(i, j);
      row[i] += v;
      col[j] += v;
      f2 += v * v;
      pairing += v * e(j, i);
    }
  double r2 = 0.0, c2 = 0.0, rc = 0.0;
  for (int i = 0; i < n; ++i) {
    r2 += row[i] * row[i];
    c2 += col[i] * col[i];
    rc += row[i] * col[i];
  }
  const double total = (3.0 * n - 2.0) * f2 - 2.0 * r2 - 2.0 * c2 + 2.0 * rc - 2.0 * pairing;
  const double scaled = total / (static_cast<double>(n) * (n - 1) * (n - 2));
  return std::max(scaled, 0.0);
}

ResidualDiagnostics calibrate_noise(const ComparisonMatrix& residual) {
  ResidualDiagnostics d;
  d.reciprocity_defect = reciprocity_defect(residual);
  d.triangle_defect = triangle_defect(residual);
  if (d.triangle_defect <= kDegenerateTriangleDefect) {
    d.degenerate = true;
    d.sigma_hat = 0.0;
    d.rho_raw = 0.0;
    d.rho_hat = 0.0;
    return d;
  }
  d.sigma_hat = std::sqrt(d.triangle_defect / 3.0);
  d.rho_raw = 1.5 * d.reciprocity_defect / d.triangle_defect - 1.0;
  d.rho_hat = std::clamp(d.rho_raw, -1.0, 1.0);
  d.rho_clamped = d.rho_hat != d.rho_raw;
  return d;
}

DeformationDiagnostics deformation_diagnostics(const ScoreVector& scores,
                                               const ScaleVector& scale) {
  if (scores.size() != scale.size())
    throw DimensionError("score and scale vectors differ in length");
  const int n = scores.size();
  DeformationDiagnostics d;
  double u2 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        const double uij = scores[i] - scores[j];
        u2 += uij * uij;
      }
      // The scale component has nonzero diagonal 2 s_i.
      const double sij = scale[i] + scale[j];
      s2 += sij * sij;
    }
  d.score_frob = std::sqrt(u2);
  d.scale_frob = std::sqrt(s2);
  d.scale_max = scale.max_abs();
  d.gap = n >= 2 ? gap(scores) : 0.0;
  if (d.score_frob > 0.0) d.lambda = d.scale_frob / d.score_frob;
  if (d.gap > 0.0) d.gamma = 2.0 * d.scale_max / d.gap;
  return d;
}

const char* to_string(DeformationClass c) {
  switch (c) {
    case DeformationClass::negligible: return "negligible";
    case DeformationClass::moderate: return "moderate";
    case DeformationClass::influential: return "influential";
  }
  return "?";
}

DeformationAssessment classify_deformation(const DeformationDiagnostics& d,
                                           const ClassificationThresholds& t) {
  if (!d.gamma.has_value()) return {DeformationClass::influential, true};
  const double lambda = d.lambda.value_or(0.0);
  const double gamma = *d.gamma;
  if (gamma >= t.gamma1) return {DeformationClass::influential, false};
  if (lambda < t.lambda0 && gamma < t.gamma0) return {DeformationClass::negligible, false};
  return {DeformationClass::moderate, false};
}

}  // namespace rankcal
