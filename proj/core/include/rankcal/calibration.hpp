#pragma once

#include <optional>

#include "rankcal/matrix.hpp"
#include "rankcal/scores.hpp"

namespace rankcal {

/// Mean squared departure from reciprocity:
///   (2 / (n(n-1))) * sum_{i<j} (E_ij + E_ji)^2.
/// Zero exactly on antisymmetric matrices.
double reciprocity_defect(const ComparisonMatrix& e);

/// Mean squared triangle defect over pairwise-distinct ordered triples:
///   (1 / (n(n-1)(n-2))) * sum (E_ik - E_ij - E_jk)^2.
/// Zero exactly on additively consistent matrices. Computed through an
/// O(n^2) expansion in row/column sums; the naive triple loop is kept as a
/// test oracle.
double triangle_defect(const ComparisonMatrix& e);

/// Plug-in residual noise calibration under the homogeneous Gaussian
/// working model: sigma^2 = triangle_defect / 3 and
/// rho = (3/2) * reciprocity_defect / triangle_defect - 1.
///
/// rho_hat is rho_raw clamped to [-1, 1] (the plug-in ratio can leave the
/// interval in finite samples); clamping is recorded. A triangle defect at
/// the floating-point rounding floor marks the residual as degenerate
/// ("zero residual noise") instead of producing a 0/0 ratio, so perfectly
/// structured matrices flow through the pipeline.
struct ResidualDiagnostics {
  double reciprocity_defect = 0.0;
  double triangle_defect = 0.0;
  double sigma_hat = 0.0;
  double rho_raw = 0.0;
  double rho_hat = 0.0;
  bool rho_clamped = false;
  bool degenerate = false;
};

ResidualDiagnostics calibrate_noise(const ComparisonMatrix& residual);

/// Size diagnostics of the fitted scale deformation.
///
/// lambda is the Frobenius ratio ||S||_F / ||U||_F of the fitted scale
/// component S_ij = s_i + s_j (full matrix, diagonal 2 s_i) to the fitted
/// score component U_ij = u_i - u_j (zero diagonal); undefined when U = 0.
/// gamma is 2 max|s| / gap(u), the local impact on the tightest score gap;
/// undefined when the gap is zero.
struct DeformationDiagnostics {
  std::optional<double> lambda;
  std::optional<double> gamma;
  double gap = 0.0;
  double scale_max = 0.0;   // max |s_i|
  double score_frob = 0.0;  // ||U||_F
  double scale_frob = 0.0;  // ||S||_F
};

DeformationDiagnostics deformation_diagnostics(const ScoreVector& scores,
                                               const ScaleVector& scale);

enum class DeformationClass { negligible, moderate, influential };

const char* to_string(DeformationClass c);

/// Thresholds for the qualitative reading of (lambda, gamma). Defaults sit
/// inside the usual "small" / "close to 1" bands and are configurable.
struct ClassificationThresholds {
  double lambda0 = 0.1;
  double gamma0 = 0.25;
  double gamma1 = 0.75;
};

/// negligible when lambda < lambda0 and gamma < gamma0; influential when
/// gamma >= gamma1; moderate otherwise. An undefined gamma (tied scores)
/// classifies as influential with a tie warning.
struct DeformationAssessment {
  DeformationClass category = DeformationClass::negligible;
  bool tie_warning = false;
};

DeformationAssessment classify_deformation(const DeformationDiagnostics& d,
                                           const ClassificationThresholds& t = {});

}  // namespace rankcal
