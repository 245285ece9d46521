#pragma once

#include "rankcal/matrix.hpp"
#include "rankcal/scores.hpp"

namespace rankcal {

/// Least-squares score estimate from the antisymmetric part: row means,
/// including the zero diagonal term (divide by n, not n - 1). This is the
/// unique minimizer of sum_{i!=j} (K_ij - (u_i - u_j))^2 over centered u.
ScoreVector estimate_scores(const ComparisonMatrix& antisymmetric_part);

/// Least-squares scale estimate from the symmetric part: with row sums r_i,
/// s_i = (r_i - mean(r)) / (n - 2); the unique centered minimizer of
/// sum_{i!=j} (H_ij - (s_i + s_j))^2.
ScaleVector estimate_scale(const ComparisonMatrix& symmetric_part);

/// Joint decomposition of an observed matrix into fitted structure and
/// residual. Off-diagonal: fitted_ij = u_i - u_j + s_i + s_j and
/// residual = X - fitted; both diagonals are exact zeros.
struct StructuredFit {
  ScoreVector scores;
  ScaleVector scale;
  ComparisonMatrix fitted;
  ComparisonMatrix residual;
};

StructuredFit fit_structured(const ComparisonMatrix& x);

/// Least-squares projection onto additively consistent matrices: scores are
/// the row means of the antisymmetric part, the matrix is u_i - u_j.
/// Idempotent; consistent matrices are fixed points.
struct ConsistentProjection {
  ScoreVector scores;
  ComparisonMatrix matrix;
};

ConsistentProjection consistencize(const ComparisonMatrix& x);

}  // namespace rankcal
