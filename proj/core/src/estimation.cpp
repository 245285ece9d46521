#include "rankcal/estimation.hpp"

#include <cmath>
#include <vector>

#include "rankcal/errors.hpp"
#include "rankcal/structure.hpp"

namespace rankcal {

namespace {

// Inputs reaching the estimators through decompose() are exact; direct
// callers get a cheap structural check.
void require_antisymmetric(const ComparisonMatrix& k) {
  if (!is_reciprocal(k, kStructuralTol)) throw Error("estimate_scores expects an antisymmetric matrix");
}

void require_symmetric(const ComparisonMatrix& h) {
  const int n = h.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(h(i, j) - h(j, i)) > kStructuralTol)
        throw Error("estimate_scale expects a symmetric matrix");
}

}  // namespace

ScoreVector estimate_scores(const ComparisonMatrix& antisymmetric_part) {
  require_antisymmetric(antisymmetric_part);
  const int n = antisymmetric_part.size();
  std::vector<double> u(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += antisymmetric_part(i, j);
    u[i] = row / static_cast<double>(n);
  }
  return ScoreVector(std::move(u));
}

ScaleVector estimate_scale(const ComparisonMatrix& symmetric_part) {
  require_symmetric(symmetric_part);
  const int n = symmetric_part.size();
  std::vector<double> r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += symmetric_part(i, j);
  double r_bar = 0.0;
  for (double v : r) r_bar += v;
  r_bar /= static_cast<double>(n);
  std::vector<double> s(n, 0.0);
  for (int i = 0; i < n; ++i) s[i] = (r[i] - r_bar) / static_cast<double>(n - 2);
  return ScaleVector(std::move(s));
}

StructuredFit fit_structured(const ComparisonMatrix& x) {
  const Decomposition d = decompose(x);
  ScoreVector scores = estimate_scores(d.antisymmetric);
  ScaleVector scale = estimate_scale(d.symmetric);
  const int n = x.size();
  ComparisonMatrix fitted(n), residual(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double m = scores[i] - scores[j] + scale[i] + scale[j];
      fitted.set(i, j, m);
      residual.set(i, j, x(i, j) - m);
    }
  return {std::move(scores), std::move(scale), std::move(fitted), std::move(residual)};
}

ConsistentProjection consistencize(const ComparisonMatrix& x) {
  ScoreVector scores = estimate_scores(decompose(x).antisymmetric);
  const int n = x.size();
  ComparisonMatrix consistent(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) consistent.set(i, j, scores[i] - scores[j]);
  return {std::move(scores), std::move(consistent)};
}

}  // namespace rankcal
