#include "rankcal/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "rankcal/errors.hpp"

namespace rankcal {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

Decomposition decompose(const ComparisonMatrix& x) {
  const int n = x.size();
  ComparisonMatrix k(n), h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      k.set(i, j, (x(i, j) - x(j, i)) / 2.0);
      h.set(i, j, (x(i, j) + x(j, i)) / 2.0);
    }
  }
  return {std::move(k), std::move(h)};
}

bool is_reciprocal(const ComparisonMatrix& x, double tol) {
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(x(i, j) + x(j, i)) > tol) return false;
  return true;
}

bool is_additively_consistent(const ComparisonMatrix& x, double tol) {
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (std::abs(x(i, k) - x(i, j) - x(j, k)) > tol) return false;
      }
    }
  return true;
}

ScoreVector scores_from_consistent(const ComparisonMatrix& x, double tol) {
  const int n = x.size();
  // u_i = x_{i,r} for a fixed reference column, recentered by the ctor.
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) u[i] = x(i, 0);
  ScoreVector scores(std::move(u));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(x(i, j) - (scores[i] - scores[j])) > tol)
        throw Error("matrix is not additively consistent within tolerance");
    }
  return scores;
}

Admissibility strict_ranking_admissible(const ComparisonMatrix& x) {
  const int n = x.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = x(i, j);
      const double b = x(j, i);
      // Ties and sign-inconsistent pairs rule out every strict ranking.
      if (a == 0.0 || b == 0.0 || (a > 0.0) == (b > 0.0)) return {false, std::nullopt, std::nullopt};
    }
  }
  const auto beats = [&](int a, int b) { return x(a, b) > 0.0; };
  // A sign tournament is a strict total order iff it has no 3-cycle; report
  // the lexicographically smallest one as the witness.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (beats(i, j) && beats(j, k) && beats(k, i))
          return {false, std::array<int, 3>{i, j, k}, std::nullopt};
        if (beats(i, k) && beats(k, j) && beats(j, i))
          return {false, std::array<int, 3>{i, k, j}, std::nullopt};
      }
  // Transitive tournament: out-degrees n-1, n-2, ..., 0 sort the items.
  std::vector<int> wins(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && beats(i, j)) ++wins[i];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return wins[a] > wins[b]; });
  return {true, std::nullopt, Ranking(std::move(order))};
}

RankedScores ranking_of(const ScoreVector& u) {
  const int n = u.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return u[a] > u[b]; });
  bool tied = false;
  for (int r = 0; r + 1 < n; ++r)
    if (u[order[r]] == u[order[r + 1]]) tied = true;
  return {Ranking(std::move(order)), tied};
}

double gap(const ScoreVector& u) {
  if (u.size() < 2) throw DimensionError("gap needs at least two scores");
  std::vector<double> sorted = u.values();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double g = sorted[0] - sorted[1];
  for (std::size_t k = 1; k + 1 < sorted.size(); ++k)
    g = std::min(g, sorted[k] - sorted[k + 1]);
  return g;
}

bool is_ranking_compatible(const ComparisonMatrix& m, const ScoreVector& u) {
  const int n = m.size();
  if (u.size() != n) throw DimensionError("score vector does not match matrix dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sgn(m(i, j)) != sgn(u[i] - u[j])) return false;
  return true;
}

}  // namespace rankcal
