#pragma once

#include <array>
#include <optional>

#include "rankcal/matrix.hpp"
#include "rankcal/scores.hpp"

namespace rankcal {

/// Default tolerance for the structural predicates below. Judgment data has
/// no intrinsic tolerance, so this is an explicit parameter everywhere.
inline constexpr double kStructuralTol = 1e-9;

/// Antisymmetric/symmetric split of a matrix. Both parts keep the zero
/// diagonal and sum back to the source.
struct Decomposition {
  ComparisonMatrix antisymmetric;  // (X - X^T) / 2
  ComparisonMatrix symmetric;      // (X + X^T) / 2
};

Decomposition decompose(const ComparisonMatrix& x);

/// True iff |x_ij + x_ji| <= tol for every pair i < j.
bool is_reciprocal(const ComparisonMatrix& x, double tol = kStructuralTol);

/// True iff |x_ik - x_ij - x_jk| <= tol over all pairwise-distinct triples.
bool is_additively_consistent(const ComparisonMatrix& x, double tol = kStructuralTol);

/// Recovers the centered score vector u with x_ij = u_i - u_j from an
/// additively consistent matrix. Throws Error when a residual exceeds tol.
ScoreVector scores_from_consistent(const ComparisonMatrix& x, double tol = kStructuralTol);

/// Outcome of the strict-ranking sign test. A matrix admits a strict
/// ranking iff the relation {i beats j when x_ij > 0} is a strict total
/// order: every off-diagonal entry nonzero, opposite entries of opposite
/// sign, and no 3-cycle. When a 3-cycle exists the lexicographically
/// smallest one is reported as {a, b, c}: a beats b, b beats c, c beats a.
struct Admissibility {
  bool admissible = false;
  std::optional<std::array<int, 3>> cycle;
  std::optional<Ranking> order;  // the unique compatible ranking, when admissible
};

Admissibility strict_ranking_admissible(const ComparisonMatrix& x);

/// Ranking induced by sorting scores in strictly decreasing order. Exact
/// ties are broken by ascending index and flagged; they never abort a
/// sampling run (ties have probability zero under the Gaussian sampler).
struct RankedScores {
  Ranking ranking;
  bool tied = false;
};

RankedScores ranking_of(const ScoreVector& u);

/// Minimum consecutive difference of the decreasingly sorted coordinates;
/// zero when ties exist. Requires n >= 2.
double gap(const ScoreVector& u);

/// True iff sign(m_ij) == sign(u_i - u_j) on every off-diagonal pair
/// (zero agrees only with zero).
bool is_ranking_compatible(const ComparisonMatrix& m, const ScoreVector& u);

}  // namespace rankcal
