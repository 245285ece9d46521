#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rankcal {

/// Centered vector of latent ranking scores. Scores are translation
/// equivalent, so the constructor recenters the coordinates to sum to zero
/// (the canonical representative).
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<double> values);

  /// Wraps values that are known to be centered already, bit for bit (used
  /// where recentering would perturb reproducibility, e.g. sampling).
  static ScoreVector from_centered(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const ScoreVector&) const = default;

 private:
  std::vector<double> values_;
};

/// Centered vector of scale-deformation coefficients; same centering
/// convention as ScoreVector.
class ScaleVector {
 public:
  ScaleVector() = default;
  explicit ScaleVector(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  /// Max absolute coefficient.
  double max_abs() const;
  /// Sum of squared coefficients.
  double squared_norm() const;

  bool operator==(const ScaleVector&) const = default;

 private:
  std::vector<double> values_;
};

/// Strict ranking of n alternatives, listed best to worst as 0-based
/// indices. Total order over rankings (lexicographic) makes it usable as an
/// ordered map key.
class Ranking {
 public:
  Ranking() = default;
  /// Validates that order is a permutation of {0..n-1}.
  explicit Ranking(std::vector<int> best_to_worst);

  /// 0 > 1 > ... > n-1.
  static Ranking identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }

  /// positions()[item] = rank of the item (0 = best).
  std::vector<int> positions() const;

  /// 1-based display form, e.g. "3>2>1>4".
  std::string to_string() const;

  bool operator==(const Ranking&) const = default;
  auto operator<=>(const Ranking&) const = default;

 private:
  std::vector<int> order_;
};

}  // namespace rankcal
