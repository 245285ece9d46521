#pragma once

#include <vector>

namespace rankcal {

/// Square pairwise-judgment matrix with a zero diagonal. Entry (i, j) holds
/// the additive comparison of alternative i against alternative j; the
/// matrix need not be reciprocal. At least three alternatives are required
/// (scale estimation divides by n - 2 and triangle statistics need triples).
class ComparisonMatrix {
 public:
  /// Zero matrix of dimension n.
  explicit ComparisonMatrix(int n);

  /// Builds from row-major entries. Diagonal values must be zero within
  /// 1e-12; they are stored as exact zeros.
  ComparisonMatrix(int n, std::vector<double> entries);

  int size() const { return n_; }

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Off-diagonal write; setting a diagonal entry is an error.
  void set(int i, int j, double value);

  const std::vector<double>& data() const { return data_; }

  bool operator==(const ComparisonMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace rankcal
