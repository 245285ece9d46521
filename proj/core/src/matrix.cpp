#include "rankcal/matrix.hpp"

#include <cmath>
#include <string>

#include "rankcal/errors.hpp"

namespace rankcal {

namespace {
constexpr double kDiagonalTol = 1e-12;
}

ComparisonMatrix::ComparisonMatrix(int n) : n_(n) {
  if (n < 3) throw DimensionError("comparison matrix needs n >= 3, got n = " + std::to_string(n));
  data_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

ComparisonMatrix::ComparisonMatrix(int n, std::vector<double> entries) : n_(n) {
  if (n < 3) throw DimensionError("comparison matrix needs n >= 3, got n = " + std::to_string(n));
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("entry count does not match dimension " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    double& d = entries[static_cast<std::size_t>(i) * n + i];
    if (std::abs(d) > kDiagonalTol)
      throw ParseError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                       ") is not zero");
    d = 0.0;
  }
  data_ = std::move(entries);
}

void ComparisonMatrix::set(int i, int j, double value) {
  if (i == j) throw DimensionError("diagonal entries are fixed to zero");
  data_[static_cast<std::size_t>(i) * n_ + j] = value;
}

}  // namespace rankcal
