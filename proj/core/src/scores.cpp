#include "rankcal/scores.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankcal/errors.hpp"

namespace rankcal {

namespace {

void center(std::vector<double>& v) {
  if (v.empty()) return;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

ScoreVector::ScoreVector(std::vector<double> values) : values_(std::move(values)) {
  center(values_);
}

ScoreVector ScoreVector::from_centered(std::vector<double> values) {
  ScoreVector v;
  v.values_ = std::move(values);
  return v;
}

ScaleVector::ScaleVector(std::vector<double> values) : values_(std::move(values)) {
  center(values_);
}

double ScaleVector::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

double ScaleVector::squared_norm() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s;
}

Ranking::Ranking(std::vector<int> best_to_worst) : order_(std::move(best_to_worst)) {
  const int n = static_cast<int>(order_.size());
  std::vector<bool> seen(n, false);
  for (int item : order_) {
    if (item < 0 || item >= n || seen[item])
      throw DimensionError("ranking is not a permutation of {0..n-1}");
    seen[item] = true;
  }
}

Ranking Ranking::identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

std::vector<int> Ranking::positions() const {
  std::vector<int> pos(order_.size());
  for (int rank = 0; rank < size(); ++rank) pos[order_[rank]] = rank;
  return pos;
}

std::string Ranking::to_string() const {
  std::string out;
  for (int rank = 0; rank < size(); ++rank) {
    if (rank > 0) out += '>';
    out += std::to_string(order_[rank] + 1);
  }
  return out;
}

}  // namespace rankcal
