#include "rankcal/uncertainty.hpp"

#include <cmath>
#include <vector>

#include "rankcal/errors.hpp"
#include "rankcal/parallel.hpp"
#include "rankcal/random.hpp"
#include "rankcal/structure.hpp"

namespace rankcal {

ScoreLaw score_law(const ScoreVector& scores, const ResidualDiagnostics& diag) {
  const int n = scores.size();
  if (n < 3) throw DimensionError("score law needs n >= 3");
  const double variance =
      (1.0 - diag.rho_hat) * diag.sigma_hat * diag.sigma_hat / (2.0 * static_cast<double>(n));
  return {scores, variance};
}

ScoreVector sample_score(const ScoreLaw& law, std::uint64_t seed, std::uint64_t index) {
  const int n = law.size();
  std::vector<double> v(n);
  if (law.noise_variance > 0.0) {
    Rng rng(derive_seed(seed, index));
    const double sd = std::sqrt(law.noise_variance);
    for (int i = 0; i < n; ++i) v[i] = sd * rng.next_gaussian();
  }
  double mean = 0.0;
  for (double z : v) mean += z;
  mean /= static_cast<double>(n);
  for (int i = 0; i < n; ++i) v[i] = law.mean[i] + (v[i] - mean);
  // Already centered by construction; recentering would perturb the
  // point-mass case away from the law mean by rounding.
  return ScoreVector::from_centered(std::move(v));
}

double RankingDistribution::probability(const Ranking& r) const {
  if (total == 0) return 0.0;
  const auto it = counts.find(r);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

double RankingDistribution::entropy_bits() const {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const auto& [r, c] : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

RankingDistribution ranking_distribution(const ScoreLaw& law, std::uint64_t samples,
                                         std::uint64_t seed, int threads) {
  struct Partial {
    std::map<Ranking, std::uint64_t> counts;
    std::uint64_t ties = 0;
  };
  const int workers = resolve_threads(threads, samples);
  std::vector<Partial> partials(workers);
  parallel_chunks(samples, workers, [&](std::uint64_t begin, std::uint64_t end, int w) {
    Partial& p = partials[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      const RankedScores rs = ranking_of(sample_score(law, seed, i));
      ++p.counts[rs.ranking];
      if (rs.tied) ++p.ties;
    }
  });
  RankingDistribution dist;
  dist.total = samples;
  dist.seed = seed;
  dist.n = law.size();
  for (const Partial& p : partials) {
    dist.tie_samples += p.ties;
    for (const auto& [r, c] : p.counts) dist.counts[r] += c;
  }
  return dist;
}

double central_region_probability(const RankingDistribution& dist, const ScoreVector& scores) {
  const RankedScores rs = ranking_of(scores);
  if (rs.tied)
    throw TieError("scores have exact ties; the central ranking region is undefined");
  return dist.probability(rs.ranking);
}

SummaryProbabilities summary_probabilities(const RankingDistribution& dist) {
  const int n = dist.n;
  SummaryProbabilities s;
  s.top1.assign(n, 0.0);
  s.top_k.assign(n, std::vector<double>(n, 0.0));
  s.precedence.assign(n, std::vector<double>(n, 0.0));
  if (dist.total == 0) return s;
  for (const auto& [ranking, count] : dist.counts) {
    const double w = static_cast<double>(count) / static_cast<double>(dist.total);
    const std::vector<int>& order = ranking.order();
    for (int rank = 0; rank < n; ++rank) {
      const int item = order[rank];
      for (int k = rank; k < n; ++k) s.top_k[k][item] += w;
      for (int later = rank + 1; later < n; ++later) s.precedence[item][order[later]] += w;
    }
  }
  s.top1 = s.top_k[0];
  s.entropy_bits = dist.entropy_bits();
  return s;
}

double tv_distance(const RankingDistribution& a, const RankingDistribution& b) {
  if (a.n != b.n) throw DimensionError("ranking distributions have different dimensions");
  double sum = 0.0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      sum += a.probability(ia->first);
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      sum += b.probability(ib->first);
      ++ib;
    } else {
      sum += std::abs(a.probability(ia->first) - b.probability(ib->first));
      ++ia;
      ++ib;
    }
  }
  return sum / 2.0;
}

}  // namespace rankcal
