#include "medrank/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "medrank/score_matrix.hpp"

namespace medrank {

Ranking align_to_labels(const Ranking& r, const std::vector<std::string>& labels) {
  if (r.labels() == labels) return r;
  if (r.labels().size() != labels.size()) {
    throw std::invalid_argument("rankings are over different label sets");
  }
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < r.labels().size(); ++i) {
    index.emplace(r.labels()[i], static_cast<int>(i));
  }
  std::vector<int> ranks(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = index.find(labels[i]);
    if (it == index.end()) {
      throw std::invalid_argument("rankings are over different label sets");
    }
    ranks[i] = r.ranks()[it->second];
  }
  return Ranking(labels, std::move(ranks));
}

namespace {

// Score-matrix dot product over all ordered pairs.
long long matrix_dot(const ScoreMatrix& a, const ScoreMatrix& b) {
  long long dot = 0;
  const auto& ca = a.cells();
  const auto& cb = b.cells();
  for (std::size_t k = 0; k < ca.size(); ++k) {
    dot += static_cast<long long>(ca[k]) * cb[k];
  }
  return dot;
}

}  // namespace

double kemeny_distance(const Ranking& r1, const Ranking& r2) {
  const Ranking b = align_to_labels(r2, r1.labels());
  const ScoreMatrix s1 = score_matrix(r1, ScoreConvention::kKendall);
  const ScoreMatrix s2 = score_matrix(b, ScoreConvention::kKendall);
  long long total = 0;
  const int m = r1.size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // Skip pairs unranked on either side so they contribute nothing.
      if (!r1.is_ranked(i) || !r1.is_ranked(j)) continue;
      if (!b.is_ranked(i) || !b.is_ranked(j)) continue;
      total += std::abs(s1.at(i, j) - s2.at(i, j));
    }
  }
  return 0.5 * static_cast<double>(total);
}

double tau_x(const Ranking& r1, const Ranking& r2) {
  const int m = r1.size();
  if (m < 2) throw std::invalid_argument("tau_x: need at least two objects");
  const Ranking b = align_to_labels(r2, r1.labels());
  if (!r1.complete() || !b.complete()) {
    throw std::invalid_argument("tau_x: rankings must be complete");
  }
  const ScoreMatrix s1 = score_matrix(r1, ScoreConvention::kEmondMason);
  const ScoreMatrix s2 = score_matrix(b, ScoreConvention::kEmondMason);
  return static_cast<double>(matrix_dot(s1, s2)) /
         (static_cast<double>(m) * (m - 1));
}

double kendall_tau(const Ranking& r1, const Ranking& r2) {
  const int m = r1.size();
  if (m < 2) throw std::invalid_argument("kendall_tau: need at least two objects");
  const Ranking b = align_to_labels(r2, r1.labels());
  if (!r1.complete() || !b.complete()) {
    throw std::invalid_argument("kendall_tau: rankings must be complete");
  }
  const ScoreMatrix s1 = score_matrix(r1, ScoreConvention::kKendall);
  const ScoreMatrix s2 = score_matrix(b, ScoreConvention::kKendall);
  const long long n1 = matrix_dot(s1, s1);
  const long long n2 = matrix_dot(s2, s2);
  if (n1 == 0 || n2 == 0) {
    throw std::invalid_argument("kendall_tau: undefined for an all-tied ranking");
  }
  return static_cast<double>(matrix_dot(s1, s2)) /
         std::sqrt(static_cast<double>(n1) * static_cast<double>(n2));
}

double spearman_rho(const Ranking& r1, const Ranking& r2) {
  const int m = r1.size();
  if (m < 2) throw std::invalid_argument("spearman_rho: need at least two objects");
  const Ranking a = r1.canonical();
  const Ranking b = align_to_labels(r2, r1.labels()).canonical();
  if (!a.complete() || !b.complete()) {
    throw std::invalid_argument("spearman_rho: rankings must be complete");
  }
  if (a.group_count() != m || b.group_count() != m) {
    throw std::invalid_argument("spearman_rho: undefined for tied rankings");
  }
  long long sum_sq = 0;
  for (int i = 0; i < m; ++i) {
    const long long d = a.ranks()[i] - b.ranks()[i];
    sum_sq += d * d;
  }
  const double n = static_cast<double>(m);
  return 1.0 - 6.0 * static_cast<double>(sum_sq) / (n * n * n - n);
}

}  // namespace medrank
