#include "medrank/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "medrank/errors.hpp"

namespace medrank {

BordaResult borda(const RankingDataset& dataset) {
  const int m = dataset.m();
  std::vector<double> totals(m, 0.0);
  for (const auto& row : dataset.rows()) {
    if (!row.ranking.complete()) {
      throw std::invalid_argument("borda: requires complete rankings");
    }
    for (int i = 0; i < m; ++i) {
      totals[i] += row.weight * row.ranking.ranks()[i];
    }
  }
  // Ascending total -> better rank; equal totals tie.
  const double tol = dataset.integer_weights() ? 0.0 : 1e-9;
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return totals[a] < totals[b]; });
  std::vector<int> ranks(m, 0);
  int next_rank = 0;
  for (int k = 0; k < m; ++k) {
    if (k == 0 || totals[order[k]] - totals[order[k - 1]] > tol) ++next_rank;
    ranks[order[k]] = next_rank;
  }
  return BordaResult{std::move(totals), Ranking(dataset.labels(), std::move(ranks))};
}

SupportMatrix::SupportMatrix(std::vector<std::string> labels,
                             std::vector<double> cells, bool exact)
    : m_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      cells_(std::move(cells)),
      exact_(exact) {
  if (cells_.size() != static_cast<std::size_t>(m_) * m_) {
    throw std::invalid_argument("support matrix: cell count != m*m");
  }
  for (int i = 0; i < m_; ++i) {
    if (at(i, i) != 0.0) {
      throw std::invalid_argument("support matrix: diagonal must be zero");
    }
  }
}

SupportMatrix condorcet_support(const RankingDataset& dataset) {
  const int m = dataset.m();
  std::vector<double> cells(static_cast<std::size_t>(m) * m, 0.0);
  for (const auto& row : dataset.rows()) {
    const auto& ranks = row.ranking.ranks();
    for (int i = 0; i < m; ++i) {
      if (ranks[i] == Ranking::kUnranked) continue;
      for (int j = 0; j < m; ++j) {
        if (j == i || ranks[j] == Ranking::kUnranked) continue;
        if (ranks[i] < ranks[j]) {
          cells[static_cast<std::size_t>(i) * m + j] += row.weight;
        }
      }
    }
  }
  return SupportMatrix(dataset.labels(), std::move(cells),
                       dataset.integer_weights());
}

Ranking condorcet_consensus(const SupportMatrix& support) {
  const int m = support.m();
  // weak(i, j): i draws at least as much support as j against it.
  const auto weak = [&](int i, int j) {
    return support.at(i, j) > support.at(j, i) ||
           support.eq(support.at(i, j), support.at(j, i));
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !weak(i, j)) continue;
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        if (weak(j, k) && !weak(i, k)) {
          throw CycleError("condorcet: intransitive majority preferences");
        }
      }
    }
  }
  // Transitive total preorder: strict-win counts induce the ranking.
  std::vector<int> wins(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && weak(i, j) && !weak(j, i)) ++wins[i];
    }
  }
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return wins[a] > wins[b]; });
  std::vector<int> ranks(m, 0);
  int next_rank = 0;
  for (int k = 0; k < m; ++k) {
    if (k == 0 || wins[order[k]] != wins[order[k - 1]]) ++next_rank;
    ranks[order[k]] = next_rank;
  }
  return Ranking(support.labels(), std::move(ranks));
}

}  // namespace medrank
