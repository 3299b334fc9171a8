#pragma once

#include <string>
#include <vector>

#include "medrank/dataset.hpp"
#include "medrank/ranking.hpp"

namespace medrank {

struct BordaResult {
  std::vector<double> totals;  // weighted rank total per object, label order
  Ranking consensus;           // ascending total; equal totals tie
};

// Method of marks: rank objects by their weighted total rank. Requires
// complete rankings (ties contribute their dense rank value as-is).
BordaResult borda(const RankingDataset& dataset);

/// Pairwise support: entry (i, j) is the total weight of judges strictly
/// preferring i to j. Rows with either object unranked contribute nothing.
class SupportMatrix {
 public:
  SupportMatrix(std::vector<std::string> labels, std::vector<double> cells,
                bool exact);

  int m() const { return m_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * m_ + j]; }
  bool exact() const { return exact_; }
  bool eq(double a, double b) const {
    return a == b || (a > b ? a - b : b - a) <= (exact_ ? 0.0 : 1e-9);
  }

 private:
  int m_;
  std::vector<std::string> labels_;
  std::vector<double> cells_;
  bool exact_;
};

SupportMatrix condorcet_support(const RankingDataset& dataset);

// Majority rule over all pairwise comparisons. Succeeds when "at least as
// much support" is transitive, returning the induced ranking with exact
// equal-support pairs tied; otherwise throws CycleError (the paradox of
// voting covers both a strict-majority cycle and a tie pattern no ranking
// can express).
Ranking condorcet_consensus(const SupportMatrix& support);

}  // namespace medrank
