#pragma once

#include <string>
#include <vector>

#include "medrank/dataset.hpp"
#include "medrank/ranking.hpp"
#include "medrank/score_matrix.hpp"

namespace medrank {

/// Weighted sum of the judges' tie-as-agreement score matrices: the
/// sufficient statistic for the median-ranking problem. c[i][j] is the net
/// weight preferring (or tying) i over j; unranked pairs contribute nothing.
///
/// With integer weights every cell is an integer and all derived quantities
/// (dot products, penalties) are exact; `tolerance()` is then zero.
class CombinedInput {
 public:
  CombinedInput(std::vector<std::string> labels, std::vector<double> cells,
                double total_weight, bool exact);

  int m() const { return m_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * m_ + j]; }
  double total_weight() const { return total_weight_; }
  bool exact() const { return exact_; }

  // Upper bound on any score-matrix dot product: sum of |c[i][j]|.
  double upper_bound() const { return upper_bound_; }

  double tolerance() const { return exact_ ? 0.0 : 1e-9; }
  bool eq(double a, double b) const {
    return a == b || (a > b ? a - b : b - a) <= tolerance();
  }

 private:
  int m_;
  std::vector<std::string> labels_;
  std::vector<double> cells_;
  double total_weight_;
  bool exact_;
  double upper_bound_ = 0.0;
};

CombinedInput combined_input(const RankingDataset& dataset);

// sum_ij s[i][j] * c[i][j]; the consensus problem maximizes this.
double objective_dot(const ScoreMatrix& s, const CombinedInput& ci);
double objective_dot(const Ranking& candidate, const CombinedInput& ci);

// upper_bound - dot: nonnegative, zero exactly when the candidate agrees
// with every pairwise majority signal.
double total_penalty(const ScoreMatrix& s, const CombinedInput& ci);
double total_penalty(const Ranking& candidate, const CombinedInput& ci);

// Weighted average correlation of a candidate achieving dot product `dot`.
double average_tau_x(double dot, const CombinedInput& ci);

}  // namespace medrank
