#include "medrank/combined_input.hpp"

#include <cmath>
#include <stdexcept>

#include "medrank/metrics.hpp"

namespace medrank {

CombinedInput::CombinedInput(std::vector<std::string> labels,
                             std::vector<double> cells, double total_weight,
                             bool exact)
    : m_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      cells_(std::move(cells)),
      total_weight_(total_weight),
      exact_(exact) {
  if (cells_.size() != static_cast<std::size_t>(m_) * m_) {
    throw std::invalid_argument("combined input: cell count != m*m");
  }
  if (!(total_weight_ > 0.0)) {
    throw std::invalid_argument("combined input: total weight must be positive");
  }
  for (int i = 0; i < m_; ++i) {
    if (at(i, i) != 0.0) {
      throw std::invalid_argument("combined input: diagonal must be zero");
    }
  }
  for (double c : cells_) upper_bound_ += std::abs(c);
}

CombinedInput combined_input(const RankingDataset& dataset) {
  const int m = dataset.m();
  std::vector<double> cells(static_cast<std::size_t>(m) * m, 0.0);
  for (const auto& row : dataset.rows()) {
    const ScoreMatrix s = score_matrix(row.ranking, ScoreConvention::kEmondMason);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        cells[static_cast<std::size_t>(i) * m + j] += row.weight * s.at(i, j);
      }
    }
  }
  return CombinedInput(dataset.labels(), std::move(cells),
                       dataset.total_weight(), dataset.integer_weights());
}

double objective_dot(const ScoreMatrix& s, const CombinedInput& ci) {
  if (s.size() != ci.m()) {
    throw std::invalid_argument("objective: score matrix and combined input sizes differ");
  }
  double dot = 0.0;
  for (int i = 0; i < ci.m(); ++i) {
    for (int j = 0; j < ci.m(); ++j) {
      dot += s.at(i, j) * ci.at(i, j);
    }
  }
  return dot;
}

double objective_dot(const Ranking& candidate, const CombinedInput& ci) {
  const Ranking aligned = align_to_labels(candidate, ci.labels());
  return objective_dot(score_matrix(aligned, ScoreConvention::kEmondMason), ci);
}

double total_penalty(const ScoreMatrix& s, const CombinedInput& ci) {
  return ci.upper_bound() - objective_dot(s, ci);
}

double total_penalty(const Ranking& candidate, const CombinedInput& ci) {
  return ci.upper_bound() - objective_dot(candidate, ci);
}

double average_tau_x(double dot, const CombinedInput& ci) {
  const double m = ci.m();
  return dot / (ci.total_weight() * m * (m - 1.0));
}

}  // namespace medrank
