#pragma once

#include <string>
#include <vector>

#include "medrank/ranking.hpp"

namespace medrank {

/// Weighted collection of rankings over one shared object set. Rows are
/// stored in canonical (dense-rank) form. Immutable after construction.
class RankingDataset {
 public:
  struct Row {
    Ranking ranking;
    double weight;
  };

  // Validates: every row over the same labels (rows given over a permuted
  // label set are realigned), weights > 0, and no object left unranked by
  // every row.
  RankingDataset(std::vector<std::string> labels, std::vector<Row> rows);

  const std::vector<std::string>& labels() const { return labels_; }
  int m() const { return static_cast<int>(labels_.size()); }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int k) const { return rows_[k]; }

  double total_weight() const { return total_weight_; }
  // True when every weight is an integer, in which case downstream
  // aggregates are exact and compared without tolerance.
  bool integer_weights() const { return integer_weights_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Row> rows_;
  double total_weight_ = 0.0;
  bool integer_weights_ = true;
};

// Convenience for tests and examples: unit-weight dataset from rank vectors.
RankingDataset make_dataset(const std::vector<std::string>& labels,
                            const std::vector<std::vector<int>>& rank_rows,
                            const std::vector<double>& weights = {});

}  // namespace medrank
