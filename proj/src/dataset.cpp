#include "medrank/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "medrank/metrics.hpp"

namespace medrank {

RankingDataset::RankingDataset(std::vector<std::string> labels,
                               std::vector<Row> rows)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("dataset: no objects");
  if (rows.empty()) throw std::invalid_argument("dataset: no rankings");
  rows_.reserve(rows.size());
  std::vector<bool> ranked_somewhere(labels_.size(), false);
  for (auto& row : rows) {
    if (!(row.weight > 0.0) || !std::isfinite(row.weight)) {
      throw std::invalid_argument("dataset: weights must be positive");
    }
    Ranking aligned = align_to_labels(row.ranking, labels_).canonical();
    for (int i = 0; i < aligned.size(); ++i) {
      if (aligned.is_ranked(i)) ranked_somewhere[i] = true;
    }
    total_weight_ += row.weight;
    if (row.weight != std::floor(row.weight)) integer_weights_ = false;
    rows_.push_back(Row{std::move(aligned), row.weight});
  }
  for (std::size_t i = 0; i < ranked_somewhere.size(); ++i) {
    if (!ranked_somewhere[i]) {
      throw std::invalid_argument("dataset: object '" + labels_[i] +
                                  "' is unranked in every row");
    }
  }
}

RankingDataset make_dataset(const std::vector<std::string>& labels,
                            const std::vector<std::vector<int>>& rank_rows,
                            const std::vector<double>& weights) {
  std::vector<RankingDataset::Row> rows;
  rows.reserve(rank_rows.size());
  for (std::size_t k = 0; k < rank_rows.size(); ++k) {
    const double w = weights.empty() ? 1.0 : weights.at(k);
    rows.push_back({Ranking(labels, rank_rows[k]), w});
  }
  return RankingDataset(labels, std::move(rows));
}

}  // namespace medrank
