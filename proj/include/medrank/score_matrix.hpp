#pragma once

#include <cstdint>
#include <vector>

#include "medrank/ranking.hpp"

namespace medrank {

// Two pairwise scoring conventions appear in the rank-correlation literature.
// They differ only in how a tie is scored:
//   kKendall:    i ahead of j -> +1, behind -> -1, tied -> 0
//   kEmondMason: i ahead of j OR tied with j -> +1, strictly behind -> -1
// Pairs where either object is unranked score 0 in both cells under both
// conventions.
enum class ScoreConvention : std::uint8_t { kEmondMason, kKendall };

/// m x m matrix of pairwise scores in {-1, 0, +1}; diagonal is zero.
class ScoreMatrix {
 public:
  ScoreMatrix(int m, ScoreConvention convention)
      : m_(m), convention_(convention), cells_(static_cast<std::size_t>(m) * m, 0) {}

  int size() const { return m_; }
  ScoreConvention convention() const { return convention_; }

  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * m_ + j]; }
  void set(int i, int j, int value) {
    cells_[static_cast<std::size_t>(i) * m_ + j] = static_cast<std::int8_t>(value);
  }

  const std::vector<std::int8_t>& cells() const { return cells_; }

 private:
  int m_;
  ScoreConvention convention_;
  std::vector<std::int8_t> cells_;
};

ScoreMatrix score_matrix(const Ranking& r, ScoreConvention convention);

}  // namespace medrank
