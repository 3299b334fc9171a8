#include "medrank/score_matrix.hpp"

namespace medrank {

ScoreMatrix score_matrix(const Ranking& r, ScoreConvention convention) {
  const int m = r.size();
  ScoreMatrix s(m, convention);
  const std::vector<int>& ranks = r.ranks();
  for (int i = 0; i < m; ++i) {
    if (ranks[i] == Ranking::kUnranked) continue;
    for (int j = 0; j < m; ++j) {
      if (j == i || ranks[j] == Ranking::kUnranked) continue;
      if (ranks[i] < ranks[j]) {
        s.set(i, j, 1);
      } else if (ranks[i] > ranks[j]) {
        s.set(i, j, -1);
      } else {
        s.set(i, j, convention == ScoreConvention::kEmondMason ? 1 : 0);
      }
    }
  }
  return s;
}

}  // namespace medrank
