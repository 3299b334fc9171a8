#pragma once

#include <vector>

#include "medrank/branch_bound.hpp"
#include "medrank/combined_input.hpp"

namespace medrank::detail {

// Per-pair penalty lookup for the three relative positions, precomputed from
// the combined input so solver inner loops are plain table sums.
class PairPenalties {
 public:
  explicit PairPenalties(const CombinedInput& ci) : m_(ci.m()) {
    const std::size_t n = static_cast<std::size_t>(m_) * m_;
    ahead_.resize(n);
    tied_.resize(n);
    behind_.resize(n);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (i == j) continue;
        const std::size_t k = static_cast<std::size_t>(i) * m_ + j;
        ahead_[k] = branch_penalty(ci.at(i, j), ci.at(j, i), PairBranch::kAhead);
        tied_[k] = branch_penalty(ci.at(i, j), ci.at(j, i), PairBranch::kTied);
        behind_[k] = branch_penalty(ci.at(i, j), ci.at(j, i), PairBranch::kBehind);
      }
    }
  }

  int m() const { return m_; }
  double ahead(int i, int j) const { return ahead_[static_cast<std::size_t>(i) * m_ + j]; }
  double tied(int i, int j) const { return tied_[static_cast<std::size_t>(i) * m_ + j]; }
  double behind(int i, int j) const { return behind_[static_cast<std::size_t>(i) * m_ + j]; }

 private:
  int m_;
  std::vector<double> ahead_;
  std::vector<double> tied_;
  std::vector<double> behind_;
};

// Objects in ranking order (best first), ties broken by index.
std::vector<int> insertion_order(const std::vector<int>& ranks);

}  // namespace medrank::detail
