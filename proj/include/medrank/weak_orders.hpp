#pragma once

#include <string>
#include <vector>

#include "medrank/ranking.hpp"

namespace medrank {

// Guard for the enumerable range; the count is the ordered Bell number
// (1, 3, 13, 75, 541, 4683, 47293 for m = 1..7) and grows too fast beyond.
inline constexpr int kMaxEnumerableObjects = 7;

// Every complete ranking-with-ties of m objects exactly once, canonical
// form, sorted lexicographically by rank vector. 1 <= m <= 7.
std::vector<Ranking> enumerate_weak_orders(int m);
std::vector<Ranking> enumerate_weak_orders(const std::vector<std::string>& labels);

// Same enumeration as raw dense rank vectors (no label plumbing).
std::vector<std::vector<int>> enumerate_weak_order_ranks(int m);

// Closed-form estimate (1/2) (1/ln 2)^(m+1) m! of the weak-order count.
double approx_weak_order_count(int m);

}  // namespace medrank
