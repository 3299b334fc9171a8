#include "medrank/weak_orders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "medrank/errors.hpp"

namespace medrank {

namespace {

// Assign bucket `depth` to every nonempty subset of the remaining objects,
// then recurse on what's left.
void fill_buckets(int m, unsigned remaining, int depth, std::vector<int>& ranks,
                  std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(ranks);
    return;
  }
  for (unsigned subset = remaining; subset != 0; subset = (subset - 1) & remaining) {
    for (int i = 0; i < m; ++i) {
      if (subset & (1u << i)) ranks[i] = depth;
    }
    fill_buckets(m, remaining & ~subset, depth + 1, ranks, out);
    for (int i = 0; i < m; ++i) {
      if (subset & (1u << i)) ranks[i] = 0;
    }
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_weak_order_ranks(int m) {
  if (m < 1) {
    throw std::invalid_argument("weak-order enumeration needs at least one object");
  }
  if (m > kMaxEnumerableObjects) {
    throw SizeCapError("weak-order enumeration supports at most " +
                       std::to_string(kMaxEnumerableObjects) + " objects");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> ranks(m, 0);
  fill_buckets(m, (1u << m) - 1, 1, ranks, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ranking> enumerate_weak_orders(const std::vector<std::string>& labels) {
  std::vector<Ranking> out;
  for (auto& ranks : enumerate_weak_order_ranks(static_cast<int>(labels.size()))) {
    out.emplace_back(labels, std::move(ranks));
  }
  return out;
}

std::vector<Ranking> enumerate_weak_orders(int m) {
  return enumerate_weak_orders(default_labels(m));
}

double approx_weak_order_count(int m) {
  if (m < 1) throw std::invalid_argument("approx_weak_order_count: m must be >= 1");
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  return 0.5 * std::pow(1.0 / std::log(2.0), m + 1) * factorial;
}

}  // namespace medrank
