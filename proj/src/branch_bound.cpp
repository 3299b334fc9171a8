#include "medrank/branch_bound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "medrank/errors.hpp"
#include "medrank/metrics.hpp"
#include "pair_penalties.hpp"

namespace medrank {

double branch_penalty(double c_ij, double c_ji, PairBranch branch) {
  double s_ij = 0.0;
  double s_ji = 0.0;
  switch (branch) {
    case PairBranch::kAhead:
      s_ij = 1.0;
      s_ji = -1.0;
      break;
    case PairBranch::kTied:
      s_ij = 1.0;
      s_ji = 1.0;
      break;
    case PairBranch::kBehind:
      s_ij = -1.0;
      s_ji = 1.0;
      break;
  }
  return 0.5 * ((std::abs(c_ij) + std::abs(c_ji)) - (s_ij * c_ij + s_ji * c_ji));
}

double pair_penalty_total(const Ranking& candidate, const CombinedInput& ci) {
  const Ranking aligned = align_to_labels(candidate, ci.labels());
  if (!aligned.complete()) {
    throw std::invalid_argument("pair penalty: candidate must be complete");
  }
  const auto& ranks = aligned.ranks();
  double total = 0.0;
  for (int i = 0; i < ci.m(); ++i) {
    for (int j = i + 1; j < ci.m(); ++j) {
      PairBranch branch = PairBranch::kTied;
      if (ranks[i] < ranks[j]) branch = PairBranch::kAhead;
      if (ranks[i] > ranks[j]) branch = PairBranch::kBehind;
      total += branch_penalty(ci.at(i, j), ci.at(j, i), branch);
    }
  }
  return total;
}

namespace detail {

std::vector<int> insertion_order(const std::vector<int>& ranks) {
  std::vector<int> order(ranks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ranks[a] < ranks[b]; });
  return order;
}

namespace {

// Depth-first exhaustive search. Objects enter in `order`; a node holds a
// weak order over the first t of them as a bucket sequence (best bucket
// first). Every weak order over the prefix arises from exactly one
// insertion path, so leaves are distinct candidates.
class BbSearch {
 public:
  BbSearch(const CombinedInput& ci, const std::vector<int>& order, double bound)
      : tables_(ci),
        order_(order),
        m_(ci.m()),
        tol_(ci.tolerance()),
        bound_(bound) {}

  void run() {
    buckets_.reserve(m_);
    expand(0, 0.0);
  }

  const std::vector<std::vector<int>>& pool() const { return pool_; }
  double best_penalty() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void record_leaf(double acc) {
    if (acc < best_ - tol_) {
      pool_.clear();
      best_ = acc;
      if (best_ < bound_) bound_ = best_;
    } else if (acc > best_ + tol_) {
      return;
    }
    std::vector<int> ranks(m_, 0);
    for (std::size_t b = 0; b < buckets_.size(); ++b) {
      for (int obj : buckets_[b]) ranks[obj] = static_cast<int>(b) + 1;
    }
    pool_.push_back(std::move(ranks));
  }

  void expand(int t, double acc) {
    ++nodes_;
    if (t == m_) {
      record_leaf(acc);
      return;
    }
    const int x = order_[t];
    const int b = static_cast<int>(buckets_.size());

    // Per-bucket penalty sums for the three relations of x to its members.
    sum_ahead_.assign(b, 0.0);
    sum_tied_.assign(b, 0.0);
    sum_behind_.assign(b, 0.0);
    for (int k = 0; k < b; ++k) {
      for (int y : buckets_[k]) {
        sum_ahead_[k] += tables_.ahead(x, y);
        sum_tied_[k] += tables_.tied(x, y);
        sum_behind_[k] += tables_.behind(x, y);
      }
    }
    // pref_behind[p] = penalty of x placed below buckets 1..p;
    // suff_ahead[p] = penalty of x placed above buckets p+1..b.
    pref_behind_.assign(b + 1, 0.0);
    suff_ahead_.assign(b + 1, 0.0);
    for (int k = 0; k < b; ++k) {
      pref_behind_[k + 1] = pref_behind_[k] + sum_behind_[k];
    }
    for (int k = b - 1; k >= 0; --k) {
      suff_ahead_[k] = suff_ahead_[k + 1] + sum_ahead_[k];
    }

    // Stack copies: the recursion reuses the scratch vectors above.
    const std::vector<double> pref = pref_behind_;
    const std::vector<double> suff = suff_ahead_;
    std::vector<double> tied(sum_tied_);

    // Scan positions bottom-up: strictly after everything, then alternating
    // tie / strictly-above per bucket, ending strictly first.
    for (int p = b; p >= 0; --p) {
      const double d_strict = pref[p] + suff[p];
      if (acc + d_strict <= bound_ + tol_) {
        buckets_.insert(buckets_.begin() + p, std::vector<int>{x});
        expand(t + 1, acc + d_strict);
        buckets_.erase(buckets_.begin() + p);
      }
      if (p >= 1) {
        const double d_tied = pref[p - 1] + tied[p - 1] + suff[p];
        if (acc + d_tied <= bound_ + tol_) {
          buckets_[p - 1].push_back(x);
          expand(t + 1, acc + d_tied);
          buckets_[p - 1].pop_back();
        }
      }
    }
  }

  PairPenalties tables_;
  const std::vector<int>& order_;
  int m_;
  double tol_;
  double bound_;
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> buckets_;
  std::vector<std::vector<int>> pool_;
  std::uint64_t nodes_ = 0;
  std::vector<double> sum_ahead_, sum_tied_, sum_behind_;
  std::vector<double> pref_behind_, suff_ahead_;
};

}  // namespace
}  // namespace detail

SolutionSet bb_solve(const CombinedInput& ci, const Ranking& initial,
                     const BbOptions& options) {
  if (ci.m() < 2) {
    throw std::invalid_argument("bb_solve: need at least two objects");
  }
  if (ci.m() > options.max_objects) {
    throw SizeCapError("bb_solve: " + std::to_string(ci.m()) +
                       " objects exceeds the cap of " +
                       std::to_string(options.max_objects));
  }
  const Ranking aligned = align_to_labels(initial, ci.labels()).canonical();
  if (!aligned.complete()) {
    throw std::invalid_argument("bb_solve: initial ranking must be complete");
  }

  const auto start = std::chrono::steady_clock::now();
  const double incumbent = pair_penalty_total(aligned, ci);
  const std::vector<int> order = detail::insertion_order(aligned.ranks());
  detail::BbSearch search(ci, order, incumbent);
  search.run();

  std::vector<Ranking> candidates;
  candidates.reserve(search.pool().size());
  for (const auto& ranks : search.pool()) {
    candidates.emplace_back(ci.labels(), ranks);
  }
  SolutionSet set = finalize_solution_set("bb", std::move(candidates), ci);
  set.iterations = search.nodes();
  set.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return set;
}

}  // namespace medrank
