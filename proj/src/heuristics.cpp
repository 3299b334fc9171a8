#include "medrank/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "medrank/metrics.hpp"
#include "medrank/rng.hpp"
#include "pair_penalties.hpp"

namespace medrank {

Ranking initial_q(const CombinedInput& ci) {
  const int m = ci.m();
  const double tol = ci.tolerance();
  std::vector<int> score(m, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool ij_pos = ci.at(i, j) > tol;
      const bool ij_neg = ci.at(i, j) < -tol;
      const bool ji_pos = ci.at(j, i) > tol;
      const bool ji_neg = ci.at(j, i) < -tol;
      if (ij_pos && ji_neg) {
        ++score[i];
      } else if (ij_neg && ji_pos) {
        ++score[j];
      } else if (ij_pos && ji_pos) {
        ++score[i];
        ++score[j];
      }
    }
  }
  std::vector<int> distinct(score);
  std::sort(distinct.begin(), distinct.end(), std::greater<int>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks(m);
  for (int i = 0; i < m; ++i) {
    const auto it = std::find(distinct.begin(), distinct.end(), score[i]);
    ranks[i] = static_cast<int>(it - distinct.begin()) + 1;
  }
  return Ranking(ci.labels(), std::move(ranks));
}

namespace {

// Dense 1..g ranks of a position-key vector, preserving order and ties.
// Keys are kept as exact integers and half-integers, so == is safe.
std::vector<int> dense_ranks(const std::vector<double>& keys) {
  std::vector<double> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), keys[i]);
    ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return ranks;
}

// One full insertion pass over `cur`; returns the updated rank vector.
std::vector<int> insertion_pass(const std::vector<int>& cur,
                                const detail::PairPenalties& tables,
                                double tol) {
  const int m = tables.m();
  const std::vector<int> order = detail::insertion_order(cur);
  std::vector<double> keys(cur.begin(), cur.end());

  for (int t = 1; t < m; ++t) {
    const int x = order[t];

    // Distinct positions held by the processed objects, best first.
    std::vector<double> buckets;
    buckets.reserve(t);
    for (int u = 0; u < t; ++u) buckets.push_back(keys[order[u]]);
    std::sort(buckets.begin(), buckets.end());
    buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
    const int b = static_cast<int>(buckets.size());

    // Penalty of the whole ranking if x sits at `key`, up to the constant
    // contribution of pairs not involving x.
    const auto move_penalty = [&](double key) {
      double pen = 0.0;
      for (int y = 0; y < m; ++y) {
        if (y == x) continue;
        if (key < keys[y]) {
          pen += tables.ahead(x, y);
        } else if (key > keys[y]) {
          pen += tables.behind(x, y);
        } else {
          pen += tables.tied(x, y);
        }
      }
      return pen;
    };

    // The object's current spot is the incumbent; scan the 2b+1 placements
    // front to back and move only on strict improvement. Keeping the
    // incumbent on ties makes every globally optimal ranking a fixed point
    // and guarantees a pass never increases the penalty.
    double best_pen = move_penalty(keys[x]);
    double best_key = keys[x];
    const auto consider = [&](double key) {
      const double pen = move_penalty(key);
      if (pen < best_pen - tol) {
        best_pen = pen;
        best_key = key;
      }
    };
    consider(buckets.front() - 0.5);
    for (int k = 0; k < b; ++k) {
      consider(buckets[k]);
      consider(k + 1 < b ? (buckets[k] + buckets[k + 1]) / 2.0
                         : buckets[k] + 0.5);
    }
    keys[x] = best_key;

    // Re-normalize so every key is again a small integer and the midpoint
    // slots above stay exactly representable.
    const std::vector<int> normalized = dense_ranks(keys);
    keys.assign(normalized.begin(), normalized.end());
  }

  std::vector<int> next(m);
  for (int i = 0; i < m; ++i) next[i] = static_cast<int>(keys[i]);
  return next;
}

}  // namespace

HeuristicResult quick(const CombinedInput& ci, const Ranking& start) {
  const Ranking aligned = align_to_labels(start, ci.labels()).canonical();
  if (!aligned.complete()) {
    throw std::invalid_argument("quick: start ranking must be complete");
  }
  const detail::PairPenalties tables(ci);
  const double tol = ci.tolerance();

  std::vector<int> cur = aligned.ranks();
  int passes = 0;
  while (true) {
    std::vector<int> next = insertion_pass(cur, tables, tol);
    ++passes;
    const bool changed = next != cur;
    cur = std::move(next);
    if (passes >= kQuickPassCap) break;
    if (passes >= 2 && !changed) break;
  }

  HeuristicResult result{Ranking(ci.labels(), std::move(cur)), 0.0, 0.0,
                         passes, aligned};
  const double dot = objective_dot(result.candidate, ci);
  result.penalty = ci.upper_bound() - dot;
  result.avg_tau_x = average_tau_x(dot, ci);
  return result;
}

HeuristicResult quick_best(const CombinedInput& ci) {
  const Ranking q = initial_q(ci);
  HeuristicResult from_q = quick(ci, q);
  HeuristicResult from_reverse = quick(ci, q.reversed());
  return from_reverse.penalty < from_q.penalty - ci.tolerance() ? from_reverse
                                                                : from_q;
}

SolutionSet fast(const CombinedInput& ci, const FastOptions& options) {
  if (options.maxiter < 1) {
    throw std::invalid_argument("fast: maxiter must be at least 1");
  }
  const auto start_time = std::chrono::steady_clock::now();
  const int m = ci.m();
  const int maxiter = options.maxiter;

  // found[k] holds iteration k's candidates (1-based; iteration 1 has two).
  std::vector<std::vector<Ranking>> found(static_cast<std::size_t>(maxiter) + 1);

  const Ranking q = initial_q(ci);
  found[1].push_back(quick(ci, q).candidate);
  found[1].push_back(quick(ci, q.reversed()).candidate);

  const auto run_iteration = [&](int iter) {
    Rng rng = Rng::stream(options.seed, static_cast<std::uint64_t>(iter));
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    rng.shuffle(perm);
    found[iter].push_back(quick(ci, Ranking(ci.labels(), perm)).candidate);
  };

  const int workers =
      std::min(std::max(options.threads, 1), std::max(maxiter - 1, 1));
  if (workers <= 1 || maxiter <= 2) {
    for (int iter = 2; iter <= maxiter; ++iter) run_iteration(iter);
  } else {
    // Each iteration has its own RNG stream and output slot, so any
    // assignment of iterations to threads produces identical results.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int iter = 2 + w; iter <= maxiter; iter += workers) {
          run_iteration(iter);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Keep every candidate attaining the best objective, in iteration order.
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& batch : found) {
    for (const auto& cand : batch) {
      best = std::max(best, objective_dot(cand, ci));
    }
  }
  std::vector<Ranking> survivors;
  for (const auto& batch : found) {
    for (const auto& cand : batch) {
      if (ci.eq(objective_dot(cand, ci), best)) survivors.push_back(cand);
    }
  }

  SolutionSet set = finalize_solution_set("fast", std::move(survivors), ci);
  set.iterations = static_cast<std::uint64_t>(maxiter);
  set.seed = options.seed;
  set.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start_time)
                       .count();
  return set;
}

SolutionSet fast(const CombinedInput& ci, int maxiter, std::uint64_t seed) {
  FastOptions options;
  options.maxiter = maxiter;
  options.seed = seed;
  return fast(ci, options);
}

}  // namespace medrank
