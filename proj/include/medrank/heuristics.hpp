#pragma once

#include <cstdint>

#include "medrank/combined_input.hpp"
#include "medrank/ranking.hpp"
#include "medrank/solution_set.hpp"

namespace medrank {

/// First guess at the median ranking, read straight off the combined input:
/// each object scores one point per pairwise comparison it wins outright,
/// plus one when both directions carry positive weight (a tie counts for
/// both sides). Objects are ordered by descending score, equal scores tied.
Ranking initial_q(const CombinedInput& ci);

/// Outcome of a single insertion-heuristic run.
struct HeuristicResult {
  Ranking candidate;   // complete, canonical
  double penalty = 0.0;   // upper_bound - objective dot of the candidate
  double avg_tau_x = 0.0;
  int passes = 0;
  Ranking start;       // the (aligned, canonical) starting ranking
};

/// Hard ceiling on insertion passes; in practice a fixed point is reached in
/// a handful of passes.
inline constexpr int kQuickPassCap = 25;

/// Single-start insertion heuristic. Objects are visited in start order
/// (best rank first, ties by label position); each visit re-places the
/// object in every position relative to the already-processed objects --
/// strictly between consecutive groups, tied with a group, or at either end
/// -- and keeps the placement with the smallest total penalty over the whole
/// ranking, first minimum winning. The object's current spot is always
/// evaluated too and kept unless a move strictly improves, so the penalty
/// never increases. Passes repeat from the updated candidate until a fixed
/// point (at least two passes, at most kQuickPassCap).
///
/// `start` must be complete over the CI labels.
HeuristicResult quick(const CombinedInput& ci, const Ranking& start);

/// Best of quick from initial_q and from its reverse; the initial_q result
/// wins ties. This is the standalone flavor the command line exposes.
HeuristicResult quick_best(const CombinedInput& ci);

struct FastOptions {
  int maxiter = 100;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Multi-start wrapper around quick. Iteration 1 runs quick from initial_q
/// and from its reverse; iterations 2..maxiter run from seeded uniform
/// random tie-free permutations. Every distinct candidate attaining the best
/// objective across all runs is returned.
///
/// Each iteration draws from its own RNG stream derived from
/// (seed, iteration), so the result is identical for any thread count.
SolutionSet fast(const CombinedInput& ci, const FastOptions& options);
SolutionSet fast(const CombinedInput& ci, int maxiter, std::uint64_t seed);

}  // namespace medrank
