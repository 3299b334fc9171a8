#pragma once

#include <cstdint>

#include "medrank/combined_input.hpp"
#include "medrank/ranking.hpp"
#include "medrank/solution_set.hpp"

namespace medrank {

// Relative position of object i against object j in a candidate ranking.
enum class PairBranch : std::uint8_t { kAhead, kTied, kBehind };

// Penalty added by deciding the (i, j) pair against the net weights c_ij,
// c_ji. Closed form
//   dP = ((|c_ij| + |c_ji|) - (s_ij c_ij + s_ji c_ji)) / 2
// with (s_ij, s_ji) = (1,-1), (1,1), (-1,1) for ahead/tied/behind. Equals
// |c_ij| when that cell's sign disagrees with the branch, plus the same for
// the transposed cell, so it reproduces the classic nine strict-sign rules
// and extends them to zero cells.
double branch_penalty(double c_ij, double c_ji, PairBranch branch);

// Penalty of a complete candidate counted once per unordered pair: exactly
// (upper_bound - objective_dot) / 2, i.e. half the full-matrix penalty.
double pair_penalty_total(const Ranking& candidate, const CombinedInput& ci);

struct BbOptions {
  // Hard cap on problem size; the search tree grows as the ordered Bell
  // numbers and becomes impractical beyond ~20 objects.
  int max_objects = 20;
};

// Exhaustive branch-and-bound over all rankings-with-ties: returns every
// candidate attaining the minimum penalty (equivalently the maximum
// objective dot product). `initial` seeds both the object insertion order
// and the pruning bound; the solution set does not depend on it, only the
// running time does. Deterministic.
SolutionSet bb_solve(const CombinedInput& ci, const Ranking& initial,
                     const BbOptions& options = {});

}  // namespace medrank
