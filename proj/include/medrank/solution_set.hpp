#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medrank/combined_input.hpp"
#include "medrank/ranking.hpp"

namespace medrank {

/// The distinct median rankings an algorithm found, with their shared
/// objective value and provenance. Solutions are canonical, pairwise
/// distinct, and sorted lexicographically by rank vector.
struct SolutionSet {
  std::string algorithm;
  std::vector<Ranking> solutions;
  double objective_dot = 0.0;
  double avg_tau_x = 0.0;
  double elapsed_ms = 0.0;
  std::uint64_t iterations = 0;
  std::optional<std::uint64_t> seed;
};

// Dedupes, sorts, and verifies that every candidate attains the same
// objective before stamping the set. Throws std::logic_error on an
// inconsistent pool (solver bug, not user error).
SolutionSet finalize_solution_set(std::string algorithm,
                                  std::vector<Ranking> candidates,
                                  const CombinedInput& ci);

}  // namespace medrank
