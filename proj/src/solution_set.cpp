#include "medrank/solution_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace medrank {

SolutionSet finalize_solution_set(std::string algorithm,
                                  std::vector<Ranking> candidates,
                                  const CombinedInput& ci) {
  if (candidates.empty()) {
    throw std::logic_error("solution set: empty candidate pool");
  }
  std::vector<Ranking> canon;
  canon.reserve(candidates.size());
  for (const auto& c : candidates) canon.push_back(c.canonical());
  std::sort(canon.begin(), canon.end(),
            [](const Ranking& a, const Ranking& b) { return a.ranks() < b.ranks(); });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  // Recompute the objective from first principles for every survivor.
  const double dot = objective_dot(canon.front(), ci);
  for (const auto& r : canon) {
    if (!ci.eq(objective_dot(r, ci), dot)) {
      throw std::logic_error("solution set: candidates disagree on objective value");
    }
  }

  SolutionSet set;
  set.algorithm = std::move(algorithm);
  set.solutions = std::move(canon);
  set.objective_dot = dot;
  set.avg_tau_x = average_tau_x(dot, ci);
  return set;
}

}  // namespace medrank
