#include "medrank/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "medrank/branch_bound.hpp"
#include "medrank/combined_input.hpp"
#include "medrank/heuristics.hpp"
#include "medrank/rng.hpp"
#include "medrank/weak_orders.hpp"

namespace medrank {

namespace {

std::vector<int> identity_ranks(int m) {
  std::vector<int> ranks(m);
  std::iota(ranks.begin(), ranks.end(), 1);
  return ranks;
}

int shared_solutions(const SolutionSet& a, const SolutionSet& bb) {
  std::set<std::vector<int>> bb_ranks;
  for (const auto& s : bb.solutions) bb_ranks.insert(s.ranks());
  int shared = 0;
  for (const auto& s : a.solutions) shared += bb_ranks.count(s.ranks()) ? 1 : 0;
  return shared;
}

}  // namespace

SummaryStats summarize(std::vector<double> values) {
  SummaryStats stats;
  if (values.empty()) return stats;
  std::sort(values.begin(), values.end());
  stats.min = values.front();
  stats.max = values.back();
  stats.mean = std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
  const std::size_t h = values.size() / 2;
  stats.median = values.size() % 2 ? values[h] : (values[h - 1] + values[h]) / 2.0;
  return stats;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.m < 2 || config.m > kMaxEnumerableObjects) {
    throw std::invalid_argument("experiment: m must lie in the enumerable range");
  }
  if (config.replications < 1 || config.sample_size < 1) {
    throw std::invalid_argument("experiment: need positive replications and sample size");
  }
  for (const auto& algo : config.algorithms) {
    if (algo != "bb" && algo != "quick" && algo != "fast") {
      throw std::invalid_argument("experiment: unknown algorithm " + algo);
    }
  }

  const Ranking consensus(default_labels(config.m), identity_ranks(config.m));
  ExperimentResult result;
  result.config = config;

  for (std::size_t ti = 0; ti < config.thetas.size(); ++ti) {
    for (int rep = 0; rep < config.replications; ++rep) {
      // One stream per cell: sampling and the fast seed both derive from it,
      // so cells are independent of each other and of execution order.
      const std::uint64_t cell_index =
          ti * static_cast<std::uint64_t>(config.replications) + rep;
      Rng cell_rng = Rng::stream(config.seed, cell_index);
      const std::uint64_t sample_seed = cell_rng.next_u64();
      const std::uint64_t fast_seed = cell_rng.next_u64();

      ModelSpec spec{consensus, config.thetas[ti], config.space};
      const RankingDataset data = sample(spec, config.sample_size, sample_seed);
      const CombinedInput ci = combined_input(data);

      ExperimentCell cell;
      cell.theta = config.thetas[ti];
      cell.replication = rep + 1;

      SolutionSet bb_set;
      bool have_bb = false;
      // Run bb first (regardless of listing order) so overlaps can be
      // counted for the heuristics.
      if (std::count(config.algorithms.begin(), config.algorithms.end(), "bb")) {
        bb_set = bb_solve(ci, initial_q(ci), BbOptions{});
        have_bb = true;
      }

      for (const auto& algo : config.algorithms) {
        AlgorithmOutcome out;
        out.algorithm = algo;
        SolutionSet set;
        if (algo == "bb") {
          set = bb_set;
        } else if (algo == "quick") {
          const auto t0 = std::chrono::steady_clock::now();
          const HeuristicResult best = quick_best(ci);
          set = finalize_solution_set("quick", {best.candidate}, ci);
          set.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        } else {
          FastOptions fopt;
          fopt.maxiter = config.fast_maxiter;
          fopt.seed = fast_seed;
          fopt.threads = config.threads;
          set = fast(ci, fopt);
        }
        out.solution_count = static_cast<int>(set.solutions.size());
        out.objective_dot = set.objective_dot;
        out.avg_tau_x = set.avg_tau_x;
        out.elapsed_ms = set.elapsed_ms;
        out.overlap_with_bb = have_bb ? shared_solutions(set, bb_set) : -1;
        cell.outcomes.push_back(std::move(out));
      }
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

}  // namespace medrank
