#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "medrank/model.hpp"
#include "medrank/solution_set.hpp"

namespace medrank {

/// One algorithm's outcome on one simulated dataset.
struct AlgorithmOutcome {
  std::string algorithm;
  int solution_count = 0;
  double objective_dot = 0.0;
  double avg_tau_x = 0.0;
  double elapsed_ms = 0.0;
  // Solutions shared with the exact solver's set; -1 when bb did not run.
  int overlap_with_bb = -1;
};

/// One simulated dataset = one (theta, replication) cell.
struct ExperimentCell {
  double theta = 0.0;
  int replication = 0;
  std::vector<AlgorithmOutcome> outcomes;  // in config algorithm order
};

struct ExperimentConfig {
  int m = 4;
  RankingSpace space = RankingSpace::kFull;
  std::vector<double> thetas = {0.7, 0.4, 0.1};
  int sample_size = 200;
  int replications = 10;
  std::vector<std::string> algorithms = {"bb", "quick", "fast"};
  std::uint64_t seed = 0;
  int fast_maxiter = 100;
  int threads = 1;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentCell> cells;  // theta-major, replication-minor
};

/// Samples `replications` datasets per theta level around the identity
/// consensus and runs each configured algorithm on each dataset. Every cell
/// draws from its own seed stream, so results do not depend on execution
/// order. Timing covers the solver call only.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// min / max / mean / median of a sample (empty input -> all zeros).
struct SummaryStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
};
SummaryStats summarize(std::vector<double> values);

}  // namespace medrank
