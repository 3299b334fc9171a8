#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medrank/experiment.hpp"

namespace medrank {

/// Structured record of one consensus run, serialized as a line-based
/// `key: value` text document. Numbers use the shortest representation that
/// round-trips exactly, so format -> parse -> format is byte-identical.
/// threads and elapsed-ms are execution metadata, serialized only when
/// present (the CLI sets them with --timings); everything else is a result,
/// so default reports are byte-identical across runs and worker counts.
struct RunReport {
  int schema = 1;
  std::string version;
  std::string algorithm;
  std::string input_digest;  // 16 hex digits of the input file bytes
  std::vector<std::string> labels;
  int rows = 0;
  double total_weight = 0.0;
  std::optional<std::uint64_t> seed;   // algorithms that consume randomness
  std::optional<int> maxiter;          // multi-start algorithms
  std::uint64_t iterations = 0;
  double objective_dot = 0.0;
  double avg_tau_x = 0.0;
  std::vector<std::vector<int>> solutions;  // canonical ranks, label order
  std::optional<int> threads;
  std::optional<double> elapsed_ms;
};

std::string format_run_report(const RunReport& report);
RunReport parse_run_report(const std::string& text);

/// Experiment results in the same key-value format: one `cell:` line per
/// (theta, replication, algorithm) outcome and `summary:` lines holding the
/// per-theta min/max/mean/median of solution counts, overlaps, and (when
/// timings are on) elapsed times.
std::string format_experiment_report(const ExperimentResult& result,
                                     bool timings);
ExperimentResult parse_experiment_report(const std::string& text);

}  // namespace medrank
