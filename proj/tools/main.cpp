// medrank: consensus (median) rankings from weighted preference data.
//
// Subcommands: consensus (exact and heuristic solvers), metrics (rank
// correlation and distance between two rankings), simulate (distance-based
// ranking sampler), bench (algorithm-comparison experiments), enumerate
// (ranking-space counts).
//
// Exit codes: 0 success, 1 usage error, 2 data/config error, 4 size cap.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "medrank/branch_bound.hpp"
#include "medrank/classical.hpp"
#include "medrank/combined_input.hpp"
#include "medrank/errors.hpp"
#include "medrank/experiment.hpp"
#include "medrank/heuristics.hpp"
#include "medrank/io.hpp"
#include "medrank/metrics.hpp"
#include "medrank/model.hpp"
#include "medrank/report.hpp"
#include "medrank/version.hpp"
#include "medrank/weak_orders.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSizeCap = 4;

int env_threads() {
  const char* value = std::getenv("MEDRANK_THREADS");
  if (!value) return 1;
  const int parsed = std::atoi(value);
  return parsed >= 1 ? parsed : 1;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct ConsensusArgs {
  std::string input;
  std::string algorithm;
  int maxiter = 100;
  std::uint64_t seed = 0;
  bool fidelity_init = false;
  std::string output;
  bool timings = false;
};

int run_consensus(const ConsensusArgs& args, int threads) {
  const std::string raw = medrank::read_file(args.input);
  const medrank::RankingDataset dataset = medrank::parse_dataset_text(raw);
  const medrank::CombinedInput ci = medrank::combined_input(dataset);

  medrank::SolutionSet set;
  if (args.algorithm == "bb") {
    const medrank::Ranking initial = args.fidelity_init
                                         ? medrank::initial_q(ci)
                                         : medrank::quick_best(ci).candidate;
    set = medrank::bb_solve(ci, initial, medrank::BbOptions{});
  } else if (args.algorithm == "quick") {
    const auto t0 = std::chrono::steady_clock::now();
    const medrank::HeuristicResult best = medrank::quick_best(ci);
    set = medrank::finalize_solution_set("quick", {best.candidate}, ci);
    set.iterations = static_cast<std::uint64_t>(best.passes);
    set.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  } else {
    medrank::FastOptions options;
    options.maxiter = args.maxiter;
    options.seed = args.seed;
    options.threads = threads;
    set = medrank::fast(ci, options);
  }

  medrank::RunReport report;
  report.version = medrank::kVersion;
  report.algorithm = set.algorithm;
  report.input_digest = medrank::digest_hex(raw);
  report.labels = dataset.labels();
  report.rows = dataset.size();
  report.total_weight = dataset.total_weight();
  report.seed = set.seed;
  if (args.algorithm == "fast") report.maxiter = args.maxiter;
  report.iterations = set.iterations;
  report.objective_dot = set.objective_dot;
  report.avg_tau_x = set.avg_tau_x;
  for (const auto& solution : set.solutions) {
    report.solutions.push_back(solution.ranks());
  }
  // Execution metadata: opt-in, so default reports stay byte-identical
  // across runs, machines, and worker counts.
  if (args.timings) {
    if (args.algorithm == "fast") report.threads = threads;
    report.elapsed_ms = set.elapsed_ms;
  }

  const std::string text = medrank::format_run_report(report);
  if (args.output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    medrank::atomic_write_file(args.output, text);
    std::printf("%s: %zu solution(s), avg tau_x %s, %.3f ms -> %s\n",
                set.algorithm.c_str(), set.solutions.size(),
                fmt_double(set.avg_tau_x).c_str(), set.elapsed_ms,
                args.output.c_str());
    for (const auto& solution : set.solutions) {
      std::printf("  %s\n", solution.to_ordering_string().c_str());
    }
  }
  return kExitOk;
}

struct MetricsArgs {
  std::string r1;
  std::string r2;
  std::string labels;
};

int run_metrics(const MetricsArgs& args) {
  std::vector<std::string> labels;
  if (!args.labels.empty()) {
    std::stringstream ss(args.labels);
    std::string token;
    while (ss >> token) labels.push_back(token);
  }
  const medrank::Ranking r1 = medrank::parse_ranking(args.r1, labels);
  const medrank::Ranking r2 = medrank::parse_ranking(args.r2, labels);

  std::printf("kemeny: %s\n",
              fmt_double(medrank::kemeny_distance(r1, r2)).c_str());
  const auto print_if_defined = [&](const char* name, auto metric) {
    try {
      std::printf("%s: %s\n", name, fmt_double(metric(r1, r2)).c_str());
    } catch (const std::invalid_argument&) {
      // undefined for this pair (ties, incompleteness); omit the line
    }
  };
  print_if_defined("tau_x", [](const auto& a, const auto& b) {
    return medrank::tau_x(a, b);
  });
  print_if_defined("kendall", [](const auto& a, const auto& b) {
    return medrank::kendall_tau(a, b);
  });
  print_if_defined("spearman", [](const auto& a, const auto& b) {
    return medrank::spearman_rho(a, b);
  });
  return kExitOk;
}

struct SimulateArgs {
  int m = 4;
  double theta = 0.0;
  int n = 200;
  std::uint64_t seed = 0;
  std::string space = "full";
  std::string consensus;
  int pick = 0;
  std::string out;
};

int run_simulate(const SimulateArgs& args) {
  medrank::RankingDataset dataset = [&] {
    if (args.pick > 0) {
      return medrank::sample_incomplete(args.m, args.pick, args.seed);
    }
    const medrank::Ranking consensus = [&] {
      if (!args.consensus.empty()) {
        return medrank::parse_ranking(args.consensus,
                                      medrank::default_labels(args.m));
      }
      std::vector<int> ranks(args.m);
      for (int i = 0; i < args.m; ++i) ranks[i] = i + 1;
      return medrank::Ranking(medrank::default_labels(args.m), ranks);
    }();
    const medrank::ModelSpec spec{
        consensus, args.theta,
        args.space == "weak" ? medrank::RankingSpace::kWeak
                             : medrank::RankingSpace::kFull};
    return medrank::sample(spec, args.n, args.seed);
  }();

  medrank::write_dataset(dataset, args.out);
  std::printf("wrote %d rows over %d objects (total weight %s) -> %s\n",
              dataset.size(), dataset.m(),
              fmt_double(dataset.total_weight()).c_str(), args.out.c_str());
  return kExitOk;
}

struct BenchArgs {
  std::string config;
  std::string output;
  bool timings = false;
};

medrank::ExperimentConfig parse_experiment_config(const std::string& text) {
  medrank::ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    const std::size_t start = stripped.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    stripped = stripped.substr(start);
    if (stripped[0] == '#') continue;
    const std::size_t colon = stripped.find(':');
    if (colon == std::string::npos) {
      throw medrank::ParseError("config: expected 'key: value' at line " +
                                    std::to_string(line_no),
                                line_no);
    }
    const std::string key = stripped.substr(0, colon);
    std::stringstream value(stripped.substr(colon + 1));
    if (key == "m") {
      value >> cfg.m;
    } else if (key == "space") {
      std::string token;
      value >> token;
      if (token != "full" && token != "weak") {
        throw medrank::ParseError("config: space must be full or weak",
                                  line_no);
      }
      cfg.space = token == "weak" ? medrank::RankingSpace::kWeak
                                  : medrank::RankingSpace::kFull;
    } else if (key == "thetas") {
      cfg.thetas.clear();
      double theta = 0.0;
      while (value >> theta) cfg.thetas.push_back(theta);
    } else if (key == "sample-size") {
      value >> cfg.sample_size;
    } else if (key == "replications") {
      value >> cfg.replications;
    } else if (key == "algorithms") {
      cfg.algorithms.clear();
      std::string token;
      while (value >> token) cfg.algorithms.push_back(token);
    } else if (key == "seed") {
      value >> cfg.seed;
    } else if (key == "fast-maxiter") {
      value >> cfg.fast_maxiter;
    } else {
      throw medrank::ParseError("config: unknown key '" + key + "'", line_no);
    }
    if (value.fail() && key != "thetas" && key != "algorithms") {
      throw medrank::ParseError("config: bad value for '" + key + "'",
                                line_no);
    }
  }
  return cfg;
}

int run_bench(const BenchArgs& args, int threads) {
  medrank::ExperimentConfig cfg =
      parse_experiment_config(medrank::read_file(args.config));
  cfg.threads = threads;
  const medrank::ExperimentResult result = medrank::run_experiment(cfg);
  const std::string text =
      medrank::format_experiment_report(result, args.timings);
  if (args.output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    medrank::atomic_write_file(args.output, text);
    std::printf("experiment: %zu cells -> %s\n", result.cells.size(),
                args.output.c_str());
  }
  return kExitOk;
}

struct EnumerateArgs {
  int m = 4;
  bool list = false;
};

int run_enumerate(const EnumerateArgs& args) {
  const auto orders = medrank::enumerate_weak_orders(args.m);
  std::printf("objects: %d\n", args.m);
  std::printf("weak-orders: %zu\n", orders.size());
  std::printf("approx: %s\n",
              fmt_double(medrank::approx_weak_order_count(args.m)).c_str());
  if (args.list) {
    for (const auto& ranking : orders) {
      std::printf("%s\n", ranking.to_rank_string().c_str());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median-ranking toolkit (exact branch-and-bound and "
               "multi-start insertion heuristics)"};
  app.set_version_flag("--version", medrank::kVersion);
  app.require_subcommand(1);
  // Let global flags (--threads) appear after the subcommand name too.
  app.fallthrough();

  int threads = env_threads();
  app.add_option("--threads", threads,
                 "Worker threads (default: MEDRANK_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  ConsensusArgs consensus_args;
  CLI::App* consensus = app.add_subcommand(
      "consensus", "Compute median ranking(s) of a dataset");
  consensus->add_option("--input", consensus_args.input, "Dataset CSV path")
      ->required();
  consensus
      ->add_option("--algorithm", consensus_args.algorithm,
                   "Solver: bb, quick, or fast")
      ->required()
      ->check(CLI::IsMember({"bb", "quick", "fast"}));
  consensus->add_option("--maxiter", consensus_args.maxiter,
                        "fast: number of multi-start iterations")
      ->check(CLI::PositiveNumber);
  consensus->add_option("--seed", consensus_args.seed, "fast: RNG seed");
  consensus->add_flag("--fidelity-init", consensus_args.fidelity_init,
                      "bb: start from the pairwise-score vector instead of "
                      "the heuristic incumbent");
  consensus->add_option("--output", consensus_args.output,
                        "Write the report here instead of stdout");
  consensus->add_flag("--timings", consensus_args.timings,
                      "Include wall-clock timing in the report");

  MetricsArgs metrics_args;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "Distance and correlations between two rankings");
  metrics->add_option("--r1", metrics_args.r1, "First ranking, e.g. \"1 2 - 3\"")
      ->required();
  metrics->add_option("--r2", metrics_args.r2, "Second ranking")->required();
  metrics->add_option("--labels", metrics_args.labels,
                      "Object labels, e.g. \"A B C D\" (default positional)");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Sample a synthetic dataset from a distance-based model");
  simulate->add_option("--m", simulate_args.m, "Number of objects")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--theta", simulate_args.theta,
                       "Dispersion (0 = uniform)");
  simulate->add_option("--n", simulate_args.n, "Sample size")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", simulate_args.seed, "RNG seed");
  simulate->add_option("--space", simulate_args.space,
                       "Ranking space: full or weak")
      ->check(CLI::IsMember({"full", "weak"}));
  simulate->add_option("--consensus", simulate_args.consensus,
                       "Model consensus ranks (default identity)");
  simulate->add_option("--pick", simulate_args.pick,
                       "Incomplete scheme: rank only k objects per row");
  simulate->add_option("--out", simulate_args.out, "Output dataset path")
      ->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run an algorithm-comparison experiment from a config file");
  bench->add_option("--config", bench_args.config, "Experiment config path")
      ->required();
  bench->add_option("--output", bench_args.output,
                    "Write the report here instead of stdout");
  bench->add_flag("--timings", bench_args.timings,
                  "Include wall-clock timings in the report");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Count (and list) complete rankings-with-ties");
  enumerate->add_option("--m", enumerate_args.m, "Number of objects")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--list", enumerate_args.list,
                      "Print every ranking as a rank vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (consensus->parsed()) return run_consensus(consensus_args, threads);
    if (metrics->parsed()) return run_metrics(metrics_args);
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (bench->parsed()) return run_bench(bench_args, threads);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
  } catch (const medrank::SizeCapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
