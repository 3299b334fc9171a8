#include "medrank/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "medrank/errors.hpp"
#include "medrank/version.hpp"

namespace medrank {

namespace {

// Shortest decimal form that parses back to the identical double.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

double to_double(const std::string& token) {
  double v = 0.0;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last || token.empty()) {
    throw ParseError("report: bad number '" + token + "'");
  }
  return v;
}

std::int64_t to_int(const std::string& token) {
  std::int64_t v = 0;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last || token.empty()) {
    throw ParseError("report: bad integer '" + token + "'");
  }
  return v;
}

std::uint64_t to_u64(const std::string& token) {
  std::uint64_t v = 0;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last || token.empty()) {
    throw ParseError("report: bad integer '" + token + "'");
  }
  return v;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> tokens;
  std::stringstream ss(text);
  std::string token;
  while (ss >> token) tokens.push_back(token);
  return tokens;
}

// Strict in-order reader over `key: value` lines.
class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines_.push_back(line);
    }
  }

  bool at_end() const { return pos_ >= lines_.size(); }

  bool peek_is(const std::string& key) const {
    return !at_end() && lines_[pos_].rfind(key + ":", 0) == 0;
  }

  std::string expect(const std::string& key) {
    if (!peek_is(key)) {
      throw ParseError("report: expected '" + key + ":' at line " +
                       std::to_string(pos_ + 1));
    }
    std::string value = lines_[pos_].substr(key.size() + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    ++pos_;
    return value;
  }

  std::vector<std::string> collect(const std::string& key) {
    std::vector<std::string> values;
    while (peek_is(key)) values.push_back(expect(key));
    return values;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::string header(const std::string& kind, const std::string& version) {
  std::string out;
  out += "medrank-report: " + fmt(kReportSchema) + "\n";
  out += "kind: " + kind + "\n";
  out += "version: " + version + "\n";
  return out;
}

// key=value token lists used by cell/summary lines.
std::vector<std::pair<std::string, std::string>> parse_fields(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> fields;
  for (const std::string& token : split_ws(text)) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) {
      throw ParseError("report: bad field '" + token + "'");
    }
    fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return fields;
}

const std::string& field(
    const std::vector<std::pair<std::string, std::string>>& fields,
    const char* key) {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw ParseError(std::string("report: missing field '") + key + "'");
}

bool has_field(const std::vector<std::pair<std::string, std::string>>& fields,
               const char* key) {
  for (const auto& [k, v] : fields) {
    if (k == key) return true;
  }
  return false;
}

void append_summary_lines(std::string& out, const ExperimentResult& result,
                          bool timings) {
  for (double theta : result.config.thetas) {
    for (const auto& algo : result.config.algorithms) {
      std::vector<double> counts;
      std::vector<double> overlaps;
      std::vector<double> times;
      for (const auto& cell : result.cells) {
        if (cell.theta != theta) continue;
        for (const auto& outcome : cell.outcomes) {
          if (outcome.algorithm != algo) continue;
          counts.push_back(outcome.solution_count);
          if (outcome.overlap_with_bb >= 0) {
            overlaps.push_back(outcome.overlap_with_bb);
          }
          times.push_back(outcome.elapsed_ms);
        }
      }
      const auto emit = [&](const char* metric, const SummaryStats& s) {
        out += "summary: theta=" + fmt(theta) + " algo=" + algo +
               " metric=" + metric + " min=" + fmt(s.min) +
               " max=" + fmt(s.max) + " mean=" + fmt(s.mean) +
               " median=" + fmt(s.median) + "\n";
      };
      emit("solutions", summarize(counts));
      if (!overlaps.empty()) emit("overlap", summarize(overlaps));
      if (timings) emit("elapsed-ms", summarize(times));
    }
  }
}

}  // namespace

std::string format_run_report(const RunReport& report) {
  std::string out = header("consensus", report.version);
  out += "algorithm: " + report.algorithm + "\n";
  out += "input-digest: " + report.input_digest + "\n";
  out += "labels:";
  for (const auto& label : report.labels) out += " " + label;
  out += "\n";
  out += "rows: " + fmt(report.rows) + "\n";
  out += "total-weight: " + fmt(report.total_weight) + "\n";
  if (report.seed) out += "seed: " + fmt(*report.seed) + "\n";
  if (report.maxiter) out += "maxiter: " + fmt(*report.maxiter) + "\n";
  out += "iterations: " + fmt(report.iterations) + "\n";
  out += "objective-dot: " + fmt(report.objective_dot) + "\n";
  out += "avg-tau-x: " + fmt(report.avg_tau_x) + "\n";
  out += "solutions: " + fmt(static_cast<int>(report.solutions.size())) + "\n";
  for (const auto& ranks : report.solutions) {
    out += "solution:";
    for (int r : ranks) out += " " + fmt(r);
    out += "\n";
  }
  if (report.threads) out += "threads: " + fmt(*report.threads) + "\n";
  if (report.elapsed_ms) out += "elapsed-ms: " + fmt(*report.elapsed_ms) + "\n";
  return out;
}

RunReport parse_run_report(const std::string& text) {
  LineReader reader(text);
  RunReport report;
  report.schema = static_cast<int>(to_int(reader.expect("medrank-report")));
  if (report.schema != kReportSchema) {
    throw ParseError("report: unsupported schema " + fmt(report.schema));
  }
  if (reader.expect("kind") != "consensus") {
    throw ParseError("report: not a consensus report");
  }
  report.version = reader.expect("version");
  report.algorithm = reader.expect("algorithm");
  report.input_digest = reader.expect("input-digest");
  report.labels = split_ws(reader.expect("labels"));
  report.rows = static_cast<int>(to_int(reader.expect("rows")));
  report.total_weight = to_double(reader.expect("total-weight"));
  if (reader.peek_is("seed")) report.seed = to_u64(reader.expect("seed"));
  if (reader.peek_is("maxiter")) {
    report.maxiter = static_cast<int>(to_int(reader.expect("maxiter")));
  }
  report.iterations = to_u64(reader.expect("iterations"));
  report.objective_dot = to_double(reader.expect("objective-dot"));
  report.avg_tau_x = to_double(reader.expect("avg-tau-x"));
  const int count = static_cast<int>(to_int(reader.expect("solutions")));
  for (const std::string& value : reader.collect("solution")) {
    std::vector<int> ranks;
    for (const std::string& token : split_ws(value)) {
      ranks.push_back(static_cast<int>(to_int(token)));
    }
    report.solutions.push_back(std::move(ranks));
  }
  if (static_cast<int>(report.solutions.size()) != count) {
    throw ParseError("report: solution count mismatch");
  }
  if (reader.peek_is("threads")) {
    report.threads = static_cast<int>(to_int(reader.expect("threads")));
  }
  if (reader.peek_is("elapsed-ms")) {
    report.elapsed_ms = to_double(reader.expect("elapsed-ms"));
  }
  if (!reader.at_end()) throw ParseError("report: trailing content");
  return report;
}

std::string format_experiment_report(const ExperimentResult& result,
                                     bool timings) {
  const ExperimentConfig& cfg = result.config;
  std::string out = header("experiment", kVersion);
  out += "m: " + fmt(cfg.m) + "\n";
  out += std::string("space: ") +
         (cfg.space == RankingSpace::kFull ? "full" : "weak") + "\n";
  out += "thetas:";
  for (double t : cfg.thetas) out += " " + fmt(t);
  out += "\n";
  out += "sample-size: " + fmt(cfg.sample_size) + "\n";
  out += "replications: " + fmt(cfg.replications) + "\n";
  out += "algorithms:";
  for (const auto& a : cfg.algorithms) out += " " + a;
  out += "\n";
  out += "seed: " + fmt(cfg.seed) + "\n";
  out += "fast-maxiter: " + fmt(cfg.fast_maxiter) + "\n";
  out += "threads: " + fmt(cfg.threads) + "\n";
  for (const auto& cell : result.cells) {
    for (const auto& outcome : cell.outcomes) {
      out += "cell: theta=" + fmt(cell.theta) +
             " rep=" + fmt(cell.replication) + " algo=" + outcome.algorithm +
             " solutions=" + fmt(outcome.solution_count) +
             " dot=" + fmt(outcome.objective_dot) +
             " tau=" + fmt(outcome.avg_tau_x) +
             " overlap=" + fmt(outcome.overlap_with_bb);
      if (timings) out += " elapsed-ms=" + fmt(outcome.elapsed_ms);
      out += "\n";
    }
  }
  append_summary_lines(out, result, timings);
  return out;
}

ExperimentResult parse_experiment_report(const std::string& text) {
  LineReader reader(text);
  ExperimentResult result;
  const int schema = static_cast<int>(to_int(reader.expect("medrank-report")));
  if (schema != kReportSchema) {
    throw ParseError("report: unsupported schema " + fmt(schema));
  }
  if (reader.expect("kind") != "experiment") {
    throw ParseError("report: not an experiment report");
  }
  reader.expect("version");
  ExperimentConfig& cfg = result.config;
  cfg.m = static_cast<int>(to_int(reader.expect("m")));
  const std::string space = reader.expect("space");
  if (space != "full" && space != "weak") {
    throw ParseError("report: bad space '" + space + "'");
  }
  cfg.space = space == "full" ? RankingSpace::kFull : RankingSpace::kWeak;
  cfg.thetas.clear();
  for (const std::string& token : split_ws(reader.expect("thetas"))) {
    cfg.thetas.push_back(to_double(token));
  }
  cfg.sample_size = static_cast<int>(to_int(reader.expect("sample-size")));
  cfg.replications = static_cast<int>(to_int(reader.expect("replications")));
  cfg.algorithms = split_ws(reader.expect("algorithms"));
  cfg.seed = to_u64(reader.expect("seed"));
  cfg.fast_maxiter = static_cast<int>(to_int(reader.expect("fast-maxiter")));
  cfg.threads = static_cast<int>(to_int(reader.expect("threads")));

  for (const std::string& value : reader.collect("cell")) {
    const auto fields = parse_fields(value);
    const double theta = to_double(field(fields, "theta"));
    const int rep = static_cast<int>(to_int(field(fields, "rep")));
    if (result.cells.empty() || result.cells.back().theta != theta ||
        result.cells.back().replication != rep) {
      ExperimentCell cell;
      cell.theta = theta;
      cell.replication = rep;
      result.cells.push_back(std::move(cell));
    }
    AlgorithmOutcome outcome;
    outcome.algorithm = field(fields, "algo");
    outcome.solution_count = static_cast<int>(to_int(field(fields, "solutions")));
    outcome.objective_dot = to_double(field(fields, "dot"));
    outcome.avg_tau_x = to_double(field(fields, "tau"));
    outcome.overlap_with_bb = static_cast<int>(to_int(field(fields, "overlap")));
    if (has_field(fields, "elapsed-ms")) {
      outcome.elapsed_ms = to_double(field(fields, "elapsed-ms"));
    }
    result.cells.back().outcomes.push_back(std::move(outcome));
  }
  reader.collect("summary");  // derived from cells; recomputed on format
  if (!reader.at_end()) throw ParseError("report: trailing content");
  return result;
}

}  // namespace medrank
