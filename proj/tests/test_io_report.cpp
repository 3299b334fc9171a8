#include "medrank/io.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "medrank/errors.hpp"
#include "medrank/report.hpp"

using medrank::ParseError;
using medrank::parse_dataset_text;

namespace {

const char* kSample =
    "# judges ranking three fruits\n"
    "apple,pear,plum,weight\n"
    "1,2,3,4\n"
    "\n"
    "2,1,-,1.5\n"
    ",1,2,2\n";

}  // namespace

TEST_CASE("dataset parsing handles comments, gaps, and weights") {
  const auto d = parse_dataset_text(kSample);
  REQUIRE(d.m() == 3);
  REQUIRE(d.size() == 3);
  CHECK(d.labels() == std::vector<std::string>{"apple", "pear", "plum"});
  CHECK(d.row(0).ranking.ranks() == std::vector<int>{1, 2, 3});
  CHECK(d.row(0).weight == 4.0);
  CHECK(d.row(1).ranking.ranks() == std::vector<int>{2, 1, 0});  // '-' unranked
  CHECK(d.row(1).weight == 1.5);
  CHECK(d.row(2).ranking.ranks() == std::vector<int>{0, 1, 2});  // empty cell
  CHECK(d.total_weight() == 7.5);
}

TEST_CASE("datasets without a weight column get unit weights") {
  const auto d = parse_dataset_text("A,B\n1,2\n2,1\n");
  CHECK(d.row(0).weight == 1.0);
  CHECK(d.row(1).weight == 1.0);
  CHECK(d.total_weight() == 2.0);
  // The weight header is recognized case-insensitively.
  const auto w = parse_dataset_text("A,B,Weight\n1,2,3\n");
  CHECK(w.m() == 2);
  CHECK(w.row(0).weight == 3.0);
}

TEST_CASE("parse errors carry 1-based positions") {
  try {
    parse_dataset_text("A,B\n1,x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 1);
    CHECK(e.column() == 2);
    CHECK(std::string(e.what()).find("column B") != std::string::npos);
  }
  try {
    parse_dataset_text("A,B\n1,2\n2,0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);  // data rows count from 1, comments excluded
    CHECK(e.column() == 2);
  }
}

TEST_CASE("malformed datasets are rejected") {
  CHECK_THROWS_AS(parse_dataset_text(""), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B\n"), ParseError);  // no data rows
  CHECK_THROWS_AS(parse_dataset_text("A,A\n1,2\n"), ParseError);  // dup label
  CHECK_THROWS_AS(parse_dataset_text("A,,B\n1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B\n1,2,3\n"), ParseError);  // ragged
  CHECK_THROWS_AS(parse_dataset_text("A,B\n-,-\n"), ParseError);  // empty row
  CHECK_THROWS_AS(parse_dataset_text("A,B\n1,-\n2,-\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B,weight\n1,2,0\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B,weight\n1,2,-3\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B,weight\n1,2,abc\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("A,B\n1,2.5\n"), ParseError);
}

TEST_CASE("dataset writing round-trips exactly") {
  const auto d = parse_dataset_text(kSample);
  const std::string text = medrank::format_dataset(d);
  const auto back = parse_dataset_text(text);
  REQUIRE(back.m() == d.m());
  REQUIRE(back.size() == d.size());
  for (int k = 0; k < d.size(); ++k) {
    CHECK(back.row(k).ranking.ranks() == d.row(k).ranking.ranks());
    CHECK(back.row(k).weight == d.row(k).weight);
  }
  // Formatting is canonical, so a second pass is byte-identical.
  CHECK(medrank::format_dataset(back) == text);
}

TEST_CASE("file round trip through the atomic writer") {
  const std::string path = "medrank_test_io.tmp.csv";
  medrank::atomic_write_file(path, "A,B\n1,2\n");
  const auto d = medrank::parse_dataset(path);
  CHECK(d.m() == 2);
  CHECK(medrank::read_file(path) == "A,B\n1,2\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(medrank::parse_dataset("definitely_missing_file.csv"),
                  std::runtime_error);
}

TEST_CASE("content digests are stable") {
  CHECK(medrank::fnv1a64("") == 14695981039346656037ULL);
  CHECK(medrank::digest_hex("") == "cbf29ce484222325");
  CHECK(medrank::digest_hex("a") == "af63dc4c8601ec8c");
  CHECK(medrank::digest_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("run reports round-trip byte-identically") {
  medrank::RunReport r;
  r.schema = 1;
  r.version = "0.1.0";
  r.algorithm = "fast";
  r.input_digest = "2ffca091a1870124";
  r.labels = {"A", "B", "C"};
  r.rows = 21;
  r.total_weight = 112.0;
  r.seed = 42;
  r.maxiter = 100;
  r.iterations = 100;
  r.objective_dot = 3894.0;
  r.avg_tau_x = 0.1655612244897959;  // needs shortest-round-trip printing
  r.solutions = {{1, 2, 3}, {1, 2, 2}};
  const std::string text = medrank::format_run_report(r);
  const auto parsed = medrank::parse_run_report(text);
  CHECK(parsed.algorithm == "fast");
  CHECK(parsed.labels == r.labels);
  CHECK(parsed.total_weight == 112.0);
  REQUIRE(parsed.seed.has_value());
  CHECK(*parsed.seed == 42);
  REQUIRE(parsed.maxiter.has_value());
  CHECK(*parsed.maxiter == 100);
  CHECK(parsed.avg_tau_x == r.avg_tau_x);  // exact, not approximate
  CHECK(parsed.solutions == r.solutions);
  CHECK_FALSE(parsed.elapsed_ms.has_value());
  CHECK(medrank::format_run_report(parsed) == text);
}

TEST_CASE("optional report fields appear only when set") {
  medrank::RunReport r;
  r.version = "0.1.0";
  r.algorithm = "bb";
  r.input_digest = "0000000000000000";
  r.labels = {"A", "B"};
  r.rows = 1;
  r.total_weight = 1.0;
  r.iterations = 5;
  r.objective_dot = 2.0;
  r.avg_tau_x = 1.0;
  r.solutions = {{1, 2}};
  const std::string without = medrank::format_run_report(r);
  CHECK(without.find("seed:") == std::string::npos);
  CHECK(without.find("maxiter:") == std::string::npos);
  CHECK(without.find("threads:") == std::string::npos);
  CHECK(without.find("elapsed-ms:") == std::string::npos);
  r.threads = 4;
  r.elapsed_ms = 12.5;
  const std::string with = medrank::format_run_report(r);
  CHECK(with.find("threads:") != std::string::npos);
  CHECK(with.find("elapsed-ms:") != std::string::npos);
  const auto parsed = medrank::parse_run_report(with);
  REQUIRE(parsed.threads.has_value());
  CHECK(*parsed.threads == 4);
  REQUIRE(parsed.elapsed_ms.has_value());
  CHECK(*parsed.elapsed_ms == 12.5);
  CHECK(medrank::format_run_report(parsed) == with);
}

TEST_CASE("truncated or shuffled reports are rejected") {
  medrank::RunReport r;
  r.version = "0.1.0";
  r.algorithm = "bb";
  r.input_digest = "0000000000000000";
  r.labels = {"A", "B"};
  r.rows = 1;
  r.total_weight = 1.0;
  r.solutions = {{1, 2}};
  const std::string text = medrank::format_run_report(r);
  CHECK_THROWS_AS(medrank::parse_run_report(
                      text.substr(0, text.size() / 2)),
                  ParseError);
  CHECK_THROWS_AS(medrank::parse_run_report("not a report\n"), ParseError);
}

TEST_CASE("experiment reports round-trip byte-identically") {
  medrank::ExperimentResult result;
  result.config.m = 4;
  result.config.space = medrank::RankingSpace::kWeak;
  result.config.thetas = {0.7, 0.1};
  result.config.sample_size = 50;
  result.config.replications = 2;
  result.config.algorithms = {"bb", "fast"};
  result.config.seed = 9;
  result.config.fast_maxiter = 20;
  result.config.threads = 1;
  for (int t = 0; t < 2; ++t) {
    for (int rep = 1; rep <= 2; ++rep) {
      medrank::ExperimentCell cell;
      cell.theta = result.config.thetas[t];
      cell.replication = rep;
      cell.outcomes.push_back({"bb", 2, 100.0, 0.25, 1.5, 2});
      cell.outcomes.push_back({"fast", 1, 100.0, 0.25, 0.5, 1});
      result.cells.push_back(cell);
    }
  }
  const std::string text = medrank::format_experiment_report(result, false);
  CHECK(text.find("elapsed-ms") == std::string::npos);
  const auto parsed = medrank::parse_experiment_report(text);
  REQUIRE(parsed.cells.size() == 4);
  CHECK(parsed.config.algorithms == result.config.algorithms);
  CHECK(parsed.cells[0].outcomes[0].solution_count == 2);
  CHECK(parsed.cells[0].outcomes[0].overlap_with_bb == 2);
  CHECK(medrank::format_experiment_report(parsed, false) == text);
  // Timed variant carries timings through its own round trip.
  const std::string timed = medrank::format_experiment_report(result, true);
  CHECK(timed.find("elapsed-ms") != std::string::npos);
  const auto timed_parsed = medrank::parse_experiment_report(timed);
  CHECK(medrank::format_experiment_report(timed_parsed, true) == timed);
}
