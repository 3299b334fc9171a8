#include "medrank/heuristics.hpp"

#include <set>
#include <vector>

#include "doctest.h"
#include "medrank/branch_bound.hpp"
#include "medrank/combined_input.hpp"
#include "medrank/dataset.hpp"
#include "medrank/ranking.hpp"
#include "medrank/rng.hpp"
#include "test_support.hpp"

using medrank::CombinedInput;
using medrank::FastOptions;
using medrank::make_dataset;
using medrank::Ranking;
using medrank::Rng;

namespace {

CombinedInput voting_ci() {
  return medrank::combined_input(make_dataset({"A", "B", "C"},
                                              {{2, 1, 3}, {1, 2, 3}, {3, 2, 1}},
                                              {12.0, 5.0, 7.0}));
}

std::set<std::vector<int>> solution_ranks(const medrank::SolutionSet& set) {
  std::set<std::vector<int>> out;
  for (const auto& s : set.solutions) out.insert(s.ranks());
  return out;
}

}  // namespace

TEST_CASE("first-guess scores on the voting example") {
  // B wins both its comparisons, A wins one, C none: scores 2/3/1.
  const Ranking q = medrank::initial_q(voting_ci());
  CHECK(q.ranks() == std::vector<int>{2, 1, 3});
}

TEST_CASE("first-guess ties objects with balanced comparisons") {
  // A perfectly split pair: both directions carry zero net weight, so both
  // objects keep the base score and come out tied.
  const auto split = medrank::combined_input(
      make_dataset({"A", "B"}, {{1, 2}, {2, 1}}));
  CHECK(medrank::initial_q(split).ranks() == std::vector<int>{1, 1});
  // A single voter: the winner takes the extra point.
  const auto lone = medrank::combined_input(make_dataset({"A", "B"}, {{2, 1}}));
  CHECK(medrank::initial_q(lone).ranks() == std::vector<int>{2, 1});
  // Tie-dominated pair: both cells positive, both objects credited, so the
  // pair stays tied in the first guess.
  const auto tied = medrank::combined_input(
      make_dataset({"A", "B"}, {{1, 1}, {1, 2}}, {2.0, 1.0}));
  CHECK(medrank::initial_q(tied).ranks() == std::vector<int>{1, 1});
  // One positive cell against a zero cell fires none of the three sign
  // rules; the scores stay at their base value.
  const auto lopsided = medrank::combined_input(
      make_dataset({"A", "B"}, {{1, 1}, {1, 2}}));
  CHECK(medrank::initial_q(lopsided).ranks() == std::vector<int>{1, 1});
}

TEST_CASE("insertion heuristic solves the voting example exactly") {
  const CombinedInput ci = voting_ci();
  const auto result = medrank::quick(ci, medrank::initial_q(ci));
  CHECK(result.candidate.ranks() == std::vector<int>{2, 1, 3});
  CHECK(result.penalty == 0.0);
  CHECK(result.passes >= 2);
  CHECK(result.avg_tau_x == doctest::Approx(68.0 / 144.0));
}

TEST_CASE("insertion heuristic never worsens its start") {
  Rng rng(9001);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(5));
    const auto data = testsupport::random_dataset(rng, m, 10);
    const CombinedInput ci = medrank::combined_input(data);
    const Ranking start(data.labels(), testsupport::random_weak_ranks(rng, m));
    const auto result = medrank::quick(ci, start);
    REQUIRE(result.penalty <= medrank::total_penalty(start, ci) + 1e-12);
    REQUIRE(result.passes <= medrank::kQuickPassCap);
    // Reported numbers describe the reported candidate.
    REQUIRE(result.penalty == medrank::total_penalty(result.candidate, ci));
  }
}

TEST_CASE("a global optimum is a fixed point of the insertion pass") {
  Rng rng(606);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(3));  // 2..4
    const auto data = testsupport::random_dataset(rng, m, 8);
    const CombinedInput ci = medrank::combined_input(data);
    const auto exact = medrank::bb_solve(
        ci, Ranking(data.labels(), testsupport::random_permutation_ranks(rng, m)));
    for (const auto& opt : exact.solutions) {
      const auto result = medrank::quick(ci, opt);
      REQUIRE(result.candidate.ranks() == opt.ranks());
    }
  }
}

TEST_CASE("standalone heuristic reports a single candidate") {
  const auto result = medrank::quick_best(voting_ci());
  CHECK(result.candidate.ranks() == std::vector<int>{2, 1, 3});
  CHECK(result.penalty == 0.0);
}

TEST_CASE("multi-start search is deterministic for a fixed seed") {
  Rng rng(41);
  const auto data = testsupport::random_dataset(rng, 6, 25);
  const CombinedInput ci = medrank::combined_input(data);
  FastOptions options;
  options.maxiter = 30;
  options.seed = 12345;
  const auto first = medrank::fast(ci, options);
  const auto second = medrank::fast(ci, options);
  REQUIRE(solution_ranks(first) == solution_ranks(second));
  REQUIRE(first.objective_dot == second.objective_dot);
  CHECK(first.algorithm == "fast");
  CHECK(first.seed.has_value());
  CHECK(*first.seed == 12345);
  CHECK(first.iterations == 30);
}

TEST_CASE("multi-start result is invariant to the worker count") {
  Rng rng(42);
  const auto data = testsupport::random_dataset(rng, 6, 25);
  const CombinedInput ci = medrank::combined_input(data);
  FastOptions options;
  options.maxiter = 40;
  options.seed = 99;
  options.threads = 1;
  const auto one = medrank::fast(ci, options);
  options.threads = 2;
  const auto two = medrank::fast(ci, options);
  options.threads = 4;
  const auto four = medrank::fast(ci, options);
  REQUIRE(solution_ranks(one) == solution_ranks(two));
  REQUIRE(solution_ranks(one) == solution_ranks(four));
  REQUIRE(one.objective_dot == two.objective_dot);
  REQUIRE(one.objective_dot == four.objective_dot);
}

TEST_CASE("more restarts never hurt for a shared seed") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto data = testsupport::random_dataset(rng, 5, 15);
    const CombinedInput ci = medrank::combined_input(data);
    const auto small = medrank::fast(ci, 5, 7);
    const auto large = medrank::fast(ci, 60, 7);
    REQUIRE(large.objective_dot >= small.objective_dot);
  }
}

TEST_CASE("a single iteration degenerates to the two-start heuristic") {
  const CombinedInput ci = voting_ci();
  const auto set = medrank::fast(ci, 1, 0);
  REQUIRE(set.iterations == 1);
  REQUIRE(solution_ranks(set).count({2, 1, 3}) == 1);
  CHECK(set.objective_dot == 68.0);
}

TEST_CASE("single-voter problems are solved by every component") {
  const auto data = make_dataset({"A", "B", "C", "D"}, {{3, 1, 4, 2}});
  const CombinedInput ci = medrank::combined_input(data);
  CHECK(medrank::initial_q(ci).ranks() == std::vector<int>{3, 1, 4, 2});
  CHECK(medrank::quick_best(ci).candidate.ranks() ==
        std::vector<int>{3, 1, 4, 2});
  const auto set = medrank::fast(ci, 10, 3);
  REQUIRE(set.solutions.size() == 1);
  CHECK(set.solutions[0].ranks() == std::vector<int>{3, 1, 4, 2});
  CHECK(set.avg_tau_x == 1.0);
}

TEST_CASE("multi-start candidates always match the exact optimum on small inputs") {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 3 + static_cast<int>(rng.next_below(3));  // 3..5
    const auto data = testsupport::random_dataset(rng, m, 12);
    const CombinedInput ci = medrank::combined_input(data);
    const auto exact = medrank::bb_solve(
        ci, Ranking(data.labels(), testsupport::random_permutation_ranks(rng, m)));
    const auto heur = medrank::fast(ci, 50, 11);
    REQUIRE(heur.objective_dot <= exact.objective_dot);
    const auto exact_set = solution_ranks(exact);
    for (const auto& ranks : solution_ranks(heur)) {
      if (heur.objective_dot == exact.objective_dot) {
        REQUIRE(exact_set.count(ranks) == 1);
      }
    }
  }
}
