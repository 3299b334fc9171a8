#include "medrank/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "medrank/ranking.hpp"
#include "medrank/rng.hpp"
#include "medrank/score_matrix.hpp"
#include "medrank/weak_orders.hpp"
#include "test_support.hpp"

using medrank::Ranking;
using medrank::Rng;

namespace {

Ranking rk(const std::vector<int>& ranks) { return Ranking(ranks); }

}  // namespace

TEST_CASE("score matrix conventions for ties and unranked objects") {
  const Ranking r({"A", "B", "C"}, {1, 1, 0});
  const auto em = medrank::score_matrix(r, medrank::ScoreConvention::kEmondMason);
  const auto kd = medrank::score_matrix(r, medrank::ScoreConvention::kKendall);
  CHECK(em.at(0, 1) == 1);   // tie scores as agreement both ways
  CHECK(em.at(1, 0) == 1);
  CHECK(kd.at(0, 1) == 0);   // tie is neutral classically
  CHECK(em.at(0, 2) == 0);   // unranked contributes nothing
  CHECK(kd.at(2, 0) == 0);
}

TEST_CASE("distance worked examples") {
  CHECK(medrank::kemeny_distance(rk({1, 2, 3}), rk({3, 2, 1})) == 6.0);
  CHECK(medrank::kemeny_distance(rk({1, 1}), rk({1, 2})) == 1.0);
  CHECK(medrank::kemeny_distance(rk({1, 2}), rk({2, 1})) == 2.0);
  CHECK(medrank::kemeny_distance(rk({1, 2, 3}), rk({1, 2, 3})) == 0.0);
  // Pairs unranked on either side are skipped.
  const Ranking p1({"A", "B", "C"}, {1, 2, 0});
  const Ranking p2({"A", "B", "C"}, {2, 1, 3});
  CHECK(medrank::kemeny_distance(p1, p2) == 2.0);
}

TEST_CASE("correlation worked examples") {
  CHECK(medrank::tau_x(rk({1, 2, 3}), rk({3, 2, 1})) == -1.0);
  CHECK(medrank::tau_x(rk({1, 2}), rk({1, 2})) == 1.0);
  CHECK(medrank::tau_x(rk({1, 1}), rk({1, 2})) == 0.0);
  CHECK(medrank::kendall_tau(rk({1, 2, 3, 4}), rk({1, 3, 2, 4})) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(medrank::spearman_rho(rk({1, 2, 3}), rk({3, 2, 1})) == -1.0);
  CHECK(medrank::spearman_rho(rk({1, 2, 3, 4}), rk({1, 3, 2, 4})) ==
        doctest::Approx(0.8));
}

TEST_CASE("metrics require matching label sets") {
  const Ranking a({"A", "B"}, {1, 2});
  const Ranking b({"A", "C"}, {1, 2});
  CHECK_THROWS_AS(medrank::kemeny_distance(a, b), std::invalid_argument);
  // Same set, different order: aligned by label, not by position.
  const Ranking c({"B", "A"}, {2, 1});
  CHECK(medrank::kemeny_distance(a, c) == 0.0);
}

TEST_CASE("degenerate correlations are rejected") {
  CHECK_THROWS_AS(medrank::kendall_tau(rk({1, 1}), rk({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(medrank::spearman_rho(rk({1, 1, 2}), rk({1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(medrank::tau_x(Ranking({"A", "B"}, {1, 0}),
                                 Ranking({"A", "B"}, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("distance satisfies the metric axioms on random triples") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(4));  // 2..5
    const auto labels = medrank::default_labels(m);
    const Ranking a(labels, testsupport::random_weak_ranks(rng, m));
    const Ranking b(labels, testsupport::random_weak_ranks(rng, m));
    const Ranking c(labels, testsupport::random_weak_ranks(rng, m));
    const double ab = medrank::kemeny_distance(a, b);
    const double ba = medrank::kemeny_distance(b, a);
    const double ac = medrank::kemeny_distance(a, c);
    const double cb = medrank::kemeny_distance(c, b);
    REQUIRE(ab >= 0.0);
    REQUIRE(ab == ba);
    REQUIRE((ab == 0.0) == (a.canonical().ranks() == b.canonical().ranks()));
    REQUIRE(ab <= ac + cb);
  }
}

TEST_CASE("distance is invariant under relabeling") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(4));
    const auto labels = medrank::default_labels(m);
    std::vector<int> a = testsupport::random_weak_ranks(rng, m);
    std::vector<int> b = testsupport::random_weak_ranks(rng, m);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<int> pa(m), pb(m);
    for (int i = 0; i < m; ++i) {
      pa[perm[i]] = a[i];
      pb[perm[i]] = b[i];
    }
    REQUIRE(medrank::kemeny_distance(Ranking(labels, a), Ranking(labels, b)) ==
            medrank::kemeny_distance(Ranking(labels, pa), Ranking(labels, pb)));
  }
}

TEST_CASE("distance agrees with the first-principles oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(5));
    const auto labels = medrank::default_labels(m);
    const auto a = testsupport::random_weak_ranks(rng, m);
    const auto b = testsupport::random_weak_ranks(rng, m);
    REQUIRE(medrank::kemeny_distance(Ranking(labels, a), Ranking(labels, b)) ==
            testsupport::naive_kemeny(a, b));
  }
}

TEST_CASE("tau_x relates to distance as 1 - 2d/(m(m-1)) on complete pairs") {
  Rng rng(5150);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(5));
    const auto labels = medrank::default_labels(m);
    const Ranking a(labels, testsupport::random_weak_ranks(rng, m));
    const Ranking b(labels, testsupport::random_weak_ranks(rng, m));
    const double d = medrank::kemeny_distance(a, b);
    // Same identity written with one division so both sides round once:
    // d is an integer for complete rankings, hence the numerator is exact.
    REQUIRE(medrank::tau_x(a, b) == (m * (m - 1) - 2.0 * d) / (m * (m - 1)));
  }
}

TEST_CASE("tau_x equals kendall tau on tie-free pairs") {
  Rng rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(5));
    const auto labels = medrank::default_labels(m);
    const Ranking a(labels, testsupport::random_permutation_ranks(rng, m));
    const Ranking b(labels, testsupport::random_permutation_ranks(rng, m));
    REQUIRE(medrank::tau_x(a, b) == doctest::Approx(medrank::kendall_tau(a, b))
                                        .epsilon(1e-12));
  }
}

TEST_CASE("minimum positive distance over all distinct weak orders is 1") {
  const auto space = medrank::enumerate_weak_orders(4);
  double min_positive = 1e30;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const double d = medrank::kemeny_distance(space[i], space[j]);
      REQUIRE(d > 0.0);  // distinct canonical points never at distance zero
      min_positive = std::min(min_positive, d);
    }
  }
  CHECK(min_positive == 1.0);
}
