#include "medrank/weak_orders.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "medrank/errors.hpp"
#include "medrank/ranking.hpp"

namespace {

// Independent count: a(m) = sum_k C(m, k) a(m - k), a(0) = 1 — choose the
// top tie group, then order the rest.
std::uint64_t ordered_bell(int m) {
  std::vector<std::uint64_t> a(m + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= m; ++n) {
    std::uint64_t binom = 1;  // C(n, k), updated incrementally
    for (int k = 1; k <= n; ++k) {
      binom = binom * static_cast<std::uint64_t>(n - k + 1) / k;
      a[n] += binom * a[n - k];
    }
  }
  return a[m];
}

}  // namespace

TEST_CASE("enumeration counts match the recurrence") {
  CHECK(ordered_bell(2) == 3);
  CHECK(ordered_bell(3) == 13);
  CHECK(ordered_bell(4) == 75);
  CHECK(ordered_bell(5) == 541);
  CHECK(ordered_bell(6) == 4683);
  for (int m = 1; m <= 6; ++m) {
    CHECK(medrank::enumerate_weak_orders(m).size() == ordered_bell(m));
  }
}

TEST_CASE("enumeration yields distinct canonical rankings in sorted order") {
  for (int m = 2; m <= 5; ++m) {
    const auto space = medrank::enumerate_weak_orders(m);
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < space.size(); ++i) {
      REQUIRE(space[i].complete());
      REQUIRE(space[i].is_canonical());
      REQUIRE(seen.insert(space[i].ranks()).second);
      if (i > 0) {
        REQUIRE(space[i - 1].ranks() < space[i].ranks());
      }
    }
  }
}

TEST_CASE("raw rank-vector enumeration matches the labeled one") {
  const auto labeled = medrank::enumerate_weak_orders(4);
  const auto raw = medrank::enumerate_weak_order_ranks(4);
  REQUIRE(labeled.size() == raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(labeled[i].ranks() == raw[i]);
  }
}

TEST_CASE("custom labels are carried through") {
  const auto space = medrank::enumerate_weak_orders(
      std::vector<std::string>{"x", "y"});
  REQUIRE(space.size() == 3);
  CHECK(space[0].labels() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("closed-form estimate tracks the exact count within one percent") {
  for (int m = 3; m <= 6; ++m) {
    const double exact = static_cast<double>(ordered_bell(m));
    const double approx = medrank::approx_weak_order_count(m);
    CHECK(std::abs(approx - exact) / exact < 0.01);
  }
}

TEST_CASE("enumeration beyond the guard reports a size-cap error") {
  CHECK(medrank::enumerate_weak_orders(medrank::kMaxEnumerableObjects).size() ==
        47293);
  CHECK_THROWS_AS(medrank::enumerate_weak_orders(8), medrank::SizeCapError);
  CHECK_THROWS_AS(medrank::enumerate_weak_order_ranks(8), medrank::SizeCapError);
}
