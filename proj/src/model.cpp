#include "medrank/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "medrank/errors.hpp"
#include "medrank/metrics.hpp"
#include "medrank/rng.hpp"
#include "medrank/weak_orders.hpp"

namespace medrank {

namespace {

std::vector<Ranking> enumerate_permutations(const std::vector<std::string>& labels) {
  const int m = static_cast<int>(labels.size());
  if (m > kMaxEnumerableObjects) {
    throw SizeCapError("full ranking space too large to enumerate beyond " +
                       std::to_string(kMaxEnumerableObjects) + " objects");
  }
  std::vector<int> ranks(m);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<Ranking> space;
  do {
    space.emplace_back(labels, ranks);
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return space;
}

}  // namespace

PmfTable model_pmf(const ModelSpec& spec) {
  if (spec.theta < 0.0) {
    throw std::invalid_argument("model: theta must be nonnegative");
  }
  const Ranking s = spec.consensus.canonical();
  if (!s.complete()) {
    throw std::invalid_argument("model: consensus must be complete");
  }
  const int m = s.size();
  PmfTable table;
  if (spec.space == RankingSpace::kFull) {
    if (s.group_count() != m) {
      throw std::invalid_argument(
          "model: consensus must be tie-free in the full-permutation space");
    }
    table.space = enumerate_permutations(s.labels());
  } else {
    table.space = enumerate_weak_orders(s.labels());
  }

  table.probs.resize(table.space.size());
  double total = 0.0;
  for (std::size_t i = 0; i < table.space.size(); ++i) {
    const double d = kemeny_distance(s, table.space[i]);
    table.probs[i] = std::exp(-spec.theta * d);
    total += table.probs[i];
  }
  for (double& p : table.probs) p /= total;
  return table;
}

RankingDataset sample(const ModelSpec& spec, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be positive");
  const PmfTable table = model_pmf(spec);

  std::vector<double> cdf(table.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < table.probs.size(); ++i) {
    acc += table.probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  Rng rng(seed);
  std::vector<RankingDataset::Row> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx =
        std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    rows.push_back({table.space[idx], 1.0});
  }
  return RankingDataset(spec.consensus.labels(), std::move(rows));
}

RankingDataset sample_incomplete(int m, int k, std::uint64_t seed) {
  if (k < 2 || k > m) {
    throw std::invalid_argument("sample_incomplete: need 2 <= k <= m");
  }
  Rng rng(seed);

  // Space size C(m,k) * k!, saturating; only used to clamp the batch size.
  double space_size = 1.0;
  for (int i = 0; i < k; ++i) {
    space_size *= static_cast<double>(m - i);  // falling factorial m!/(m-k)!
  }
  const double requested = 15.0 + static_cast<double>(rng.next_below(16));
  const int count = static_cast<int>(std::min(requested, space_size));

  const std::vector<std::string> labels = default_labels(m);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> picked;
  std::vector<int> objects(m);
  std::iota(objects.begin(), objects.end(), 0);
  while (static_cast<int>(picked.size()) < count) {
    // Uniform k-subset (prefix of a shuffle) with a uniform rank assignment.
    rng.shuffle(objects);
    std::vector<int> ranks(m, Ranking::kUnranked);
    std::vector<int> slots(k);
    std::iota(slots.begin(), slots.end(), 1);
    rng.shuffle(slots);
    for (int i = 0; i < k; ++i) ranks[objects[i]] = slots[i];
    if (seen.insert(ranks).second) picked.push_back(std::move(ranks));
  }

  const double mean = rng.uniform(10.0, 30.0);
  const double sd = rng.uniform(2.5, 9.0);
  std::vector<double> weights(picked.size());
  double total = 0.0;
  for (double& w : weights) {
    do {
      w = rng.normal(mean, sd);
    } while (w <= 0.0);
    total += w;
  }
  std::vector<RankingDataset::Row> rows;
  rows.reserve(picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i) {
    rows.push_back(
        {Ranking(labels, std::move(picked[i])), weights[i] / total * 200.0});
  }
  return RankingDataset(labels, std::move(rows));
}

}  // namespace medrank
