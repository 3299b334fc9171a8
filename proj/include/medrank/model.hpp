#pragma once

#include <cstdint>
#include <vector>

#include "medrank/dataset.hpp"
#include "medrank/ranking.hpp"

namespace medrank {

/// Which enumerable ranking space a model lives in.
enum class RankingSpace { kFull, kWeak };

/// Distance-based ranking model: probability of ranking `a` is proportional
/// to exp(-theta * d(S, a)), with d the Kemeny distance to the consensus S.
/// theta = 0 gives the uniform distribution over the space.
struct ModelSpec {
  Ranking consensus;
  double theta = 0.0;
  RankingSpace space = RankingSpace::kFull;
};

/// Exact probability table over an enumerated ranking space.
struct PmfTable {
  std::vector<Ranking> space;
  std::vector<double> probs;  // same order as `space`, sums to 1
};

/// Enumerates the model's space and normalizes exp(-theta*d). The space must
/// be enumerable (m <= kMaxEnumerableObjects); the consensus must be complete
/// and, for the full space, tie-free.
PmfTable model_pmf(const ModelSpec& spec);

/// n independent inverse-CDF draws from the model, as a unit-weight dataset.
/// Bit-reproducible for a fixed seed.
RankingDataset sample(const ModelSpec& spec, int n, std::uint64_t seed);

/// "Pick k out of m" incomplete-ranking generator: a uniformly drawn batch
/// of 15..30 distinct rankings that each rank a random k-subset of the
/// objects 1..k and leave the rest unranked (the batch is clamped to the
/// space size when the space is smaller). Row weights are drawn from a
/// normal distribution whose mean ~ U[10,30] and sd ~ U[2.5,9]; nonpositive
/// draws are rejected and the weights are rescaled to sum to 200.
RankingDataset sample_incomplete(int m, int k, std::uint64_t seed);

}  // namespace medrank
