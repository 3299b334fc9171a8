#pragma once

#include "medrank/ranking.hpp"

namespace medrank {

// Kemeny-Snell distance: half the elementwise absolute difference of the
// tie-as-zero score matrices. A metric on complete rankings. Pairs where
// either ranking leaves an object unranked contribute nothing, matching the
// convention used when aggregating partial rankings.
double kemeny_distance(const Ranking& r1, const Ranking& r2);

// Tie-as-agreement rank correlation. Equals Kendall's tau when neither
// ranking has ties; related to the Kemeny distance d by
// tau_x = 1 - 2 d / (m (m - 1)) on complete rankings. Requires complete
// rankings over at least two objects.
double tau_x(const Ranking& r1, const Ranking& r2);

// Generalized (score-matrix) Kendall correlation; undefined when either
// ranking is all-tied. Requires complete rankings.
double kendall_tau(const Ranking& r1, const Ranking& r2);

// Spearman's rho, 1 - 6 * sum(d^2) / (m^3 - m), on dense ranks. Defined for
// complete tie-free rankings of at least two objects.
double spearman_rho(const Ranking& r1, const Ranking& r2);

// Returns `r` with objects permuted into `labels` order. Throws if the label
// sets differ.
Ranking align_to_labels(const Ranking& r, const std::vector<std::string>& labels);

}  // namespace medrank
