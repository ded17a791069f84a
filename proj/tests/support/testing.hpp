#pragma once

#include <vector>

#include "tapsp/graph.hpp"
#include "tapsp/matrix.hpp"
#include "tapsp/rng.hpp"

namespace tapsp::testing {

/// Matrix with entries uniform in [-bound, bound], each +inf with probability inf_rate.
WeightMatrix random_matrix(std::size_t rows, std::size_t cols, Weight bound, double inf_rate, Rng& rng);

BoolMatrix random_bool(std::size_t rows, std::size_t cols, double density, Rng& rng);

/// Negative-cycle-free graph with weights in [-M, M] (mixed sign).
Graph random_general(Vertex n, Weight max_weight, double density, std::uint64_t seed);
/// Graph with weights in [1, M].
Graph random_positive(Vertex n, Weight max_weight, double density, std::uint64_t seed);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 with every arc weighing w.
Graph directed_cycle(Vertex n, Weight w, Weight max_weight);

/// Candidate thresholds: fixed values plus the 25/50/75/100th percentiles of the
/// finite distances.
std::vector<Weight> percentile_thresholds(const WeightMatrix& dist);

/// Naive min-plus power W^(n-1) as an independent distance oracle.
WeightMatrix minplus_power(const WeightMatrix& w);

}  // namespace tapsp::testing
