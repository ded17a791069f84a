#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tapsp/common.hpp"
#include "tapsp/matrix.hpp"
#include "tapsp/ring.hpp"
#include "tapsp/rng.hpp"

namespace tapsp {

/// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;

VertexSet all_vertices(Vertex n);

/// min(ceil(count), |pool|) vertices drawn uniformly without replacement, returned
/// sorted. When ceil(count) >= |pool| the pool itself is returned and no randomness
/// is consumed.
VertexSet sample(std::span<const Vertex> pool, double count, Rng& rng);

/// Redundant partial distance matrix: a matrix P of walk weights such that near pairs
/// (c(u,v) <= n^(1-beta)) have a vertex x with P[u,x] + P[x,v] = dist(u,v), and such
/// vertices occur in every ceil(n^(1-beta-gamma))-edge segment of some shortest path.
struct Rpdm {
  WeightMatrix p;
  double beta = 0.0;
  double gamma = 0.0;
  VertexSet bridge_set;
  Weight max_weight = 1;

  Vertex n() const { return static_cast<Vertex>(p.rows()); }
};

/// Number of iterations of the shrinking-sample loop and the total iteration count.
struct RpdmLoopBounds {
  int sampling_rounds = 0;
  int total_rounds = 0;
};
RpdmLoopBounds rpdm_loop_bounds(Vertex n, double beta, double gamma);

/// ceil(M * (3/2)^round), the truncation threshold of a round.
Weight rpdm_truncation(Weight max_weight, int round);

/// Called after each round with the round index (1-based) and the current P.
using RpdmObserver = std::function<void(int, const WeightMatrix&)>;

/// Builds P from the weight matrix W (diagonal 0) by bridging-set squaring:
/// rounds 1..sampling_rounds shrink the bridging set B by sampling 9 n ln n / s
/// vertices, the remaining rounds keep B fixed; every round routes P[V,B] and P[B,V]
/// through B using products of matrices truncated at s*M, s = (3/2)^round.
Rpdm build_rpdm(const WeightMatrix& w, Weight max_weight, double beta, double gamma, Rng& rng,
                const RingOptions& ring = {}, const RpdmObserver& observer = {});

/// ceil(n^(1-beta-gamma)), the segment length of the second property.
std::size_t rpdm_segment_length(Vertex n, double beta, double gamma);

/// Pairs with c(u,v) <= n^(1-beta) and finite distance lacking x with P[u,x] + P[x,v] = dist(u,v).
std::vector<VertexPair> check_rpdm_property1(const Rpdm& r, const WeightMatrix& dist, const WeightMatrix& cmat);

/// Pairs with c(u,v) <= n^(1-beta) for which no c(u,v)-edge shortest path has a hit
/// vertex (P[u,x] + P[x,v] = dist(u,v)) in every segment of `segment` edges.
/// Decided by a DP over (vertex, edges used, vertices since the last hit) restricted to
/// edges that lie on shortest paths.
std::vector<VertexPair> check_rpdm_property2(const Rpdm& r, const WeightMatrix& w, const WeightMatrix& dist,
                                             const WeightMatrix& cmat, std::size_t segment);

}  // namespace tapsp
