#pragma once

#include <vector>

#include "tapsp/graph.hpp"
#include "tapsp/rng.hpp"
#include "tapsp/rpdm.hpp"

namespace tapsp {

/// delta_t(u,v) = min over x in X of dist(u,x) + dist(x,v). Never below dist(u,v);
/// equal to it whenever X hits a shortest path of the pair, which the hitting-set size
/// guarantees w.h.p. for all pairs with c(u,v) >= t.
struct FarDistances {
  WeightMatrix delta_t;
  VertexSet hitting_set;
  Weight t = 1;
};

enum class SsspVariant { binary_heap, dense_scan };

/// min(ceil(8 n ln n / t), n) uniform vertices, and at least one vertex when n >= 1.
VertexSet hitting_set(Vertex n, Weight t, Rng& rng);

/// Exact dist(x, .) (or dist(., x) with reversed) via Dijkstra on w(u,v) + h(u) - h(v).
/// Throws ContractError when the potentials leave an edge negative.
std::vector<Weight> sssp_from(const Graph& g, const Potentials& pot, Vertex x, bool reversed,
                              SsspVariant variant = SsspVariant::binary_heap);

/// Throws NegativeCycleError.
FarDistances compute_delta_t(const Graph& g, Weight t, Rng& rng, SsspVariant variant = SsspVariant::binary_heap);

}  // namespace tapsp
