#pragma once

#include "tapsp/ring.hpp"
#include "tapsp/rng.hpp"
#include "tapsp/rpdm.hpp"
#include "tapsp/schedule.hpp"

namespace tapsp {

/// delta_i* = k_i * Q_i. Every finite entry is at least dist(u,v); for pairs with
/// t_i/2 <= c(u,v) < t_i it is at most dist(u,v) + 2 k_i w.h.p.
struct ApproxResult {
  WeightMatrix delta_star;
  Level level;
  VertexSet sample;
};

/// R = ceil(P / k_i); X = sample(V, 12 n^(1-gamma_i) ln n); Q = R[V,X] * R[X,V].
/// Throws ContractError when P was not built with the level's (beta_i, gamma_i).
ApproxResult additive_approximate(const Rpdm& p, const Level& level, Rng& rng, const RingOptions& ring = {});

}  // namespace tapsp
