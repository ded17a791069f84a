#pragma once

#include <optional>
#include <vector>

#include "tapsp/common.hpp"
#include "tapsp/matrix.hpp"

// Brute-force ground truth. Nothing here calls into the product kernels, so the
// oracle stays independent of the code it checks.

namespace tapsp::oracle {

/// Exact distances. Throws NegativeCycleError when a diagonal entry turns negative.
WeightMatrix floyd_warshall(const WeightMatrix& w);

/// c(u,v): fewest edges over all shortest u->v paths (+inf where unreachable),
/// from the DP d_k = min(d_{k-1}, d_{k-1} * W).
WeightMatrix min_edge_counts(const WeightMatrix& w, const WeightMatrix& dist);

/// Pairs with dist <= d.
BoolMatrix brute_threshold(const WeightMatrix& dist, Weight d);

struct Tables {
  WeightMatrix dist;
  WeightMatrix cmat;
};

Tables tables(const WeightMatrix& w);

struct DiameterTruth {
  std::optional<Weight> value;       // nullopt for +inf
  std::vector<VertexPair> witnesses;  // argmax pairs, or unreachable pairs when infinite
};

DiameterTruth diameter(const WeightMatrix& dist);

}  // namespace tapsp::oracle
