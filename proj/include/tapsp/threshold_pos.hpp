#pragma once

#include <map>
#include <vector>

#include "tapsp/graph.hpp"
#include "tapsp/ring.hpp"

namespace tapsp {

/// Closed integer range [lo, hi].
struct Interval {
  Weight lo = 0;
  Weight hi = -1;

  bool empty() const { return hi < lo; }
  Weight size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(Weight x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// F(k, M): {0..k} when k <= M+1, otherwise {k} plus F(i, M) for i in
/// [floor((k-M)/2), ceil((k+M)/2)].
struct FSet {
  Weight k = 0;
  Weight max_weight = 1;
  std::vector<Weight> members;  // sorted, distinct

  /// Maximal runs of consecutive members, ascending.
  std::vector<Interval> runs() const;
};

FSet f_set(Weight k, Weight max_weight);

/// Levels of the recursion behind F(d, M); level 0 is {d}, the last is all primal.
struct LevelPlan {
  Weight d = 0;
  Weight max_weight = 1;
  std::vector<Interval> levels;

  Weight primal_bound() const { return max_weight + 1; }
};

LevelPlan level_plan(Weight d, Weight max_weight);

/// Range of i in A_k = OR_i A_i A_{k-i}: [floor((k-M)/2), ceil((k+M)/2)].
Interval split_range(Weight k, Weight max_weight);

/// A_k[u,v] = (dist(u,v) <= k), keyed by k.
using AkFamily = std::map<Weight, BoolMatrix>;

/// A_0..A_{M+1} by truncated min-plus squaring. Throws ContractError on a
/// weight outside {1..M}.
AkFamily primal_distances(const Graph& g, const RingOptions& ring = {});

enum class LevelEngine { polynomial, direct };

struct LevelStepOptions {
  LevelEngine engine = LevelEngine::polynomial;
  RingOptions ring;
  /// OR A_{min source} into every target it certifies. Redundant whenever the
  /// family contains the diagonal; kept as a guard.
  bool or_smallest_source = true;
};

/// Computes A_k for every k in `targets` from the matrices over `source`
/// (primal indices answered from `primal`). Throws ContractError when a source
/// matrix is missing.
AkFamily level_step(const AkFamily& source_family, const AkFamily& primal, Interval source, Interval targets,
                    std::size_t n, Weight max_weight, const LevelStepOptions& options = {});

struct PositiveOptions {
  LevelStepOptions step;
};

/// Deterministic set of pairs with dist(u,v) <= d for weights in {1..M}.
BoolMatrix threshold_apsp_pos(const Graph& g, Weight d, const PositiveOptions& options = {});

}  // namespace tapsp
