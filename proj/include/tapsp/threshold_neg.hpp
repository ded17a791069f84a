#pragma once

#include <map>
#include <span>
#include <vector>

#include "tapsp/approx.hpp"
#include "tapsp/far_pairs.hpp"
#include "tapsp/graph.hpp"
#include "tapsp/schedule.hpp"

namespace tapsp {

/// Settings shared by the threshold, diameter and CLI layers.
struct ThresholdConfig {
  ScheduleOptions schedule;
  RingOptions ring;
  SsspVariant sssp = SsspVariant::binary_heap;
  /// Re-run with fresh derived seeds until the report passes its checks: the oracle
  /// for graphs up to verify_oracle_limit vertices, internal consistency otherwise.
  bool verify = false;
  int max_retries = 8;
  Vertex verify_oracle_limit = 64;
};

struct DeltaStar {
  WeightMatrix delta_star;
  /// Rejection margin and half-width of the exact-resolution window.
  Weight margin = 0;
};

struct PhaseStats {
  std::size_t accepted = 0;          // delta* <= d
  std::size_t rejected = 0;          // delta* > d + margin (or +inf)
  std::size_t window = 0;            // d < delta* <= d + margin
  std::size_t window_reported = 0;
  std::size_t consistency_failures = 0;
  int attempts = 1;
  bool first_attempt_ok = true;
  bool checked_against_oracle = false;
  bool verify_failed = false;        // every attempt failed its checks
  bool shortcut = false;             // decided by |d| > nM without running the pipeline
};

struct ThresholdReport {
  BoolMatrix reported;
  /// Exact distances determined for the window pairs (+inf where nothing was found).
  std::map<VertexPair, Weight> resolved_window;
  PhaseStats stats;
};

/// Everything the pipeline computed on its last attempt, for inspection in tests.
struct ThresholdTrace {
  LevelSchedule schedule;
  FarDistances far;
  std::vector<Rpdm> rpdms;
  std::vector<ApproxResult> approxes;
  DeltaStar delta_star;
  std::vector<WeightMatrix> targets;  // per level; empty when the window was empty
};

/// M * ceil(n^(1-beta-gamma)) + ceil(M n^(1-beta-gamma)) from level 0. Bounds both
/// 2 k_i for every level and the distance from d/2 of a midpoint hit of a window pair.
Weight window_margin(const LevelSchedule& schedule);

/// Entrywise minimum of delta_t and every delta_i*.
DeltaStar combine_delta_star(const FarDistances& far, std::span<const ApproxResult> approxes, Weight margin);

/// S = P restricted to [ceil(d/2) - K, floor(d/2) + K] and shifted down by
/// floor(d/2 - K); returns S * S + 2 floor(d/2 - K). Each finite entry is the
/// weight of a two-leg walk, so never below dist(u,v).
WeightMatrix target_distances(const Rpdm& p, Weight d, Weight margin, const RingOptions& ring = {});

/// All ordered pairs (u,v) with dist(u,v) <= d, for weights in {-M..M}.
/// Throws NegativeCycleError naming a cycle.
ThresholdReport threshold_apsp_neg(const Graph& g, Weight d, const ThresholdConfig& config, Rng& rng,
                                   ThresholdTrace* trace = nullptr);

}  // namespace tapsp
