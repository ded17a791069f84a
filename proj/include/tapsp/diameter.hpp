#pragma once

#include <optional>
#include <vector>

#include "tapsp/threshold_neg.hpp"
#include "tapsp/threshold_pos.hpp"

namespace tapsp {

enum class WeightMode { general, positive };

struct DiameterConfig {
  WeightMode mode = WeightMode::general;
  ThresholdConfig threshold;
  PositiveOptions positive;
  /// Full binary-search restarts allowed after an inconsistent probe sequence.
  int max_restarts = 8;
};

struct Probe {
  Weight d = 0;
  bool all_reported = false;
};

struct DiameterResult {
  std::optional<Weight> value;  // nullopt means +inf
  std::vector<VertexPair> witnesses;
  std::vector<Probe> probes;
  int restarts = 0;
};

/// Pairs reported at threshold d, by the solver matching `mode`.
BoolMatrix threshold_report(const Graph& g, Weight d, const DiameterConfig& config, Rng& rng);

/// Largest distance over ordered pairs (u,v), u = v included, by binary search over
/// threshold probes. Throws NegativeCycleError or ContractError on mode violations.
DiameterResult diameter(const Graph& g, const DiameterConfig& config, Rng& rng);

/// report(d) minus report(d-1); throws Error when empty, i.e. d is not the diameter.
std::vector<VertexPair> diameter_witnesses(const Graph& g, Weight d, const DiameterConfig& config, Rng& rng);

}  // namespace tapsp
