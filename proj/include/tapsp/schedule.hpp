#pragma once

#include <optional>
#include <vector>

#include "tapsp/common.hpp"

namespace tapsp {

inline constexpr double kDefaultOmega = 2.376;

struct ScheduleOptions {
  double omega = kDefaultOmega;
  std::optional<double> force_beta;
  /// Replaces the computed level count (levels 0..force_levels-1).
  std::optional<int> force_levels;
};

/// One approximation level: pairs with t/2 <= c(u,v) < t are handled here.
struct Level {
  int index = 0;
  double t = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  /// Real-valued M * n^(1 - beta - gamma) and its ceiling.
  double k_real = 1.0;
  Weight k = 1;
};

struct LevelSchedule {
  Vertex n = 0;
  Weight max_weight = 1;
  double omega = kDefaultOmega;
  double beta = 0.0;
  double gamma = 0.0;  // gamma of level 0
  std::vector<Level> levels;

  /// n^(1-beta): pairs with at least this many edges are left to the far-pair pass.
  double far_threshold() const;
  /// ceil(n^(1-beta)).
  Weight far_threshold_ceil() const;
};

/// beta with n^beta = M^(w/(w+1)) n^((w-1)^2/(w+1)), clamped to [0, 1].
double compute_beta(Vertex n, Weight max_weight, double omega);

/// Levels i = 0..floor((1-beta) log2 n): t_i = n^(1-beta) / 2^i = n^(1-beta_i),
/// n^gamma_i = (n^(1-beta_i))^((w-1)/w), k_i = ceil(M n^(1-beta_i-gamma_i)).
/// Appends levels while some c in [1, ceil(t)-1] is left uncovered.
LevelSchedule build_schedule(Vertex n, Weight max_weight, const ScheduleOptions& options = {});

}  // namespace tapsp
