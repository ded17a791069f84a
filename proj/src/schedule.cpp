#include "tapsp/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tapsp {

double LevelSchedule::far_threshold() const { return std::pow(static_cast<double>(n), 1.0 - beta); }

Weight LevelSchedule::far_threshold_ceil() const {
  return std::max<Weight>(1, static_cast<Weight>(std::ceil(far_threshold() - 1e-9)));
}

double compute_beta(Vertex n, Weight max_weight, double omega) {
  if (n < 2) throw ContractError("compute_beta: need n >= 2");
  if (max_weight < 1) throw ContractError("compute_beta: need M >= 1");
  if (omega < 2.0 || omega > 3.0) throw ContractError("compute_beta: omega must lie in [2, 3]");
  const double log_n_m = std::log(static_cast<double>(max_weight)) / std::log(static_cast<double>(n));
  const double beta = omega / (omega + 1.0) * log_n_m + (omega - 1.0) * (omega - 1.0) / (omega + 1.0);
  return std::clamp(beta, 0.0, 1.0);
}

namespace {

Level make_level(int index, Vertex n, Weight max_weight, double omega, double t0) {
  const double ln_n = std::log(static_cast<double>(n));
  Level lv;
  lv.index = index;
  lv.t = t0 / std::ldexp(1.0, index);
  lv.beta = 1.0 - std::log(lv.t) / ln_n;
  lv.gamma = (1.0 - lv.beta) * (omega - 1.0) / omega;
  lv.k_real = static_cast<double>(max_weight) * std::pow(static_cast<double>(n), 1.0 - lv.beta - lv.gamma);
  lv.k = std::max<Weight>(1, static_cast<Weight>(std::ceil(lv.k_real - 1e-9)));
  return lv;
}

bool covered(const LevelSchedule& s, Weight c) {
  if (static_cast<double>(c) >= s.far_threshold()) return true;
  for (const Level& lv : s.levels)
    if (lv.t / 2.0 <= static_cast<double>(c) && static_cast<double>(c) < lv.t) return true;
  return false;
}

}  // namespace

LevelSchedule build_schedule(Vertex n, Weight max_weight, const ScheduleOptions& options) {
  LevelSchedule s;
  s.n = n;
  s.max_weight = max_weight;
  s.omega = options.omega;
  if (options.force_beta) {
    if (*options.force_beta < 0.0 || *options.force_beta > 1.0)
      throw ContractError("build_schedule: forced beta outside [0, 1]");
    s.beta = *options.force_beta;
  } else {
    s.beta = compute_beta(n, max_weight, options.omega);
  }
  if (n < 2) throw ContractError("build_schedule: need n >= 2");

  const double t0 = s.far_threshold();
  int count = static_cast<int>(std::floor((1.0 - s.beta) * std::log2(static_cast<double>(n)) + 1e-9)) + 1;
  if (options.force_levels) {
    if (*options.force_levels < 1) throw ContractError("build_schedule: need at least one level");
    count = *options.force_levels;
  }
  for (int i = 0; i < count; ++i) s.levels.push_back(make_level(i, n, max_weight, options.omega, t0));

  if (!options.force_levels) {
    const Weight top = s.far_threshold_ceil();
    for (Weight c = 1; c < top; ++c)
      while (!covered(s, c) && s.levels.size() < 64)
        s.levels.push_back(make_level(static_cast<int>(s.levels.size()), n, max_weight, options.omega, t0));
  }
  s.gamma = s.levels.front().gamma;
  return s;
}

}  // namespace tapsp
