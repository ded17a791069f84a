#include "tapsp/threshold_neg.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tapsp/matprod.hpp"
#include "tapsp/oracle.hpp"

namespace tapsp {

namespace {

Weight floor_div2(Weight x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
Weight ceil_div2(Weight x) { return -floor_div2(-x); }

ThresholdReport trivial_report(const Graph& g, Weight d) {
  const auto n = static_cast<std::size_t>(g.n());
  ThresholdReport report{BoolMatrix(n, n), {}, {}};
  report.stats.shortcut = true;
  const Weight span = static_cast<Weight>(g.n()) * g.max_weight();
  if (d > span) {
    report.reported = transitive_closure(g);
  } else if (n == 1 && d >= 0) {
    report.reported.set(0, 0);
  }
  return report;
}

ThresholdReport run_pipeline(const Graph& g, Weight d, const ThresholdConfig& config, Rng& rng,
                             ThresholdTrace& trace) {
  const Vertex n = g.n();
  const auto nz = static_cast<std::size_t>(n);
  const Weight m = g.max_weight();
  const WeightMatrix w = to_weight_matrix(g);

  trace.schedule = build_schedule(n, m, config.schedule);
  trace.far = compute_delta_t(g, trace.schedule.far_threshold_ceil(), rng, config.sssp);
  trace.rpdms.clear();
  trace.approxes.clear();
  trace.targets.clear();
  for (const Level& level : trace.schedule.levels) {
    trace.rpdms.push_back(build_rpdm(w, m, level.beta, level.gamma, rng, config.ring));
    trace.approxes.push_back(additive_approximate(trace.rpdms.back(), level, rng, config.ring));
  }

  const Weight margin = window_margin(trace.schedule);
  trace.delta_star = combine_delta_star(trace.far, trace.approxes, margin);
  // Zero-edge walks: dist(v,v) = 0 on graphs without negative cycles.
  const WeightMatrix zero_walks = WeightMatrix::identity(nz);
  trace.delta_star.delta_star = min_merge(trace.delta_star.delta_star, zero_walks);
  const WeightMatrix& approx = trace.delta_star.delta_star;

  ThresholdReport report{BoolMatrix(nz, nz), {}, {}};
  std::vector<VertexPair> window;
  for (std::size_t u = 0; u < nz; ++u)
    for (std::size_t v = 0; v < nz; ++v) {
      const Weight e = approx(u, v);
      if (!is_inf(e) && e <= d) {
        report.reported.set(u, v);
        ++report.stats.accepted;
      } else if (!is_inf(e) && e <= d + margin) {
        window.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      } else {
        ++report.stats.rejected;
      }
    }
  report.stats.window = window.size();
  if (window.empty()) return report;

  for (const Rpdm& p : trace.rpdms) trace.targets.push_back(target_distances(p, d, margin, config.ring));
  for (const VertexPair& pr : window) {
    const auto u = static_cast<std::size_t>(pr.u), v = static_cast<std::size_t>(pr.v);
    Weight exact = std::min(trace.far.delta_t(u, v), zero_walks(u, v));
    for (const WeightMatrix& t : trace.targets) exact = std::min(exact, t(u, v));
    report.resolved_window.emplace(pr, exact);
    // The exact value can never exceed delta* nor undercut it by more than the margin.
    if (is_inf(exact) || exact > approx(u, v) || exact < approx(u, v) - margin) ++report.stats.consistency_failures;
    if (!is_inf(exact) && exact <= d) {
      report.reported.set(u, v);
      ++report.stats.window_reported;
    }
  }
  return report;
}

}  // namespace

Weight window_margin(const LevelSchedule& schedule) {
  const Level& top = schedule.levels.front();
  const double segment = std::pow(static_cast<double>(schedule.n), 1.0 - top.beta - top.gamma);
  const auto segment_edges = std::max<Weight>(1, static_cast<Weight>(std::ceil(segment - 1e-9)));
  return schedule.max_weight * segment_edges + top.k;
}

DeltaStar combine_delta_star(const FarDistances& far, std::span<const ApproxResult> approxes, Weight margin) {
  DeltaStar out{far.delta_t, margin};
  for (const ApproxResult& a : approxes) out.delta_star = min_merge(out.delta_star, a.delta_star);
  return out;
}

WeightMatrix target_distances(const Rpdm& p, Weight d, Weight margin, const RingOptions& ring) {
  const Weight lo = ceil_div2(d) - margin;
  const Weight hi = floor_div2(d) + margin;
  const Weight shift = floor_div2(d - 2 * margin);
  const WeightMatrix s = window_shift(p.p, lo, hi, shift);
  return add_finite(dist_product_fast(s, s, ring), 2 * shift);
}

ThresholdReport threshold_apsp_neg(const Graph& g, Weight d, const ThresholdConfig& config, Rng& rng,
                                   ThresholdTrace* trace) {
  if (auto cycle = find_negative_cycle(g); !cycle.empty()) throw NegativeCycleError(std::move(cycle));
  const Weight span = static_cast<Weight>(g.n()) * g.max_weight();
  if (g.n() <= 1 || d < -span || d > span) return trivial_report(g, d);

  ThresholdTrace local;
  ThresholdTrace& t = trace ? *trace : local;
  if (!config.verify) return run_pipeline(g, d, config, rng, t);

  std::optional<BoolMatrix> truth;
  if (g.n() <= config.verify_oracle_limit)
    truth = oracle::brute_threshold(oracle::floyd_warshall(to_weight_matrix(g)), d);

  ThresholdReport report;
  const std::uint64_t base_seed = rng.seed();
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    Rng attempt_rng = attempt == 0 ? rng : Rng(Rng::derive(base_seed, static_cast<std::uint64_t>(attempt)));
    report = run_pipeline(g, d, config, attempt_rng, t);
    const bool ok = truth ? report.reported == *truth : report.stats.consistency_failures == 0;
    report.stats.attempts = attempt + 1;
    report.stats.checked_against_oracle = truth.has_value();
    if (attempt == 0) rng = attempt_rng;
    report.stats.first_attempt_ok = attempt == 0 && ok;
    report.stats.verify_failed = !ok;
    if (ok) break;
  }
  return report;
}

}  // namespace tapsp
