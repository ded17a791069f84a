#include "tapsp/diameter.hpp"

namespace tapsp {

namespace {

constexpr std::uint64_t kVerifyStream = 1ULL << 32;

std::vector<VertexPair> difference(const BoolMatrix& hi, const BoolMatrix& lo) {
  std::vector<VertexPair> out;
  for (const VertexPair& p : hi.pairs())
    if (!lo.get(static_cast<std::size_t>(p.u), static_cast<std::size_t>(p.v))) out.push_back(p);
  return out;
}

bool monotone(const std::vector<Probe>& probes) {
  for (const Probe& a : probes)
    for (const Probe& b : probes)
      if (a.d < b.d && a.all_reported && !b.all_reported) return false;
  return true;
}

}  // namespace

BoolMatrix threshold_report(const Graph& g, Weight d, const DiameterConfig& config, Rng& rng) {
  if (config.mode == WeightMode::positive) return threshold_apsp_pos(g, d, config.positive);
  ThresholdReport report = threshold_apsp_neg(g, d, config.threshold, rng);
  return std::move(report.reported);
}

DiameterResult diameter(const Graph& g, const DiameterConfig& config, Rng& rng) {
  if (config.mode == WeightMode::positive && !g.positive_weights())
    throw ContractError("diameter: positive mode requires weights in {1..M}");
  if (config.mode == WeightMode::general)
    if (auto cycle = find_negative_cycle(g); !cycle.empty()) throw NegativeCycleError(std::move(cycle));

  DiameterResult result;
  const auto n = static_cast<std::size_t>(g.n());
  if (n == 0) {
    result.value = 0;
    return result;
  }
  const BoolMatrix closure = transitive_closure(g);
  if (!closure.all()) {
    BoolMatrix full(n, n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) full.set(u, v);
    result.witnesses = difference(full, closure);
    return result;
  }

  const Weight top = g.max_weight() * static_cast<Weight>(n - 1);
  const Weight bottom = config.mode == WeightMode::positive && n >= 2 ? 1 : 0;
  const std::uint64_t master = rng.next();

  for (int restart = 0; restart <= config.max_restarts; ++restart) {
    const std::uint64_t restart_seed = Rng::derive(master, static_cast<std::uint64_t>(restart));
    std::uint64_t stream = 0;
    auto probe = [&](Weight d, std::uint64_t s) {
      Rng probe_rng(Rng::derive(restart_seed, s));
      return threshold_report(g, d, config, probe_rng);
    };

    result.probes.clear();
    Weight lo = bottom, hi = top;  // report(hi) is full
    while (lo < hi) {
      const Weight mid = lo + (hi - lo) / 2;
      const bool all = probe(mid, stream++).all();
      result.probes.push_back({mid, all});
      if (all) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }

    const Weight d = lo;
    const BoolMatrix at = probe(d, kVerifyStream + stream);
    const BoolMatrix below = probe(d - 1, kVerifyStream + stream + 1);
    bool consistent = at.all() && !below.all() && monotone(result.probes);
    if (consistent && config.threshold.verify && config.mode == WeightMode::general) {
      consistent = probe(d, kVerifyStream + stream + 2).all() && !probe(d - 1, kVerifyStream + stream + 3).all();
    }
    if (!consistent) {
      result.restarts = restart + 1;
      continue;
    }
    result.value = d;
    result.witnesses = difference(at, below);
    if (result.witnesses.empty()) throw Error("diameter: no witness pair at the located value");
    return result;
  }
  throw Error("diameter: inconsistent threshold probes after all restarts");
}

std::vector<VertexPair> diameter_witnesses(const Graph& g, Weight d, const DiameterConfig& config, Rng& rng) {
  const BoolMatrix at = threshold_report(g, d, config, rng);
  const BoolMatrix below = threshold_report(g, d - 1, config, rng);
  std::vector<VertexPair> out = difference(at, below);
  if (out.empty() || !at.all()) throw Error("diameter_witnesses: " + std::to_string(d) + " is not the diameter");
  return out;
}

}  // namespace tapsp
