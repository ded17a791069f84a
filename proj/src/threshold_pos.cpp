#include "tapsp/threshold_pos.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "tapsp/matprod.hpp"

namespace tapsp {

namespace {

Weight floor_div2(Weight x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
Weight ceil_div2(Weight x) { return -floor_div2(-x); }

void collect(Weight k, Weight m, std::set<Weight>& out, std::set<Weight>& expanded) {
  if (!expanded.insert(k).second) return;
  if (k <= m + 1) {
    for (Weight i = 0; i <= k; ++i) out.insert(i);
    return;
  }
  out.insert(k);
  const Interval r = split_range(k, m);
  for (Weight i = r.lo; i <= r.hi; ++i) collect(i, m, out, expanded);
}

const BoolMatrix& lookup(const AkFamily& source, const AkFamily& primal, Weight k, Weight m) {
  const AkFamily& family = k <= m + 1 ? primal : source;
  auto it = family.find(k);
  if (it == family.end()) throw ContractError("level_step: missing A_" + std::to_string(k));
  return it->second;
}

}  // namespace

std::vector<Interval> FSet::runs() const {
  std::vector<Interval> out;
  for (Weight x : members) {
    if (!out.empty() && out.back().hi + 1 == x) {
      out.back().hi = x;
    } else {
      out.push_back({x, x});
    }
  }
  return out;
}

Interval split_range(Weight k, Weight max_weight) {
  return {floor_div2(k - max_weight), ceil_div2(k + max_weight)};
}

FSet f_set(Weight k, Weight max_weight) {
  if (k < 0) throw ContractError("f_set: k must be non-negative");
  if (max_weight < 1) throw ContractError("f_set: M must be positive");
  std::set<Weight> members, expanded;
  collect(k, max_weight, members, expanded);
  return {k, max_weight, {members.begin(), members.end()}};
}

LevelPlan level_plan(Weight d, Weight max_weight) {
  if (d < 1) throw ContractError("level_plan: d must be positive");
  if (max_weight < 1) throw ContractError("level_plan: M must be positive");
  LevelPlan plan{d, max_weight, {{d, d}}};
  const Weight primal = max_weight + 1;
  while (plan.levels.back().hi > primal) {
    const Interval cur = plan.levels.back();
    // Split ranges are monotone in k, so the union over the non-primal part is one interval.
    const Weight first = std::max(cur.lo, primal + 1);
    plan.levels.push_back({split_range(first, max_weight).lo, split_range(cur.hi, max_weight).hi});
  }
  return plan;
}

AkFamily primal_distances(const Graph& g, const RingOptions& ring) {
  if (!g.positive_weights()) throw ContractError("primal_distances: weights must lie in {1..M}");
  const auto n = static_cast<std::size_t>(g.n());
  const Weight bound = g.max_weight() + 1;
  WeightMatrix d = truncate(to_weight_matrix(g), bound);
  const int rounds = std::bit_width(static_cast<std::uint64_t>(bound)) + 1;
  for (int r = 0; r < rounds; ++r) d = truncate(min_merge(d, dist_product_fast(d, d, EntryBound{bound}, ring)), bound);

  AkFamily family;
  for (Weight k = 0; k <= bound; ++k) {
    BoolMatrix a = BoolMatrix::identity(n);
    if (k > 0)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (d(u, v) <= k) a.set(u, v);
    family.emplace(k, std::move(a));
  }
  return family;
}

AkFamily level_step(const AkFamily& source_family, const AkFamily& primal, Interval source, Interval targets,
                    std::size_t n, Weight max_weight, const LevelStepOptions& options) {
  AkFamily out;
  const Weight primal_bound = max_weight + 1;
  std::vector<Weight> composite;
  for (Weight k = targets.lo; k <= targets.hi; ++k) {
    if (k <= primal_bound) {
      out.emplace(k, lookup(source_family, primal, k, max_weight));
    } else {
      composite.push_back(k);
    }
  }
  if (composite.empty()) return out;
  if (source.empty()) throw ContractError("level_step: empty source interval");

  if (options.engine == LevelEngine::polynomial) {
    PolyMatrix b{n, {}};
    for (Weight i = source.lo; i <= source.hi; ++i) b.coeffs.push_back(lookup(source_family, primal, i, max_weight));
    const PolyMatrix c = poly_square(b, options.ring);
    for (Weight k : composite) {
      const Weight q = k - 2 * source.lo;
      BoolMatrix a(n, n);
      if (q >= 0 && static_cast<std::size_t>(q) < c.terms()) a = c.coeffs[static_cast<std::size_t>(q)];
      out.emplace(k, std::move(a));
    }
  } else {
    for (Weight k : composite) {
      const Interval r = split_range(k, max_weight);
      BoolMatrix a(n, n);
      for (Weight i = r.lo; i <= r.hi; ++i)
        a |= bool_product(lookup(source_family, primal, i, max_weight), lookup(source_family, primal, k - i, max_weight));
      out.emplace(k, std::move(a));
    }
  }

  if (options.or_smallest_source)
    for (Weight k : composite)
      if (source.lo <= k) out.at(k) |= lookup(source_family, primal, source.lo, max_weight);
  return out;
}

BoolMatrix threshold_apsp_pos(const Graph& g, Weight d, const PositiveOptions& options) {
  const auto n = static_cast<std::size_t>(g.n());
  if (!g.positive_weights()) throw ContractError("threshold_apsp_pos: weights must lie in {1..M}");
  if (d < 0) return BoolMatrix(n, n);
  const Weight m = g.max_weight();
  AkFamily primal = primal_distances(g, options.step.ring);
  if (d <= m + 1) return primal.at(d);

  const LevelPlan plan = level_plan(d, m);
  AkFamily family;
  for (std::size_t j = plan.levels.size() - 1; j-- > 0;)
    family = level_step(family, primal, plan.levels[j + 1], plan.levels[j], n, m, options.step);
  return family.at(d);
}

}  // namespace tapsp
