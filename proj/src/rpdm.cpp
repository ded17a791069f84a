#include "tapsp/rpdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gmpxx.h>

#include "tapsp/matprod.hpp"

namespace tapsp {

namespace {

// ceil(x) that ignores floating noise just above an integer.
int ceil_tolerant(double x) {
  if (!(x > 0)) return 0;
  return static_cast<int>(std::ceil(x - 1e-9));
}

double near_limit(Vertex n, double beta) { return std::pow(static_cast<double>(n), 1.0 - beta); }

}  // namespace

VertexSet all_vertices(Vertex n) {
  VertexSet v(static_cast<std::size_t>(std::max<Vertex>(n, 0)));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

VertexSet sample(std::span<const Vertex> pool, double count, Rng& rng) {
  const double wanted = std::ceil(count);
  if (!(wanted > 0)) return {};
  if (wanted >= static_cast<double>(pool.size())) return VertexSet(pool.begin(), pool.end());
  const auto take = static_cast<std::size_t>(wanted);
  VertexSet work(pool.begin(), pool.end());
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(work.size() - i));
    std::swap(work[i], work[j]);
  }
  work.resize(take);
  std::sort(work.begin(), work.end());
  return work;
}

RpdmLoopBounds rpdm_loop_bounds(Vertex n, double beta, double gamma) {
  const double ln_n = std::log(static_cast<double>(std::max<Vertex>(n, 1)));
  const double ln_base = std::log(1.5);
  RpdmLoopBounds b;
  b.sampling_rounds = ceil_tolerant((1.0 - beta - gamma) * ln_n / ln_base);
  b.total_rounds = std::max(b.sampling_rounds, ceil_tolerant((std::log(2.0) + (1.0 - beta) * ln_n) / ln_base));
  return b;
}

Weight rpdm_truncation(Weight max_weight, int round) {
  mpz_class num = max_weight;
  mpz_class den = 1;
  for (int i = 0; i < round; ++i) {
    num *= 3;
    den *= 2;
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (q > kInf / 8) return kInf / 8;
  return static_cast<Weight>(q.get_si());
}

std::size_t rpdm_segment_length(Vertex n, double beta, double gamma) {
  const double len = std::pow(static_cast<double>(std::max<Vertex>(n, 1)), 1.0 - beta - gamma);
  return static_cast<std::size_t>(std::max(1, ceil_tolerant(len)));
}

Rpdm build_rpdm(const WeightMatrix& w, Weight max_weight, double beta, double gamma, Rng& rng,
                const RingOptions& ring, const RpdmObserver& observer) {
  if (!w.square()) throw ContractError("build_rpdm: weight matrix must be square");
  if (beta < 0 || gamma < 0 || beta + gamma > 1.0 + 1e-12)
    throw ContractError("build_rpdm: need beta, gamma >= 0 and beta + gamma <= 1");

  const auto n = static_cast<Vertex>(w.rows());
  Rpdm r{w, beta, gamma, all_vertices(n), max_weight};
  const VertexSet everyone = all_vertices(n);
  const RpdmLoopBounds bounds = rpdm_loop_bounds(n, beta, gamma);
  const double n_ln_n = static_cast<double>(n) * std::log(static_cast<double>(std::max<Vertex>(n, 1)));

  for (int round = 1; round <= bounds.total_rounds; ++round) {
    const double s = std::pow(1.5, round);
    if (round <= bounds.sampling_rounds) r.bridge_set = sample(r.bridge_set, 9.0 * n_ln_n / s, rng);
    const Weight limit = rpdm_truncation(max_weight, round);
    const VertexSet& bridge = r.bridge_set;

    {
      const WeightMatrix left = r.p.select(everyone, bridge);
      const WeightMatrix via = dist_product_fast(truncate(left, limit), truncate(r.p.select(bridge, bridge), limit), ring);
      r.p.assign(everyone, bridge, min_merge(left, via));
    }
    {
      const WeightMatrix right = r.p.select(bridge, everyone);
      const WeightMatrix via = dist_product_fast(truncate(r.p.select(bridge, bridge), limit), truncate(right, limit), ring);
      r.p.assign(bridge, everyone, min_merge(right, via));
    }
    if (observer) observer(round, r.p);
  }
  return r;
}

std::vector<VertexPair> check_rpdm_property1(const Rpdm& r, const WeightMatrix& dist, const WeightMatrix& cmat) {
  const auto n = static_cast<std::size_t>(r.n());
  const double limit = near_limit(r.n(), r.beta) + 1e-9;
  std::vector<VertexPair> bad;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (is_inf(dist(u, v)) || is_inf(cmat(u, v)) || static_cast<double>(cmat(u, v)) > limit) continue;
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x)
        found = !is_inf(r.p(u, x)) && !is_inf(r.p(x, v)) && r.p(u, x) + r.p(x, v) == dist(u, v);
      if (!found) bad.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  return bad;
}

std::vector<VertexPair> check_rpdm_property2(const Rpdm& r, const WeightMatrix& w, const WeightMatrix& dist,
                                             const WeightMatrix& cmat, std::size_t segment) {
  const auto n = static_cast<std::size_t>(r.n());
  const double limit = near_limit(r.n(), r.beta) + 1e-9;
  const std::size_t max_gap = segment + 1;  // this many consecutive misses make a bad segment
  std::vector<VertexPair> bad;
  std::vector<char> hit(n);
  // gap[a]: fewest trailing non-hit vertices over walks reaching a; a smaller gap dominates.
  std::vector<std::size_t> gap, next;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !is_inf(w(a, b))) out[a].push_back(b);

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (is_inf(dist(u, v)) || is_inf(cmat(u, v)) || static_cast<double>(cmat(u, v)) > limit) continue;
      const Weight target = dist(u, v);
      const auto edges = static_cast<std::size_t>(cmat(u, v));
      for (std::size_t x = 0; x < n; ++x)
        hit[x] = !is_inf(r.p(u, x)) && !is_inf(r.p(x, v)) && r.p(u, x) + r.p(x, v) == target;

      gap.assign(n, max_gap);
      gap[u] = hit[u] ? 0 : 1;
      for (std::size_t step = 0; step < edges; ++step) {
        next.assign(n, max_gap);
        for (std::size_t a = 0; a < n; ++a) {
          if (gap[a] >= max_gap) continue;
          for (std::size_t b : out[a]) {
            if (is_inf(dist(b, v))) continue;
            // (a, b) must extend a shortest u->v path.
            if (dist(u, a) + w(a, b) != dist(u, b) || dist(u, b) + dist(b, v) != target) continue;
            next[b] = std::min(next[b], hit[b] ? 0 : gap[a] + 1);
          }
        }
        gap.swap(next);
      }
      if (gap[v] >= max_gap) bad.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  return bad;
}

}  // namespace tapsp
