#include "tapsp/oracle.hpp"

#include <algorithm>

namespace tapsp::oracle {

WeightMatrix floyd_warshall(const WeightMatrix& w) {
  if (!w.square()) throw ContractError("floyd_warshall: matrix must be square");
  const std::size_t n = w.rows();
  WeightMatrix d = w;
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::min<Weight>(d(i, i), 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (is_inf(d(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_inf(d(k, j))) continue;
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) < 0) throw NegativeCycleError({static_cast<Vertex>(i)});
  return d;
}

WeightMatrix min_edge_counts(const WeightMatrix& w, const WeightMatrix& dist) {
  const std::size_t n = w.rows();
  WeightMatrix counts(n, n);
  WeightMatrix walk(n, n);  // d_k: best weight using at most k edges
  for (std::size_t i = 0; i < n; ++i) {
    walk(i, i) = 0;
    if (dist(i, i) == 0) counts(i, i) = 0;
  }
  for (std::size_t k = 1; k < std::max<std::size_t>(n, 1); ++k) {
    WeightMatrix next = walk;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) {
        if (is_inf(walk(i, m))) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (m == j || is_inf(w(m, j))) continue;
          next(i, j) = std::min(next(i, j), walk(i, m) + w(m, j));
        }
      }
    walk = std::move(next);
    bool pending = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (is_inf(counts(i, j)) && !is_inf(dist(i, j))) {
          if (walk(i, j) == dist(i, j))
            counts(i, j) = static_cast<Weight>(k);
          else
            pending = true;
        }
    if (!pending) break;
  }
  return counts;
}

BoolMatrix brute_threshold(const WeightMatrix& dist, Weight d) {
  BoolMatrix out(dist.rows(), dist.cols());
  for (std::size_t i = 0; i < dist.rows(); ++i)
    for (std::size_t j = 0; j < dist.cols(); ++j)
      if (!is_inf(dist(i, j)) && dist(i, j) <= d) out.set(i, j);
  return out;
}

Tables tables(const WeightMatrix& w) {
  Tables t;
  t.dist = floyd_warshall(w);
  t.cmat = min_edge_counts(w, t.dist);
  return t;
}

DiameterTruth diameter(const WeightMatrix& dist) {
  DiameterTruth truth;
  const std::size_t n = dist.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_inf(dist(i, j))) truth.witnesses.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  if (!truth.witnesses.empty()) return truth;

  Weight best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, dist(i, j));
  truth.value = best;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist(i, j) == best) truth.witnesses.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return truth;
}

}  // namespace tapsp::oracle
