#include "support/testing.hpp"

#include <algorithm>

#include "tapsp/matprod.hpp"

namespace tapsp::testing {

WeightMatrix random_matrix(std::size_t rows, std::size_t cols, Weight bound, double inf_rate, Rng& rng) {
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rng.uniform01() < inf_rate ? kInf : rng.uniform_int(-bound, bound);
  return m;
}

BoolMatrix random_bool(std::size_t rows, std::size_t cols, double density, Rng& rng) {
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.uniform01() < density) m.set(i, j);
  return m;
}

Graph random_general(Vertex n, Weight max_weight, double density, std::uint64_t seed) {
  return gen_random({.n = n,
                     .density = density,
                     .wmin = -max_weight,
                     .wmax = max_weight,
                     .seed = seed,
                     .require_no_negative_cycle = true});
}

Graph random_positive(Vertex n, Weight max_weight, double density, std::uint64_t seed) {
  return gen_random({.n = n, .density = density, .wmin = 1, .wmax = max_weight, .seed = seed});
}

Graph directed_cycle(Vertex n, Weight w, Weight max_weight) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n && n > 1; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n), w});
  return Graph(n, max_weight, edges);
}

std::vector<Weight> percentile_thresholds(const WeightMatrix& dist) {
  std::vector<Weight> finite;
  for (std::size_t u = 0; u < dist.rows(); ++u)
    for (std::size_t v = 0; v < dist.cols(); ++v)
      if (!is_inf(dist(u, v))) finite.push_back(dist(u, v));
  std::sort(finite.begin(), finite.end());
  std::vector<Weight> out;
  if (finite.empty()) return out;
  for (int pct : {25, 50, 75, 100}) {
    const std::size_t idx = std::min(finite.size() - 1, finite.size() * static_cast<std::size_t>(pct) / 100);
    out.push_back(finite[idx]);
  }
  return out;
}

WeightMatrix minplus_power(const WeightMatrix& w) {
  WeightMatrix d = w;
  for (std::size_t i = 2; i < w.rows(); ++i) d = dist_product_naive(d, w);
  return d;
}

}  // namespace tapsp::testing
