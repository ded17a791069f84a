#include "tapsp/far_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "tapsp/parallel.hpp"

namespace tapsp {

VertexSet hitting_set(Vertex n, Weight t, Rng& rng) {
  if (t < 1) throw ContractError("hitting_set: t must be positive");
  if (n <= 0) return {};
  const double nd = static_cast<double>(n);
  const double count = std::max(1.0, 8.0 * nd * std::log(nd) / static_cast<double>(t));
  return sample(all_vertices(n), count, rng);
}

namespace {

struct Arc {
  Vertex to;
  Weight weight;  // reweighted, nonnegative
};

// Reweighted adjacency; for the reversed graph the potentials are negated.
std::vector<std::vector<Arc>> reweighted_adjacency(const Graph& g, const Potentials& pot, bool reversed) {
  const auto n = static_cast<std::size_t>(g.n());
  if (pot.h.size() != n) throw ContractError("sssp_from: potentials size mismatch");
  std::vector<std::vector<Arc>> adj(n);
  for (const Edge& e : g.edges()) {
    const Weight w_plus = e.weight + pot.h[static_cast<std::size_t>(e.from)] - pot.h[static_cast<std::size_t>(e.to)];
    if (w_plus < 0) throw ContractError("sssp_from: potentials leave a negative reweighted edge");
    if (reversed)
      adj[static_cast<std::size_t>(e.to)].push_back({e.from, w_plus});
    else
      adj[static_cast<std::size_t>(e.from)].push_back({e.to, w_plus});
  }
  return adj;
}

std::vector<Weight> dijkstra_heap(const std::vector<std::vector<Arc>>& adj, Vertex source) {
  std::vector<Weight> dist(adj.size(), kInf);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(x)]) continue;
    for (const Arc& a : adj[static_cast<std::size_t>(x)]) {
      const Weight cand = d + a.weight;
      if (cand < dist[static_cast<std::size_t>(a.to)]) {
        dist[static_cast<std::size_t>(a.to)] = cand;
        heap.push({cand, a.to});
      }
    }
  }
  return dist;
}

std::vector<Weight> dijkstra_dense(const std::vector<std::vector<Arc>>& adj, Vertex source) {
  const std::size_t n = adj.size();
  std::vector<Weight> dist(n, kInf);
  std::vector<char> done(n, 0);
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && !is_inf(dist[v]) && (best == n || dist[v] < dist[best])) best = v;
    if (best == n) break;
    done[best] = 1;
    for (const Arc& a : adj[best])
      dist[static_cast<std::size_t>(a.to)] = std::min(dist[static_cast<std::size_t>(a.to)], dist[best] + a.weight);
  }
  return dist;
}

std::vector<Weight> run_sssp(const std::vector<std::vector<Arc>>& adj, const Potentials& pot, Vertex x,
                             bool reversed, SsspVariant variant) {
  std::vector<Weight> dist = variant == SsspVariant::binary_heap ? dijkstra_heap(adj, x) : dijkstra_dense(adj, x);
  const Weight hx = pot.h[static_cast<std::size_t>(x)];
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (is_inf(dist[v])) continue;
    // forward: dist(x,v) = d+ - h(x) + h(v); reversed: dist(v,x) = d+ - h(v) + h(x)
    dist[v] = reversed ? dist[v] - pot.h[v] + hx : dist[v] - hx + pot.h[v];
  }
  return dist;
}

}  // namespace

std::vector<Weight> sssp_from(const Graph& g, const Potentials& pot, Vertex x, bool reversed, SsspVariant variant) {
  if (x < 0 || x >= g.n()) throw ContractError("sssp_from: source out of range");
  return run_sssp(reweighted_adjacency(g, pot, reversed), pot, x, reversed, variant);
}

FarDistances compute_delta_t(const Graph& g, Weight t, Rng& rng, SsspVariant variant) {
  const auto n = static_cast<std::size_t>(g.n());
  FarDistances far{WeightMatrix(n, n), hitting_set(g.n(), t, rng), t};
  const Potentials pot = johnson_potentials(g);
  const auto forward = reweighted_adjacency(g, pot, false);
  const auto backward = reweighted_adjacency(g, pot, true);

  const std::size_t hubs = far.hitting_set.size();
  std::vector<std::vector<Weight>> from(hubs), to(hubs);
  parallel_for(0, hubs, [&](std::size_t i) {
    from[i] = run_sssp(forward, pot, far.hitting_set[i], false, variant);
    to[i] = run_sssp(backward, pot, far.hitting_set[i], true, variant);
  });
  parallel_for(0, n, [&](std::size_t u) {
    auto row = far.delta_t.row(u);
    for (std::size_t i = 0; i < hubs; ++i) {
      const Weight head = to[i][u];
      if (is_inf(head)) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (!is_inf(from[i][v])) row[v] = std::min(row[v], head + from[i][v]);
    }
  });
  return far;
}

}  // namespace tapsp
