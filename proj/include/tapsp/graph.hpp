#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "tapsp/common.hpp"
#include "tapsp/matrix.hpp"

namespace tapsp {

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted digraph on vertices 0..n-1 with a weight-magnitude bound M.
/// Edges are kept sorted by (from, to); parallel arcs collapse to the lightest one.
class Graph {
 public:
  Graph() = default;
  /// Throws ContractError on self-loops, out-of-range endpoints, |w| > max_weight
  /// or max_weight < 1.
  Graph(Vertex n, Weight max_weight, std::vector<Edge> edges);

  Vertex n() const { return n_; }
  /// The bound M: every weight satisfies |w| <= M.
  Weight max_weight() const { return max_weight_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// True when every weight lies in {1, ..., M}.
  bool positive_weights() const;

  Graph reversed() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  Weight max_weight_ = 1;
  std::vector<Edge> edges_;
};

/// Reads the DIMACS-like text format:
///   c <comment>
///   p sp <n> <m> [<M>]
///   a <u> <v> <w>          (1-based endpoints)
/// Without the optional M field, M = max(1, max |w|).
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);

/// Diagonal 0, w(u,v) on edges, +inf elsewhere.
WeightMatrix to_weight_matrix(const Graph& g);

struct RandomGraphSpec {
  Vertex n = 0;
  double density = 0.0;
  Weight wmin = 1;
  Weight wmax = 1;
  std::uint64_t seed = 0;
  bool require_no_negative_cycle = false;
};

/// Each ordered pair u != v gets an arc with probability `density`, weight uniform in
/// [wmin, wmax]. M = max(1, |wmin|, |wmax|). With require_no_negative_cycle, negative
/// cycles are repaired one at a time by re-drawing their lightest arc upward (or dropping
/// it when it already weighs wmax), deterministically from the seed.
Graph gen_random(const RandomGraphSpec& spec);

/// Bellman-Ford from a virtual source joined to every vertex by 0-weight arcs.
bool detect_negative_cycle(const Graph& g);
/// Vertices of one negative cycle, or empty when none exists.
std::vector<Vertex> find_negative_cycle(const Graph& g);

/// Vertex potentials h with w(u,v) + h(u) - h(v) >= 0 on every edge.
struct Potentials {
  std::vector<Weight> h;
};

/// h(v) = distance from the virtual source. Throws NegativeCycleError.
Potentials johnson_potentials(const Graph& g);

/// Reachability ignoring weights; the diagonal is always set.
BoolMatrix transitive_closure(const Graph& g);

}  // namespace tapsp
