#include "tapsp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "tapsp/rng.hpp"

namespace tapsp {

Graph::Graph(Vertex n, Weight max_weight, std::vector<Edge> edges)
    : n_(n), max_weight_(max_weight), edges_(std::move(edges)) {
  if (n < 0) throw ContractError("graph: negative vertex count");
  if (max_weight < 1) throw ContractError("graph: weight bound must be at least 1");
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw ContractError("graph: endpoint out of range");
    if (e.from == e.to) throw ContractError("graph: self-loop at vertex " + std::to_string(e.from + 1));
    if (e.weight > max_weight || e.weight < -max_weight)
      throw ContractError("graph: weight " + std::to_string(e.weight) + " exceeds bound " +
                          std::to_string(max_weight));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.weight) < std::tie(b.from, b.to, b.weight);
  });
  // Sorted by weight within a pair, so the first copy is the lightest.
  edges_.erase(std::unique(edges_.begin(), edges_.end(),
                           [](const Edge& a, const Edge& b) { return a.from == b.from && a.to == b.to; }),
               edges_.end());
}

bool Graph::positive_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.weight >= 1; });
}

Graph Graph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back({e.to, e.from, e.weight});
  return Graph(n_, max_weight_, std::move(rev));
}

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::int64_t n = -1, m = 0, declared_bound = 0;
  bool have_bound = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (header_line != 0) throw ParseError(line_no, "duplicate problem line");
      if ((tokens.size() != 4 && tokens.size() != 5) || tokens[1] != "sp" || !parse_int(tokens[2], n) ||
          !parse_int(tokens[3], m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected 'p sp <n> <m> [<M>]'");
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      if (tokens.size() == 5) {
        if (!parse_int(tokens[4], declared_bound) || declared_bound < 1)
          throw ParseError(line_no, "weight bound must be a positive integer");
        have_bound = true;
      }
      header_line = line_no;
      continue;
    }
    if (tokens[0] == "a") {
      if (header_line == 0) throw ParseError(line_no, "arc before problem line");
      std::int64_t u = 0, v = 0, w = 0;
      if (tokens.size() != 4 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v) || !parse_int(tokens[3], w))
        throw ParseError(line_no, "expected 'a <u> <v> <w>'");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (w > kInf / 8 || w < -kInf / 8) throw ParseError(line_no, "weight out of range");
      if (have_bound && (w > declared_bound || w < -declared_bound))
        throw ParseError(line_no, "weight " + std::to_string(w) + " exceeds declared bound " +
                                      std::to_string(declared_bound));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (header_line == 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " arcs, found " +
                                      std::to_string(edges.size()));

  Weight bound = declared_bound;
  if (!have_bound) {
    bound = 1;
    for (const Edge& e : edges) bound = std::max(bound, e.weight < 0 ? -e.weight : e.weight);
  }
  return Graph(static_cast<Vertex>(n), bound, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p sp " << g.n() << ' ' << g.edge_count() << ' ' << g.max_weight() << '\n';
  for (const Edge& e : g.edges()) out << "a " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight << '\n';
}

WeightMatrix to_weight_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  WeightMatrix w = WeightMatrix::identity(n);
  for (const Edge& e : g.edges()) w(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to)) = e.weight;
  return w;
}

namespace {

Graph draw_random(const RandomGraphSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = 0; v < spec.n; ++v) {
      if (u == v) continue;
      if (rng.uniform01() < spec.density) edges.push_back({u, v, rng.uniform_int(spec.wmin, spec.wmax)});
    }
  const Weight bound = std::max<Weight>({1, spec.wmin < 0 ? -spec.wmin : spec.wmin,
                                         spec.wmax < 0 ? -spec.wmax : spec.wmax});
  return Graph(spec.n, bound, std::move(edges));
}

}  // namespace

Graph gen_random(const RandomGraphSpec& spec) {
  if (spec.wmin > spec.wmax) throw ContractError("gen_random: wmin > wmax");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw ContractError("gen_random: density outside [0,1]");
  if (spec.n < 0) throw ContractError("gen_random: negative vertex count");
  Graph g = draw_random(spec, spec.seed);
  if (!spec.require_no_negative_cycle) return g;
  // Repair: raise the lightest arc of a negative cycle far enough to make that cycle
  // non-negative (drawn uniformly up to wmax), or drop it when already at wmax.
  Rng rng(Rng::derive(spec.seed, 0x6e656763ULL));
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::vector<Vertex> cycle = find_negative_cycle(g); !cycle.empty(); cycle = find_negative_cycle(g)) {
    Weight total = 0;
    std::size_t lightest = edges.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Edge key{cycle[i], cycle[(i + 1) % cycle.size()], 0};
      auto it = std::lower_bound(edges.begin(), edges.end(), key, [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
      });
      const auto idx = static_cast<std::size_t>(it - edges.begin());
      total += it->weight;
      if (lightest == edges.size() || it->weight < edges[lightest].weight) lightest = idx;
    }
    const Weight w = edges[lightest].weight;
    if (w >= spec.wmax) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(lightest));
    } else {
      edges[lightest].weight = rng.uniform_int(std::min(spec.wmax, w - total), spec.wmax);
    }
    g = Graph(g.n(), g.max_weight(), edges);
  }
  return g;
}

namespace {

struct BellmanFordResult {
  std::vector<Weight> dist;
  std::vector<Vertex> cycle;
};

BellmanFordResult bellman_ford_virtual_source(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  BellmanFordResult r{std::vector<Weight>(n, 0), {}};
  std::vector<Vertex> parent(n, -1);
  Vertex last_relaxed = -1;
  if (n == 0) return r;
  for (std::size_t round = 0; round < n; ++round) {
    last_relaxed = -1;
    for (const Edge& e : g.edges()) {
      const Weight cand = r.dist[static_cast<std::size_t>(e.from)] + e.weight;
      if (cand < r.dist[static_cast<std::size_t>(e.to)]) {
        r.dist[static_cast<std::size_t>(e.to)] = cand;
        parent[static_cast<std::size_t>(e.to)] = e.from;
        last_relaxed = e.to;
      }
    }
    if (last_relaxed < 0) return r;
  }
  // Still relaxing after n rounds: walk back n steps to land on the cycle.
  Vertex x = last_relaxed;
  for (std::size_t i = 0; i < n; ++i) {
    x = parent[static_cast<std::size_t>(x)];
    if (x < 0) throw Error("negative cycle detected but parent chain is broken");
  }
  std::vector<Vertex> cycle{x};
  for (Vertex y = parent[static_cast<std::size_t>(x)]; y != x; y = parent[static_cast<std::size_t>(y)])
    cycle.push_back(y);
  std::reverse(cycle.begin(), cycle.end());
  r.cycle = std::move(cycle);
  return r;
}

}  // namespace

bool detect_negative_cycle(const Graph& g) { return !bellman_ford_virtual_source(g).cycle.empty(); }

std::vector<Vertex> find_negative_cycle(const Graph& g) { return bellman_ford_virtual_source(g).cycle; }

Potentials johnson_potentials(const Graph& g) {
  auto r = bellman_ford_virtual_source(g);
  if (!r.cycle.empty()) throw NegativeCycleError(std::move(r.cycle));
  return Potentials{std::move(r.dist)};
}

BoolMatrix transitive_closure(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.from)].push_back(e.to);
  BoolMatrix reach(n, n);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    reach.set(s, s);
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[static_cast<std::size_t>(x)]) {
        if (reach.get(s, static_cast<std::size_t>(y))) continue;
        reach.set(s, static_cast<std::size_t>(y));
        stack.push_back(y);
      }
    }
  }
  return reach;
}

}  // namespace tapsp
