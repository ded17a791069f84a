#include "cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tapsp/counters.hpp"
#include "tapsp/diameter.hpp"
#include "tapsp/matprod.hpp"
#include "tapsp/oracle.hpp"
#include "tapsp/parallel.hpp"
#include "tapsp/simd.hpp"

namespace tapsp::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
  double omega = kDefaultOmega;
  std::uint64_t seed = 1;
  std::string kernel = "schoolbook";
  bool verify = false;
  std::string mode = "auto";
  bool trace = false;
  std::size_t threads = 1;
  bool json = false;
  double force_beta = -1.0;
  int force_levels = 0;
  std::string simd;
};

void add_run_options(CLI::App& cmd, RunConfig& rc) {
  cmd.add_option("--omega", rc.omega, "matrix multiplication exponent used by the schedule")
      ->envname("TAPSP_OMEGA")
      ->check(CLI::Range(2.0, 3.0));
  cmd.add_option("--seed", rc.seed, "random seed")->envname("TAPSP_SEED");
  cmd.add_option("--kernel", rc.kernel, "ring product kernel")
      ->envname("TAPSP_KERNEL")
      ->check(CLI::IsMember({"schoolbook", "strassen"}));
  cmd.add_flag("--verify", rc.verify, "check against the oracle and retry randomized runs");
  cmd.add_option("--mode", rc.mode, "weight regime")
      ->envname("TAPSP_MODE")
      ->check(CLI::IsMember({"auto", "general", "positive"}));
  cmd.add_flag("--trace", rc.trace, "print intermediate schedule and probe information");
  cmd.add_option("--threads", rc.threads, "worker thread cap")->envname("TAPSP_THREADS")->check(CLI::PositiveNumber);
  cmd.add_flag("--json", rc.json, "JSON output");
  cmd.add_option("--force-beta", rc.force_beta, "override beta (testing)")->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--force-levels", rc.force_levels, "override the level count (testing)")->check(CLI::PositiveNumber);
  cmd.add_option("--simd", rc.simd, "row kernel instruction set")->check(CLI::IsMember({"scalar", "avx2"}));
}

void apply_globals(const RunConfig& rc) {
  set_thread_count(rc.threads);
  if (!rc.simd.empty()) simd::set_active(*simd::parse_isa(rc.simd));
}

ThresholdConfig threshold_config(const RunConfig& rc) {
  ThresholdConfig c;
  c.schedule.omega = rc.omega;
  if (rc.force_beta >= 0.0) c.schedule.force_beta = rc.force_beta;
  if (rc.force_levels > 0) c.schedule.force_levels = rc.force_levels;
  c.ring.kernel = rc.kernel == "schoolbook" ? RingKernel::schoolbook : RingKernel::strassen;
  c.verify = rc.verify;
  return c;
}

DiameterConfig diameter_config(const RunConfig& rc, WeightMode mode) {
  DiameterConfig c;
  c.mode = mode;
  c.threshold = threshold_config(rc);
  c.positive.step.ring = c.threshold.ring;
  return c;
}

WeightMode resolve_mode(const std::string& mode, const Graph& g) {
  if (mode == "general") return WeightMode::general;
  if (mode == "positive") {
    if (!g.positive_weights()) throw ContractError("positive mode requires every weight in {1..M}");
    return WeightMode::positive;
  }
  return g.positive_weights() ? WeightMode::positive : WeightMode::general;
}

std::string_view mode_name(WeightMode m) { return m == WeightMode::positive ? "positive" : "general"; }

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

json pairs_json(const std::vector<VertexPair>& pairs) {
  json arr = json::array();
  for (const VertexPair& p : pairs) arr.push_back({p.u + 1, p.v + 1});
  return arr;
}

void print_pairs(std::ostream& out, std::string_view tag, const std::vector<VertexPair>& pairs) {
  for (const VertexPair& p : pairs) out << tag << ' ' << p.u + 1 << ' ' << p.v + 1 << '\n';
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  RandomGraphSpec spec{.n = 16, .density = 0.25, .wmin = 1, .wmax = 4, .seed = 1};
  std::string output = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.spec.n < 0) throw ContractError("n must be non-negative");
  if (a.spec.density < 0.0 || a.spec.density > 1.0) throw ContractError("density must lie in [0, 1]");
  if (a.spec.wmin > a.spec.wmax) throw ContractError("wmin must not exceed wmax");
  const Graph g = gen_random(a.spec);
  if (a.output == "-") {
    write_graph(out, g);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error("cannot write " + a.output);
    write_graph(file, g);
  }
  return kOk;
}

// threshold ------------------------------------------------------------------

struct ThresholdArgs {
  RunConfig rc;
  std::string file;
  Weight d = 0;
  bool list_pairs = false;
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out) {
  apply_globals(a.rc);
  const Graph g = load_graph(a.file);
  const WeightMode mode = resolve_mode(a.rc.mode, g);
  Rng rng(a.rc.seed);

  BoolMatrix reported;
  std::optional<PhaseStats> stats;
  std::optional<ThresholdTrace> trace;
  if (mode == WeightMode::positive) {
    PositiveOptions opts;
    opts.step.ring = threshold_config(a.rc).ring;
    reported = threshold_apsp_pos(g, a.d, opts);
  } else {
    ThresholdTrace t;
    ThresholdReport r = threshold_apsp_neg(g, a.d, threshold_config(a.rc), rng, &t);
    reported = std::move(r.reported);
    stats = r.stats;
    if (!r.stats.shortcut) trace = std::move(t);
  }

  std::optional<bool> verified;
  if (a.rc.verify) {
    if (stats && stats->checked_against_oracle) {
      verified = !stats->verify_failed;
    } else if (static_cast<Vertex>(g.n()) <= 512) {
      verified = reported == oracle::brute_threshold(oracle::floyd_warshall(to_weight_matrix(g)), a.d);
    } else if (stats) {
      verified = !stats->verify_failed;
    }
  }

  const std::vector<VertexPair> pairs = reported.pairs();
  if (a.rc.json) {
    json j{{"command", "threshold"}, {"mode", mode_name(mode)}, {"n", g.n()}, {"M", g.max_weight()},
           {"d", a.d},          {"pair_count", pairs.size()}};
    if (a.list_pairs) j["pairs"] = pairs_json(pairs);
    if (stats) {
      j["stats"] = {{"accepted", stats->accepted},
                    {"rejected", stats->rejected},
                    {"window", stats->window},
                    {"window_reported", stats->window_reported},
                    {"consistency_failures", stats->consistency_failures},
                    {"attempts", stats->attempts},
                    {"shortcut", stats->shortcut}};
    }
    if (trace) {
      json levels = json::array();
      for (const Level& l : trace->schedule.levels)
        levels.push_back({{"index", l.index}, {"t", l.t}, {"beta", l.beta}, {"gamma", l.gamma}, {"k", l.k}});
      if (a.rc.trace) j["schedule"] = {{"beta", trace->schedule.beta}, {"levels", levels}};
    }
    j["verified"] = verified ? json(*verified) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "mode " << mode_name(mode) << "\nn " << g.n() << "\nd " << a.d << "\npairs " << pairs.size() << '\n';
    if (stats) {
      out << "accepted " << stats->accepted << "\nwindow " << stats->window << "\nwindow_reported "
          << stats->window_reported << "\nrejected " << stats->rejected << "\nattempts " << stats->attempts << '\n';
    }
    if (trace && a.rc.trace) {
      out << "beta " << trace->schedule.beta << '\n';
      for (const Level& l : trace->schedule.levels)
        out << "level " << l.index << " t " << l.t << " beta " << l.beta << " gamma " << l.gamma << " k " << l.k
            << '\n';
    }
    if (verified) out << "verified " << (*verified ? "yes" : "no") << '\n';
    if (a.list_pairs) print_pairs(out, "pair", pairs);
  }
  return verified && !*verified ? kVerifyMismatch : kOk;
}

// diameter -------------------------------------------------------------------

struct DiameterArgs {
  RunConfig rc;
  std::string file;
};

int cmd_diameter(const DiameterArgs& a, std::ostream& out) {
  apply_globals(a.rc);
  const Graph g = load_graph(a.file);
  const WeightMode mode = resolve_mode(a.rc.mode, g);
  Rng rng(a.rc.seed);
  const DiameterResult r = diameter(g, diameter_config(a.rc, mode), rng);

  std::optional<bool> verified;
  if (a.rc.verify && g.n() <= 512) {
    const oracle::DiameterTruth truth = oracle::diameter(oracle::floyd_warshall(to_weight_matrix(g)));
    verified = truth.value == r.value && truth.witnesses == r.witnesses;
  }

  if (a.rc.json) {
    json j{{"command", "diameter"},
           {"mode", mode_name(mode)},
           {"n", g.n()},
           {"infinite", !r.value.has_value()},
           {"value", r.value ? json(*r.value) : json(nullptr)},
           {"witnesses", pairs_json(r.witnesses)},
           {"restarts", r.restarts}};
    if (a.rc.trace) {
      json probes = json::array();
      for (const Probe& p : r.probes) probes.push_back({{"d", p.d}, {"all_reported", p.all_reported}});
      j["probes"] = probes;
    }
    j["verified"] = verified ? json(*verified) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "mode " << mode_name(mode) << "\ndiameter ";
    if (r.value) {
      out << *r.value << '\n';
    } else {
      out << "inf\n";
    }
    out << "witnesses " << r.witnesses.size() << '\n';
    print_pairs(out, "witness", r.witnesses);
    if (a.rc.trace) {
      for (const Probe& p : r.probes) out << "probe " << p.d << ' ' << (p.all_reported ? "all" : "partial") << '\n';
      out << "restarts " << r.restarts << '\n';
    }
    if (verified) out << "verified " << (*verified ? "yes" : "no") << '\n';
  }
  return verified && !*verified ? kVerifyMismatch : kOk;
}

// oracle ---------------------------------------------------------------------

struct OracleArgs {
  std::string file;
  std::optional<Weight> d;
  bool matrix = false;
  bool json = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.file);
  const WeightMatrix dist = oracle::floyd_warshall(to_weight_matrix(g));
  const oracle::DiameterTruth truth = oracle::diameter(dist);
  std::optional<std::size_t> count;
  if (a.d) count = oracle::brute_threshold(dist, *a.d).count();
  const auto n = static_cast<std::size_t>(g.n());

  if (a.json) {
    json j{{"command", "oracle"},
           {"n", g.n()},
           {"infinite", !truth.value.has_value()},
           {"diameter", truth.value ? json(*truth.value) : json(nullptr)},
           {"witnesses", pairs_json(truth.witnesses)}};
    if (count) j["d"] = *a.d, j["pair_count"] = *count;
    if (a.matrix) {
      json rows = json::array();
      for (std::size_t u = 0; u < n; ++u) {
        json row = json::array();
        for (std::size_t v = 0; v < n; ++v) row.push_back(is_inf(dist(u, v)) ? json(nullptr) : json(dist(u, v)));
        rows.push_back(row);
      }
      j["distances"] = rows;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "diameter ";
  if (truth.value) {
    out << *truth.value << '\n';
  } else {
    out << "inf\n";
  }
  out << "witnesses " << truth.witnesses.size() << '\n';
  print_pairs(out, "witness", truth.witnesses);
  if (count) out << "d " << *a.d << "\npairs " << *count << '\n';
  if (a.matrix)
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (v) out << ' ';
        if (is_inf(dist(u, v))) {
          out << "inf";
        } else {
          out << dist(u, v);
        }
      }
      out << '\n';
    }
  return kOk;
}

// bench ----------------------------------------------------------------------

struct BenchArgs {
  RunConfig rc;
  std::vector<Vertex> sizes{16, 32, 64};
  std::vector<Weight> weights{4};
  std::vector<std::string> algorithms{"oracle"};
  double density = 0.3;
  bool no_timing = false;
};

Weight median_finite(const WeightMatrix& dist) {
  std::vector<Weight> values;
  for (std::size_t u = 0; u < dist.rows(); ++u)
    for (std::size_t v = 0; v < dist.cols(); ++v)
      if (!is_inf(dist(u, v))) values.push_back(dist(u, v));
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2), values.end());
  return values[values.size() / 2];
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  apply_globals(a.rc);
  out << "n,M,algorithm,wall_ms,ring_mults,minplus_relax,bool_row_ors\n";
  for (Vertex n : a.sizes)
    for (Weight m : a.weights)
      for (const std::string& algo : a.algorithms) {
        const bool positive = algo == "threshold-pos" || (algo == "diameter" && a.rc.mode == "positive");
        RandomGraphSpec spec{.n = n,
                             .density = a.density,
                             .wmin = positive ? 1 : -m,
                             .wmax = m,
                             .seed = Rng::derive(a.rc.seed, static_cast<std::uint64_t>(n) * 1000003ULL +
                                                               static_cast<std::uint64_t>(m)),
                             .require_no_negative_cycle = true};
        const Graph g = gen_random(spec);
        const WeightMatrix w = to_weight_matrix(g);
        const Weight d = median_finite(oracle::floyd_warshall(w));
        Rng rng(spec.seed);
        reset_op_counts();
        const auto start = std::chrono::steady_clock::now();
        if (algo == "oracle") {
          (void)oracle::floyd_warshall(w);
        } else if (algo == "minplus-naive") {
          (void)dist_product_naive(w, w);
        } else if (algo == "minplus-fast") {
          (void)dist_product_fast(w, w, threshold_config(a.rc).ring);
        } else if (algo == "threshold-neg") {
          (void)threshold_apsp_neg(g, d, threshold_config(a.rc), rng);
        } else if (algo == "threshold-pos") {
          PositiveOptions opts;
          opts.step.ring = threshold_config(a.rc).ring;
          (void)threshold_apsp_pos(g, d, opts);
        } else if (algo == "diameter") {
          (void)diameter(g, diameter_config(a.rc, positive ? WeightMode::positive : WeightMode::general), rng);
        } else {
          throw ContractError("unknown algorithm " + algo);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const OpCounts c = op_counts();
        out << n << ',' << m << ',' << algo << ',';
        if (!a.no_timing) out << ms;
        out << ',' << c.ring_mults << ',' << c.minplus_relax << ',' << c.bool_row_ors << '\n';
      }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold all-pairs shortest paths and exact diameter for integer-weighted digraphs", "tapsp"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a random instance");
  g->add_option("-n", gen.spec.n, "vertex count");
  g->add_option("-p,--density", gen.spec.density, "arc probability");
  g->add_option("--wmin", gen.spec.wmin, "smallest weight");
  g->add_option("--wmax", gen.spec.wmax, "largest weight");
  g->add_option("--seed", gen.spec.seed, "random seed")->envname("TAPSP_SEED");
  g->add_flag("--no-neg-cycle", gen.spec.require_no_negative_cycle, "repair arcs until no negative cycle remains");
  g->add_option("-o,--output", gen.output, "output file, - for stdout");

  ThresholdArgs th;
  auto* t = app.add_subcommand("threshold", "report all pairs at distance at most d");
  t->add_option("file", th.file, "graph file, - for stdin")->required();
  t->add_option("d", th.d, "threshold")->required();
  t->add_flag("--pairs", th.list_pairs, "list the reported pairs");
  add_run_options(*t, th.rc);

  DiameterArgs di;
  auto* dm = app.add_subcommand("diameter", "exact diameter with witness pairs");
  dm->add_option("file", di.file, "graph file, - for stdin")->required();
  add_run_options(*dm, di.rc);

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "reference answers by Floyd-Warshall");
  o->add_option("file", orc.file, "graph file, - for stdin")->required();
  o->add_option("--threshold", orc.d, "also count pairs at distance at most this value");
  o->add_flag("--matrix", orc.matrix, "print the distance matrix");
  o->add_flag("--json", orc.json, "JSON output");

  BenchArgs be;
  auto* b = app.add_subcommand("bench", "CSV sweep of wall time and operation counts");
  b->add_option("--sizes", be.sizes, "vertex counts")->delimiter(',');
  b->add_option("--weights", be.weights, "weight bounds M")->delimiter(',');
  b->add_option("--algorithms", be.algorithms,
                "oracle, minplus-naive, minplus-fast, threshold-neg, threshold-pos, diameter")
      ->delimiter(',');
  b->add_option("--density", be.density, "arc probability");
  b->add_flag("--no-timing", be.no_timing, "leave wall_ms empty so output is reproducible");
  add_run_options(*b, be.rc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (t->parsed()) return cmd_threshold(th, out);
    if (dm->parsed()) return cmd_diameter(di, out);
    if (o->parsed()) return cmd_oracle(orc, out);
    if (b->parsed()) return cmd_bench(be, out);
  } catch (const NegativeCycleError& e) {
    err << "error: negative cycle:";
    for (Vertex v : e.cycle()) err << ' ' << v + 1;
    err << '\n';
    return kNegativeCycle;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace tapsp::cli
