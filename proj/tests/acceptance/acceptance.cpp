// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli/app.hpp"
#include "support/testing.hpp"
#include "tapsp/diameter.hpp"
#include "tapsp/matprod.hpp"
#include "tapsp/oracle.hpp"
#include "tapsp/rpdm.hpp"
#include "tapsp/threshold_neg.hpp"
#include "tapsp/threshold_pos.hpp"

namespace tapsp {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::uint64_t seed_of(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return Rng::derive(Rng::derive(Rng::derive(a, b), c), d);
}

std::vector<Weight> dedup(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// 1 --------------------------------------------------------------------------

Verdict positive_exactness() {
  std::size_t graphs = 0, queries = 0, mismatches = 0;
  for (Vertex n : {8, 16, 32, 64})
    for (Weight m : {1, 2, 4, 8})
      for (double density : {0.1, 0.3, 0.7})
        for (std::uint64_t rep = 0; rep < 11; ++rep) {
          const Graph g = testing::random_positive(n, m, density, seed_of(1, static_cast<std::uint64_t>(n),
                                                                          static_cast<std::uint64_t>(m * 10 + density * 10), rep));
          const WeightMatrix dist = oracle::floyd_warshall(to_weight_matrix(g));
          std::vector<Weight> ds{0, 1, m + 1, n * m + 1};
          for (Weight d : testing::percentile_thresholds(dist)) ds.push_back(d);
          ++graphs;
          for (Weight d : dedup(ds)) {
            ++queries;
            const BoolMatrix got = threshold_apsp_pos(g, d);
            if (got != oracle::brute_threshold(dist, d) || threshold_apsp_pos(g, d) != got) ++mismatches;
          }
        }
  return {mismatches == 0 && graphs >= 500, std::to_string(queries - mismatches) + "/" + std::to_string(queries) +
                                                 " queries exact on " + std::to_string(graphs) +
                                                 " graphs, repeat runs identical"};
}

// 2 --------------------------------------------------------------------------

Verdict general_exactness() {
  std::size_t graphs = 0, queries = 0, mismatches = 0, first_ok = 0, retried = 0;
  for (Vertex n : {8, 16, 24, 48})
    for (Weight m : {1, 2, 4})
      for (double density : {0.1, 0.3})
        for (std::uint64_t rep = 0; rep < 21; ++rep) {
          const std::uint64_t seed =
              seed_of(2, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m * 10 + density * 10), rep);
          const Graph g = testing::random_general(n, m, density, seed);
          const WeightMatrix dist = oracle::floyd_warshall(to_weight_matrix(g));
          std::vector<Weight> ds{-2 * m, -1, 0, 1, n * m + 1};
          for (Weight d : testing::percentile_thresholds(dist)) ds.push_back(d);
          ++graphs;
          for (Weight d : dedup(ds)) {
            ++queries;
            ThresholdConfig config;
            config.verify = true;
            Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(d + 1000)));
            const ThresholdReport r = threshold_apsp_neg(g, d, config, rng);
            if (r.reported != oracle::brute_threshold(dist, d)) ++mismatches;
            first_ok += r.stats.first_attempt_ok;
            retried += r.stats.attempts > 1;
          }
        }
  const double rate = 100.0 * static_cast<double>(first_ok) / static_cast<double>(queries);
  std::ostringstream detail;
  detail << queries - mismatches << "/" << queries << " verified queries exact on " << graphs
         << " graphs; first-run success " << first_ok << "/" << queries << " (" << rate << "%), " << retried
         << " needed a retry";
  return {mismatches == 0 && graphs >= 500 && rate >= 95.0, detail.str()};
}

// 3 --------------------------------------------------------------------------

Verdict diameter_equivalence() {
  std::size_t per_mode[2] = {0, 0}, infinite[2] = {0, 0}, wrong = 0;
  for (int mi = 0; mi < 2; ++mi) {
    const WeightMode mode = mi == 0 ? WeightMode::general : WeightMode::positive;
    for (std::uint64_t rep = 0; rep < 220; ++rep) {
      const std::uint64_t seed = seed_of(3, static_cast<std::uint64_t>(mi), rep, 0);
      Rng pick(seed);
      const auto n = static_cast<Vertex>(4 + pick.below(21));
      const auto m = static_cast<Weight>(1 + pick.below(4));
      // Every eighth instance is sparse enough to be disconnected almost surely.
      const double density = rep % 8 == 0 ? 0.03 : 0.3 + 0.4 * pick.uniform01();
      const Graph g = mode == WeightMode::positive ? testing::random_positive(n, m, density, seed)
                                                   : testing::random_general(n, m, density, seed);
      const auto truth = oracle::diameter(oracle::floyd_warshall(to_weight_matrix(g)));
      DiameterConfig config;
      config.mode = mode;
      Rng rng(seed);
      const DiameterResult r = diameter(g, config, rng);
      ++per_mode[mi];
      infinite[mi] += !truth.value.has_value();
      if (r.value != truth.value || r.witnesses != truth.witnesses) ++wrong;
    }
  }
  std::ostringstream detail;
  detail << "general " << per_mode[0] << " instances (" << infinite[0] << " infinite), positive " << per_mode[1]
         << " (" << infinite[1] << " infinite); " << wrong << " value or witness mismatches";
  return {wrong == 0 && per_mode[0] >= 200 && per_mode[1] >= 200 && infinite[0] >= 20 && infinite[1] >= 20,
          detail.str()};
}

// 4 --------------------------------------------------------------------------

Verdict worked_example() {
  std::vector<Weight> expect;
  for (Weight x = 0; x <= 16; ++x) expect.push_back(x);
  for (Weight x = 22; x <= 28; ++x) expect.push_back(x);
  for (Weight x = 48; x <= 52; ++x) expect.push_back(x);
  expect.push_back(100);
  const bool fset = f_set(100, 4).members == expect;
  const std::vector<Interval> levels{{100, 100}, {48, 52}, {22, 28}, {9, 16}, {2, 10}, {1, 7}, {1, 6}, {1, 5}};
  const bool plan = level_plan(100, 4).levels == levels;
  return {fset && plan, std::string("F(100,4) ") + (fset ? "exact" : "differs") + ", levels 0-7 " +
                            (plan ? "exact" : "differ")};
}

// 5 --------------------------------------------------------------------------

PolyMatrix direct_square(const PolyMatrix& b) {
  const std::size_t s = b.terms();
  PolyMatrix c{b.n, std::vector<BoolMatrix>(2 * s - 1, BoolMatrix(b.n, b.n))};
  for (std::size_t q1 = 0; q1 < s; ++q1)
    for (std::size_t q2 = 0; q2 < s; ++q2) c.coeffs[q1 + q2] |= bool_product(b.coeffs[q1], b.coeffs[q2]);
  return c;
}

Verdict kernel_equivalence() {
  Rng rng(5);
  std::size_t dist_bad = 0, poly_bad = 0, ring_bad = 0;
  constexpr int kDist = 10000, kPoly = 10000, kRing = 1000;
  for (int i = 0; i < kDist; ++i) {
    const std::size_t r = 1 + rng.below(32), k = 1 + rng.below(32), c = 1 + rng.below(32);
    const Weight bound = 1 + static_cast<Weight>(rng.below(16));
    const double inf_rate = 0.5 * rng.uniform01();
    const WeightMatrix a = testing::random_matrix(r, k, bound, inf_rate, rng);
    const WeightMatrix b = testing::random_matrix(k, c, bound, inf_rate, rng);
    const RingOptions ring{i % 2 ? RingKernel::strassen : RingKernel::schoolbook, 8};
    dist_bad += dist_product_fast(a, b, EntryBound{bound}, ring) != dist_product_naive(a, b);
  }
  for (int i = 0; i < kPoly; ++i) {
    const std::size_t n = 1 + rng.below(32), s = 1 + rng.below(8);
    const double density = 0.5 * rng.uniform01();
    PolyMatrix b{n, {}};
    for (std::size_t q = 0; q < s; ++q) b.coeffs.push_back(testing::random_bool(n, n, density, rng));
    poly_bad += poly_square(b) != direct_square(b);
  }
  for (int i = 0; i < kRing; ++i) {
    const std::size_t r = 1 + rng.below(32), k = 1 + rng.below(32), c = 1 + rng.below(32);
    BigMatrix a(r, k), b(k, c);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < k; ++y) a(x, y) = rng.uniform_int(-1000000, 1000000);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < c; ++y) b(x, y) = mpz_class(rng.uniform_int(-1000000, 1000000)) << 70;
    ring_bad += ring_matmul(a, b, {RingKernel::strassen, 1 + rng.below(8)}) != ring_matmul(a, b);
  }
  std::ostringstream detail;
  detail << "min-plus fast/naive " << dist_bad << "/" << kDist << " mismatches, poly_square/convolution " << poly_bad
         << "/" << kPoly << ", strassen/schoolbook " << ring_bad << "/" << kRing;
  return {dist_bad + poly_bad + ring_bad == 0, detail.str()};
}

// 6 --------------------------------------------------------------------------

struct SamplingTrials {
  std::size_t trials = 0, shrunk = 0, failures = 0;
};

// RPDM properties at n = 120, beta = gamma = 0.05, where late rounds draw a proper subset.
SamplingTrials genuine_sampling(std::size_t trials) {
  constexpr Vertex kN = 120;
  constexpr double kBeta = 0.05, kGamma = 0.05;
  std::atomic<std::size_t> next{0}, shrunk{0}, failures{0};
  auto worker = [&] {
    for (std::size_t rep = next++; rep < trials; rep = next++) {
      const std::uint64_t seed = seed_of(6, rep, 1, 0);
      const Graph g = testing::random_general(kN, 3, 0.03, seed);
      const WeightMatrix w = to_weight_matrix(g);
      const auto t = oracle::tables(w);
      Rng rng(seed);
      const Rpdm p = build_rpdm(w, 3, kBeta, kGamma, rng);
      if (p.bridge_set.size() < static_cast<std::size_t>(kN)) ++shrunk;
      if (!check_rpdm_property1(p, t.dist, t.cmat).empty() ||
          !check_rpdm_property2(p, w, t.dist, t.cmat, rpdm_segment_length(kN, kBeta, kGamma)).empty())
        ++failures;
    }
  };
  std::vector<std::thread> pool(std::max(1U, std::thread::hardware_concurrency()));
  for (auto& th : pool) th = std::thread(worker);
  for (auto& th : pool) th.join();
  return {trials, shrunk.load(), failures.load()};
}

Verdict component_lemmas() {
  std::size_t instances = 0, capped_levels = 0, uncapped_levels = 0;
  std::size_t p1 = 0, p2 = 0, additive = 0, window = 0, target = 0, johnson = 0, window_pairs = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const std::uint64_t seed = seed_of(6, rep, 0, 0);
    Rng pick(seed);
    const auto n = static_cast<Vertex>(16 + 8 * pick.below(3));
    const auto m = static_cast<Weight>(1 + pick.below(4));
    const Graph g = testing::random_general(n, m, 0.08 + 0.15 * pick.uniform01(), seed);
    const WeightMatrix w = to_weight_matrix(g);
    const auto t = oracle::tables(w);
    const Weight d = testing::percentile_thresholds(t.dist).at(pick.below(3));
    ThresholdTrace trace;
    Rng rng(seed);
    const ThresholdReport r = threshold_apsp_neg(g, d, {}, rng, &trace);
    ++instances;
    const auto nz = static_cast<std::size_t>(n);

    for (std::size_t i = 0; i < trace.rpdms.size(); ++i) {
      const Rpdm& p = trace.rpdms[i];
      const Level& level = trace.schedule.levels[i];
      const bool capped = p.bridge_set.size() == nz && trace.approxes[i].sample.size() == nz;
      capped ? ++capped_levels : ++uncapped_levels;
      if (!capped) continue;
      p1 += check_rpdm_property1(p, t.dist, t.cmat).size();
      p2 += check_rpdm_property2(p, w, t.dist, t.cmat, rpdm_segment_length(n, p.beta, p.gamma)).size();
      const WeightMatrix& approx = trace.approxes[i].delta_star;
      for (std::size_t u = 0; u < nz; ++u)
        for (std::size_t v = 0; v < nz; ++v) {
          if (approx(u, v) < t.dist(u, v)) ++additive;
          if (is_inf(t.cmat(u, v))) continue;
          const auto c = static_cast<double>(t.cmat(u, v));
          if (c >= level.t / 2 && c < level.t && approx(u, v) > t.dist(u, v) + 2 * level.k) ++additive;
        }
    }
    const WeightMatrix& star = trace.delta_star.delta_star;
    for (std::size_t u = 0; u < nz; ++u)
      for (std::size_t v = 0; v < nz; ++v) {
        const Weight truth = t.dist(u, v);
        if (is_inf(truth) ? !is_inf(star(u, v)) : (star(u, v) < truth || star(u, v) > truth + trace.delta_star.margin))
          ++window;
      }
    for (const auto& [pair, exact] : r.resolved_window) {
      ++window_pairs;
      if (exact != t.dist(static_cast<std::size_t>(pair.u), static_cast<std::size_t>(pair.v))) ++target;
    }
    const Potentials pot = johnson_potentials(g);
    for (const Edge& e : g.edges())
      if (e.weight + pot.h[static_cast<std::size_t>(e.from)] - pot.h[static_cast<std::size_t>(e.to)] < 0) ++johnson;
  }
  std::ostringstream detail;
  detail << instances << " instances, " << capped_levels << " capped levels (" << uncapped_levels
         << " uncapped skipped); violations: property1 " << p1 << ", property2 " << p2 << ", additive " << additive
         << ", window " << window << ", target " << target << " of " << window_pairs << " window pairs, johnson "
         << johnson;
  const SamplingTrials sampled = genuine_sampling(500);
  detail << "; subsampled RPDM " << sampled.failures << "/" << sampled.trials << " trials failed ("
         << sampled.shrunk << " with a proper bridge set)";
  return {capped_levels > 0 && p1 + p2 + additive + window + target + johnson == 0 &&
              sampled.shrunk == sampled.trials && sampled.failures * 20 < sampled.trials,
          detail.str()};
}

// 7 --------------------------------------------------------------------------

Verdict structural_lemmas() {
  std::size_t plans = 0, escapes = 0, wide = 0;
  double worst = 0.0;
  for (Weight m = 1; m <= 8; ++m)
    for (Weight d = 1; d <= 10000; ++d) {
      const LevelPlan plan = level_plan(d, m);
      ++plans;
      for (std::size_t j = 0; j + 1 < plan.levels.size(); ++j) {
        const Interval next = plan.levels[j + 1];
        wide += next.size() > 2 * m + 3;
        for (Weight k = plan.levels[j].lo; k <= plan.levels[j].hi; ++k) {
          if (k <= m + 1) continue;
          const Interval r = split_range(k, m);
          for (Weight i = r.lo; i <= r.hi; ++i)
            escapes += !(next.contains(i) || i <= m + 1) + !(next.contains(k - i) || k - i <= m + 1);
        }
      }
      const double ratio = static_cast<double>(f_set(d, m).members.size()) /
                           (static_cast<double>(m) * std::log2(static_cast<double>(d + 2)));
      worst = std::max(worst, ratio);
    }
  std::ostringstream detail;
  detail << plans << " plans, " << escapes << " split indices outside the next level, " << wide
         << " levels wider than 2M+3; |F(d,M)| <= C*M*log2(d+2) with measured C = " << worst;
  return {escapes == 0 && wide == 0 && worst <= 8.0, detail.str()};
}

// 8 --------------------------------------------------------------------------

std::string run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "tapsp_acceptance";
  std::filesystem::create_directories(dir);
  const std::string general = (dir / "general.gr").string(), positive = (dir / "positive.gr").string();
  std::ofstream(general) << run_cli({"gen", "-n", "40", "-p", "0.15", "--wmin", "-3", "--wmax", "3", "--seed", "8",
                                     "--no-neg-cycle"})
                                .substr(2);
  std::ofstream(positive) << run_cli({"gen", "-n", "40", "-p", "0.15", "--wmin", "1", "--wmax", "5", "--seed", "8"})
                                 .substr(2);

  const std::vector<std::vector<std::string>> commands{
      {"gen", "-n", "50", "-p", "0.2", "--wmin", "-4", "--wmax", "4", "--seed", "3", "--no-neg-cycle"},
      {"threshold", general, "2", "--mode", "general", "--pairs", "--trace", "--seed", "5"},
      {"threshold", general, "2", "--mode", "general", "--json", "--trace", "--verify", "--seed", "5"},
      {"threshold", positive, "9", "--pairs", "--json"},
      {"diameter", general, "--mode", "general", "--trace", "--seed", "5"},
      {"diameter", positive, "--trace", "--json"},
      {"oracle", general, "--matrix", "--threshold", "2"},
      {"bench", "--sizes", "16,24", "--weights", "2", "--no-timing", "--algorithms",
       "oracle,minplus-naive,minplus-fast,threshold-neg,threshold-pos,diameter"},
  };
  std::size_t stable = 0;
  for (const auto& base : commands) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "4", "4"}) {
      std::vector<std::string> args = base;
      if (base[0] != "gen" && base[0] != "oracle") {
        args.push_back("--threads");
        args.push_back(threads);
      }
      outputs.push_back(run_cli(args));
    }
    stable += std::all_of(outputs.begin(), outputs.end(), [&](const std::string& o) { return o == outputs[0]; }) &&
              outputs[0].rfind("0\n", 0) == 0;
  }
  std::filesystem::remove_all(dir);
  return {stable == commands.size(), std::to_string(stable) + "/" + std::to_string(commands.size()) +
                                         " commands byte-identical over two runs at 1 and 4 threads"};
}

}  // namespace
}  // namespace tapsp

int main() {
  using namespace tapsp;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 positive-weight exactness", positive_exactness},
      {"2 general-weight exactness with verify-retry", general_exactness},
      {"3 diameter equivalence", diameter_equivalence},
      {"4 worked example F(100,4)", worked_example},
      {"5 kernel equivalence", kernel_equivalence},
      {"6 component lemma checks", component_lemmas},
      {"7 structural lemma checks", structural_lemmas},
      {"8 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::printf("[%s] criterion %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
