#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "check_util.hpp"
#include "hyturan/construct.hpp"
#include "hyturan/detect.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/io.hpp"
#include "hyturan/isomorphism.hpp"
#include "hyturan/kernels.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan::verify {
namespace {

using detail::format;
using detail::Stopwatch;
using detail::Tally;

std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

CheckResult hcore_suite(const Options& o) {
  Stopwatch clock;
  Tally tally;
  std::mt19937_64 rng(11);
  const int count = o.quick ? 40 : 200;
  for (int i = 0; i < count; ++i) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t n = r + rng() % (9 - r);
    const Hypergraph h = random_hypergraph(n, r, 0.4, rng());
    const std::string tag = format("instance %d", i);
    const auto deg = degrees(h);
    tally.expect(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == r * h.size(), tag + ": handshake");
    const auto perm = random_perm(n, rng);
    const Hypergraph g = h.relabeled(perm);
    tally.expect(is_isomorphic(h, g), tag + ": relabeled copy not isomorphic");
    tally.expect(canonical_form(h).graph == canonical_form(g).graph, tag + ": canonical form differs");
    for (Vertex v = 0; v < n; ++v) tally.expect(degree(g, perm[v]) == deg[v], tag + ": degree not transported");
    const EditDelta d = edit_delta(h, g);
    const EditDelta back = edit_delta(g, h);
    tally.expect(d.added.size() == back.removed.size() && d.removed.size() == back.added.size(),
                 tag + ": edit delta asymmetric");
    if (!h.empty()) {
      const auto e = h.edge(0);
      const Hypergraph less = h.without_edge(e);
      tally.expect(less.size() + 1 == h.size() && !less.contains_edge(e), tag + ": edge removal");
      tally.expect(less.with_edge(Edge(e.begin(), e.end())) == h, tag + ": add/remove round trip");
    }
  }
  tally.expect(binomial(10, 3) == 120 && binomial(3, 5) == 0, "binomial");
  return detail::finish("P-hcore", "hypergraph core invariants", tally, "", clock, 60);
}

CheckResult construct_suite(const Options&) {
  Stopwatch clock;
  Tally tally;
  for (std::size_t r = 2; r <= 4; ++r)
    for (std::size_t k = r; k <= 5; ++k)
      for (std::size_t n = k; n <= 14; ++n) {
        const Hypergraph t = turan_hypergraph(n, k, r);
        const Partition part = turan_partition(n, k);
        tally.expect(is_k_partite(t, part), format("T_%zu(%zu,%zu) not k-partite", r, n, k));
        tally.expect(partition_score(t, part) == r * t.size(), format("T_%zu(%zu,%zu) score", r, n, k));
        const auto sizes = turan_part_sizes(n, k);
        tally.expect(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == n &&
                         sizes.back() - sizes.front() <= 1,
                     format("T_%zu(%zu,%zu) part sizes", r, n, k));
      }
  for (std::size_t t = 3; t <= 5; ++t)
    for (std::size_t r = 2; r <= std::min<std::size_t>(t, 4); ++r) {
      const Hypergraph h = expanded_clique(t, r);
      tally.expect(h.size() == t * (t - 1) / 2 && h.order() == t + (r - 2) * h.size(),
                   format("H_%zu^%zu shape", t, r));
      const Hypergraph f = generalized_fan(t, r);
      const std::size_t pairs = t * (t - 1) / 2 - r * (r - 1) / 2;
      tally.expect(f.size() == pairs + 1, format("F_%zu^%zu size", t, r));
    }
  tally.expect(complete_r_graph(6, 3).size() == 20, "K_6^3");
  tally.expect(m1_pattern().size() == 9, "M1 size");
  for (std::size_t n = 6; n <= 24; ++n) {
    const auto s = g62_balanced_sizes(n);
    tally.expect(std::accumulate(s.begin(), s.end(), std::size_t{0}) == n, format("G_%zu^2 sizes", n));
    tally.expect(g62_balanced(n).order() == n, format("G_%zu^2 order", n));
  }
  const Hypergraph a = random_hypergraph(9, 3, 0.5, 99), b = random_hypergraph(9, 3, 0.5, 99);
  tally.expect(a == b, "random_hypergraph not deterministic");
  return detail::finish("P-construct", "generator invariants", tally, "", clock, 60);
}

CheckResult spectral_suite(const Options& o) {
  Stopwatch clock;
  Tally tally;
  std::mt19937_64 rng(23);
  const int count = o.quick ? 30 : 150;
  for (int i = 0; i < count; ++i) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t n = r + 1 + rng() % (9 - r);
    const Hypergraph h = random_hypergraph(n, r, 0.5, rng());
    if (h.empty()) continue;
    const double p = 1.0 + static_cast<double>(rng() % 5);
    SolverConfig cfg;
    cfg.p = p;
    cfg.threads = o.threads;
    const SolverResult res = p_spectral_radius(h, cfg);
    const std::string tag = format("instance %d (n=%zu r=%zu p=%g)", i, n, r, p);
    // Feasibility: the returned vector is a nonnegative unit vector attaining lambda.
    const auto& x = res.vector.values;
    tally.expect(std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0; }), tag + ": negative entry");
    tally.expect(res.vector.normalized(1e-9), tag + ": not normalized");
    tally.expect(std::abs(evaluate_poly(h, x) - res.lambda) <= 1e-9 * std::max(1.0, res.lambda),
                 tag + ": lambda differs from P(x)");
    if (p == 1.0) {
      // Some optimal weighting is supported on a set covering every pair.
      std::vector<Vertex> support;
      for (Vertex v = 0; v < n; ++v)
        if (x[v] > 1e-6) support.push_back(v);
      const auto cod = codegree_matrix(h);
      bool covers = true;
      for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = a + 1; b < support.size(); ++b)
          covers = covers && cod[support[a] * n + support[b]] > 0;
      tally.expect(covers, tag + ": Lagrangian support does not cover its pairs");
    }
  }
  tally.expect(std::abs(p_spectral_radius(complete_r_graph(4, 3), [] {
                          SolverConfig c;
                          c.p = kInfiniteP;
                          return c;
                        }()).lambda -
                        24.0) <= 1e-12,
               "p = infinity");
  tally.expect(std::abs(factorial(5) - 120.0) == 0.0, "factorial");
  return detail::finish("P-spectral", "solver feasibility and support", tally, "", clock, 120);
}

CheckResult kernel_suite(const Options&) {
  Stopwatch clock;
  Tally tally;
  using namespace kernels;
  if (!backend_available(Backend::avx2)) {
    tally.expect(true, "avx2 unavailable");
    return detail::finish("P-kernels", "scalar and AVX2 kernels agree", tally, "AVX2 not available, skipped", clock,
                          30);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 2 + rng() % 4;
    const Hypergraph h = random_hypergraph(r + 1 + rng() % 8, r, 0.6, rng());
    const EdgeTable t(h);
    std::vector<double> x(h.order());
    for (double& v : x) v = unit(rng);
    std::vector<double> a(h.size()), b(h.size()), ga(h.order(), 0.0), gb(h.order(), 0.0);
    edge_products(Backend::scalar, t, x, a);
    edge_products(Backend::avx2, t, x, b);
    tally.expect(a == b, format("instance %d: edge products differ", i));
    accumulate_partials(Backend::scalar, t, x, ga);
    accumulate_partials(Backend::avx2, t, x, gb);
    tally.expect(ga == gb, format("instance %d: partials differ", i));
  }
  return detail::finish("P-kernels", "scalar and AVX2 kernels agree", tally, "bitwise", clock, 30);
}

CheckResult detect_suite(const Options& o) {
  Stopwatch clock;
  Tally tally;
  std::mt19937_64 rng(31);
  const int count = o.quick ? 30 : 120;
  for (int i = 0; i < count; ++i) {
    const Hypergraph h = random_hypergraph(5 + rng() % 4, 3, 0.3, rng());
    const std::string tag = format("instance %d", i);
    const auto perm = random_perm(h.order(), rng);
    const Hypergraph g = h.relabeled(perm);
    for (const Pattern& pat : {Pattern::expanded_clique(3, 3), Pattern::generalized_fan(4, 3),
                               Pattern::clique_family(4, 3), Pattern::berge_clique(4), Pattern::m1()}) {
      const Witness a = contains(h, pat), b = contains(g, pat);
      tally.expect(a.found() == b.found(), tag + ": " + pat.describe() + " not label invariant");
      // Monotone patterns persist after adding any edge.
      if (a.found() && pat.monotone()) {
        Hypergraph bigger = h;
        for_each_combination(h.order(), 3, [&](std::span<const Vertex> e) {
          if (bigger.size() == h.size() && !h.contains_edge(e)) bigger = h.with_edge(Edge(e.begin(), e.end()));
        });
        tally.expect(contains(bigger, pat).found(), tag + ": " + pat.describe() + " lost after adding an edge");
      }
    }
    const Witness w = contains_subgraph(h, expanded_clique(3, 3));
    if (w.found()) tally.expect(w.vertices.size() == expanded_clique(3, 3).order(), tag + ": witness size");
  }
  tally.expect(contains_subgraph(complete_r_graph(5, 3), m1_pattern()).found(), "M1 in K_5^3");
  tally.expect(is_semibipartite_colorable(semibipartite_max(7)).found(), "G_7^1 semibipartite");
  tally.expect(is_g62_colorable(g62_balanced(8)).found(), "G_8^2 colorable");
  tally.expect(!contains_berge_clique(turan_hypergraph(6, 3, 3), 5).found() ||
                   brute_force_berge(turan_hypergraph(6, 3, 3), 5),
               "Berge K_5 in T_3(6,3) disagrees with brute force");
  return detail::finish("P-detect", "detector invariance and monotonicity", tally, "", clock, 120);
}

CheckResult extremal_suite(const Options& o) {
  Stopwatch clock;
  Tally tally;
  for (auto [n, r] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 4}}) {
    std::uint64_t seen = 0;
    EnumerateOptions eo;
    eo.threads = o.threads;
    enumerate_free(n, r, std::nullopt, [&](const Hypergraph&, bool) { ++seen; }, eo);
    tally.expect(seen == brute_force_class_count(n, r), format("class count n=%zu r=%zu: %llu", n, r,
                                                               static_cast<unsigned long long>(seen)));
  }
  // Triangle-free graphs on 5 vertices peak at t_2(5,2) = 6.
  const SearchRecord ex = ex_search(5, 2, Pattern::clique_family(3, 2));
  tally.expect(ex.best_value == 6.0, format("ex(5, K3) = %g", ex.best_value));

  const Hypergraph t = turan_hypergraph(9, 3, 3);
  tally.expect(codegree_threshold(9, 3, 2) == 0, "codegree threshold r = 2");
  const Hypergraph s = symmetrize(t, 0, 1);
  tally.expect(s.order() == t.order() && s == t, "symmetrizing twins changes the graph");

  std::mt19937_64 rng(3);
  for (int i = 0; i < (o.quick ? 3 : 10); ++i) {
    const std::vector<std::size_t> sizes{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    const Hypergraph h = complete_k_partite(sizes, 3);
    const std::size_t n = h.order();
    SolverConfig cfg;
    cfg.p = 3.0;
    cfg.threads = o.threads;
    const KPartiteCheck c = lambda_vs_kpartite_check(h, block_partition(sizes), cfg);
    tally.expect(c.holds, format("k-partite check %zu/%zu/%zu", sizes[0], sizes[1], sizes[2]));
    tally.expect(c.isomorphic_to_turan == (h.size() == turan_count(n, 3, 3)), "isomorphism flag");
  }

  HillClimbOptions hc;
  hc.budget = 60;
  hc.solver.p = 2.0;
  const SearchRecord climb = hill_climb(Hypergraph(6, 3), Pattern::clique_family(4, 3), hc);
  tally.expect(!climb.witnesses.empty() && climb.witnesses.front().verified_free, "hill climb witness");
  for (std::size_t i = 1; i < climb.trace.size(); ++i)
    tally.expect(climb.trace[i].lambda >= climb.trace[i - 1].lambda - 1e-9, "hill climb lambda decreased");
  return detail::finish("P-extremal", "enumeration and search invariants", tally, "", clock, 120);
}

CheckResult io_suite(const Options&) {
  Stopwatch clock;
  Tally tally;
  for (const auto& item : generator_corpus()) {
    const std::string text = dump(to_json(item.graph));
    tally.expect(hypergraph_from_json(text) == item.graph, item.name + ": JSON round trip");
  }
  for (const char* bad : {"{\"n\": 3, \"r\": 2, \"edges\": [[0, 0]]}", "{\"n\": 3, \"r\": 2, \"edges\": [[0, 1]",
                          "{\"n\": -1, \"r\": 2, \"edges\": []}", "[]"}) {
    bool threw = false;
    try {
      hypergraph_from_json(bad);
    } catch (const ValidationError&) {
      threw = true;
    }
    tally.expect(threw, std::string("accepted malformed input ") + bad);
  }
  return detail::finish("P-io", "JSON round trip and rejection", tally, "", clock, 30);
}

}  // namespace

std::vector<CheckResult> property_suites(const Options& options) {
  using Suite = CheckResult (*)(const Options&);
  const std::pair<const char*, Suite> suites[] = {
      {"P-hcore", hcore_suite},       {"P-construct", construct_suite}, {"P-spectral", spectral_suite},
      {"P-kernels", kernel_suite},    {"P-detect", detect_suite},       {"P-extremal", extremal_suite},
      {"P-io", io_suite}};
  std::vector<CheckResult> out;
  for (const auto& [id, suite] : suites) {
    try {
      out.push_back(suite(options));
    } catch (const std::exception& e) {
      out.push_back({id, "suite aborted", false, std::string("exception: ") + e.what(), 0.0});
    }
  }
  return out;
}

}  // namespace hyturan::verify
