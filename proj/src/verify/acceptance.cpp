#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "check_util.hpp"
#include "hyturan/construct.hpp"
#include "hyturan/detect.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/isomorphism.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan::verify {
namespace {

using detail::format;
using detail::Stopwatch;
using detail::Tally;

SolverConfig solver_config(const Options& o, double p) {
  SolverConfig c;
  c.p = p;
  c.threads = o.threads;
  return c;
}

CheckResult graph_consistency(const Options& o) {
  Stopwatch clock;
  Tally tally;
  double worst = 0.0;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + rng() % 9;
    const double prob = 0.25 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    const Hypergraph g = random_hypergraph(n, 2, prob, rng());
    const double solver = p_spectral_radius(g, solver_config(o, 2.0)).lambda;
    const double dense = adjacency_spectral_radius(g);
    worst = std::max(worst, std::abs(solver - dense));
    tally.expect(std::abs(solver - dense) <= 1e-8,
                 format("graph %d (n=%zu, m=%zu): solver %.17g vs eigensolve %.17g", i, n, g.size(), solver, dense));
  }
  return detail::finish("1", "graph consistency with dense eigensolve", tally, format("max |diff| %.3g", worst),
                        clock, 10);
}

CheckResult closed_forms(const Options& o) {
  Stopwatch clock;
  Tally tally;
  const double t = p_spectral_radius(turan_hypergraph(6, 3, 3), solver_config(o, 3.0)).lambda;
  tally.expect(std::abs(t - 8.0) <= 1e-6, format("lambda3(T_3(6,3)) = %.17g", t));
  const double g = p_spectral_radius(g62(), solver_config(o, 3.0)).lambda;
  tally.expect(std::abs(g - 16.0) <= 1e-6, format("lambda3(G_6^2) = %.17g", g));
  double worst = 0.0;
  for (std::size_t n : {6, 12})
    for (double p : {1.5, 2.0, 3.0, 6.0}) {
      const Hypergraph h = g62_balanced(n);
      const double scale = std::pow(static_cast<double>(n), 3.0 * (1.0 - 1.0 / p));
      const double expect = 4.0 / 9.0 * scale;
      const double lam = p_spectral_radius(h, solver_config(o, p)).lambda;
      // Lower side: uniform vector; upper side: the spex bound for M-free graphs.
      const double lower = evaluate_poly(h, std::vector<double>(n, std::pow(static_cast<double>(n), -1.0 / p)));
      const double upper = spex_m_upper_bound(n, p);
      worst = std::max(worst, std::abs(lam - expect) / scale);
      tally.expect(std::abs(lam - expect) <= 1e-5 * scale,
                   format("G_%zu^2 p=%g: %.17g vs %.17g", n, p, lam, expect));
      tally.expect(lower <= lam + 1e-9 * scale && lam <= upper + 1e-9 * scale,
                   format("G_%zu^2 p=%g: sandwich %.17g <= %.17g <= %.17g", n, p, lower, lam, upper));
    }
  return detail::finish("2", "closed-form sandwich values", tally,
                        format("T_3(6,3)=%.12g, G_6^2=%.12g, max rel dev %.3g", t, g, worst), clock, 30);
}

CheckResult lagrangian_exactness(const Options& o) {
  Stopwatch clock;
  Tally tally;
  std::string values;
  for (auto [k, r] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    const double lam = lagrangian(complete_r_graph(k, r), solver_config(o, 1.0)).lambda;
    const double expect = maclaurin_bound(k, r);
    tally.expect(std::abs(lam - expect) <= 1e-6, format("K_%zu^%zu: %.17g vs %.17g", k, r, lam, expect));
    values += format("%sK_%zu^%zu=%.12g", values.empty() ? "" : ", ", k, r, lam);
  }
  return detail::finish("3", "Lagrangian exactness on complete graphs", tally, values, clock, 60);
}

CheckResult lemma_properties(const Options& o) {
  Stopwatch clock;
  Tally tally;
  const int count = o.quick ? 150 : 1000;
  std::mt19937_64 rng(777);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, 4.0};
  std::size_t converged = 0;
  for (int i = 0; i < count; ++i) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t n = r + rng() % (11 - r);
    const double prob = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    const Hypergraph h = random_hypergraph(n, r, prob, rng());
    const double p = ps[rng() % 5];
    const SolverConfig cfg = solver_config(o, p);
    const std::string tag = format("instance %d (n=%zu r=%zu m=%zu p=%g)", i, n, r, h.size(), p);
    const SolverResult res = p_spectral_radius(h, cfg);
    const double m = static_cast<double>(h.size());
    const double fact = static_cast<double>(factorial(r));

    tally.expect(res.lambda <= size_upper_bound(h.size(), r, p) + 1e-9, tag + ": size bound");
    if (res.status == SolverStatus::converged) {
      ++converged;
      const double resid = residual(h, p, res, std::sqrt(cfg.tol));
      tally.expect(resid <= 1e-8, tag + format(": residual %.3g", resid));
    }

    std::vector<bool> split(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) split[j] = rng() & 1;
    const WeylOutcome weyl = weyl_check(h, split, cfg);
    tally.expect(weyl.holds, tag + format(": Weyl %.17g > %.17g + %.17g", weyl.whole, weyl.first, weyl.second));

    std::vector<Edge> missing;
    for_each_combination(n, r, [&](std::span<const Vertex> e) {
      if (!h.contains_edge(e)) missing.emplace_back(e.begin(), e.end());
    });
    if (!missing.empty()) {
      const Hypergraph bigger = h.with_edge(missing[rng() % missing.size()]);
      const double grown = p_spectral_radius(bigger, cfg).lambda;
      const double old_point = h.empty() ? 0.0 : evaluate_poly(bigger, res.vector.values);
      tally.expect(grown >= res.lambda - cfg.tol && old_point >= res.lambda - cfg.tol,
                   tag + format(": monotonicity %.17g < %.17g", grown, res.lambda));
    }

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double relabeled = p_spectral_radius(h.relabeled(perm), cfg).lambda;
    tally.expect(std::abs(relabeled - res.lambda) <= 1e-8,
                 tag + format(": relabeled %.17g vs %.17g", relabeled, res.lambda));

    if (!h.empty()) {
      const double big = p_spectral_radius(h, solver_config(o, 64.0)).lambda;
      const double ratio = big / std::pow(fact * m, 1.0 - 1.0 / 64.0);
      const double lower = std::pow(fact * m / std::pow(static_cast<double>(n), static_cast<double>(r)), 1.0 / 64.0);
      tally.expect(ratio >= lower - 1e-12 && ratio <= 1.0 + 1e-12,
                   tag + format(": p=64 ratio %.17g outside [%.17g, 1]", ratio, lower));
    }
  }
  return detail::finish("4", "lemma property suite", tally,
                        format("%d instances, %zu converged", count, converged), clock, 300);
}

CheckResult oracle_equivalence(const Options& o) {
  Stopwatch clock;
  Tally tally;
  double low = 0.0, high = 0.0;
  const auto corpus = small_corpus();
  for (const auto& item : corpus)
    for (double p : {1.0, 1.5, 2.0, 3.0, 6.0}) {
      const double oracle = oracle_p_spectral(item.graph, p);
      const double lam = p_spectral_radius(item.graph, solver_config(o, p)).lambda;
      const double d = lam - oracle;
      low = std::min(low, d);
      high = std::max(high, d);
      tally.expect(d >= -1e-6 && d <= 1e-4,
                   format("%s p=%g: solver %.17g oracle %.17g", item.name.c_str(), p, lam, oracle));
    }
  return detail::finish("5", "oracle equivalence (n <= 6)", tally,
                        format("%zu graphs, solver-oracle in [%.3g, %.3g]", corpus.size(), low, high), clock, 180);
}

CheckResult extremal_runs(const Options& o) {
  Stopwatch clock;
  Tally tally;
  std::string detail;
  EnumerateOptions eo;
  eo.threads = o.threads;
  const std::vector<std::size_t> orders = o.quick ? std::vector<std::size_t>{5} : std::vector<std::size_t>{5, 6};
  for (const Pattern& pattern : {Pattern::clique_family(4, 3), Pattern::fan_family(4, 3)})
    for (std::size_t n : orders) {
      const SearchRecord ex = ex_search(n, 3, pattern, eo);
      const SearchRecord spex = spex_search(n, 3, pattern, solver_config(o, 3.0), eo);
      for (const SearchRecord* rec : {&ex, &spex}) {
        const char* what = rec == &ex ? "ex" : "spex";
        tally.expect(!rec->witnesses.empty(), format("%s n=%zu %s: no witness", what, n, rec->pattern.c_str()));
        for (const auto& w : rec->witnesses)
          tally.expect(w.verified_free && contains(w.graph, pattern).status == SearchStatus::absent,
                       format("%s n=%zu %s: witness not free", what, n, rec->pattern.c_str()));
        tally.expect(rec->turan.has_value(), format("%s n=%zu: no Turan comparison", what, n));
      }
      detail += format("%s%s n=%zu: ex=%g (t_3=%g, T among witnesses: %s), spex3=%.10g (T: %.10g, %s)",
                       detail.empty() ? "" : "; ", pattern.describe().c_str(), n, ex.best_value,
                       ex.turan ? ex.turan->value : 0.0, ex.turan && ex.turan->among_witnesses ? "yes" : "no",
                       spex.best_value, spex.turan ? spex.turan->value : 0.0,
                       spex.turan && spex.turan->among_witnesses ? "yes" : "no");
    }
  return detail::finish("6", "exhaustive desk-scale extremal runs", tally, detail, clock, 600);
}

CheckResult detector_agreement(const Options&) {
  Stopwatch clock;
  Tally tally;
  std::mt19937_64 rng(4242);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = 2 + rng() % 2;
    const std::size_t n = 4 + rng() % 5;
    const std::size_t t = 3 + rng() % 2;
    const double prob = (r == 2 ? 0.3 : 0.12) + 0.4 * static_cast<double>(rng() % 1000) / 1000.0;
    const Hypergraph h = random_hypergraph(n, r, prob, rng());
    const Witness w = contains_berge_clique(h, t);
    const bool brute = brute_force_berge(h, t);
    tally.expect(w.found() == brute, format("instance %d (n=%zu r=%zu t=%zu): detector %d brute %d", i, n, r, t,
                                            int(w.found()), int(brute)));
    if (!w.found()) continue;
    ++positives;
    // Witness soundness: distinct edges, each containing its core pair.
    std::vector<std::size_t> used = w.edges;
    std::sort(used.begin(), used.end());
    bool ok = w.vertices.size() == t && std::adjacent_find(used.begin(), used.end()) == used.end();
    std::size_t q = 0;
    for (std::size_t a = 0; a < t && ok; ++a)
      for (std::size_t b = a + 1; b < t && ok; ++b, ++q) {
        auto e = h.edge(w.edges[q]);
        ok = std::find(e.begin(), e.end(), w.vertices[a]) != e.end() &&
             std::find(e.begin(), e.end(), w.vertices[b]) != e.end();
      }
    tally.expect(ok, format("instance %d: invalid Berge witness", i));
  }

  std::size_t implications = 0;
  for (const auto& item : generator_corpus()) {
    const std::size_t r = item.graph.uniformity();
    for (std::size_t t = std::max<std::size_t>(r, 3); t <= r + 2; ++t) {
      if (contains_subgraph(item.graph, expanded_clique(t, r)).found()) {
        ++implications;
        tally.expect(clique_family_core(item.graph, t).found(),
                     format("%s: H_%zu^%zu embeds but no clique-family core", item.name.c_str(), t, r));
      }
      if (contains_subgraph(item.graph, generalized_fan(t, r)).found()) {
        ++implications;
        tally.expect(fan_family_core(item.graph, t).found(),
                     format("%s: F_%zu^%zu embeds but no fan-family core", item.name.c_str(), t, r));
      }
    }
  }
  tally.expect(positives > 0 && implications > 0, "corpus never exercises a positive case");
  return detail::finish("7", "detector agreement", tally,
                        format("200 Berge instances (%zu positive), %zu embedding implications", positives,
                               implications),
                        clock, 120);
}

CheckResult stability_diagnostics(const Options&) {
  Stopwatch clock;
  Tally tally;
  const Hypergraph t = turan_hypergraph(12, 3, 3);
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(12345);
  std::shuffle(order.begin(), order.end(), rng);
  Hypergraph h = t;
  for (int i = 0; i < 5; ++i) h = h.without_edge(t.edge(order[i]));
  const StabilityReport rep = stability_report(h, 3, 0.01);
  tally.expect(rep.edit_distance_to_turan == 5, format("edit distance %zu", rep.edit_distance_to_turan));
  tally.expect(rep.bad == 0, format("bad %zu", rep.bad));
  tally.expect(rep.best_partition.normalized().assignment == turan_partition(12, 3).normalized().assignment,
               "defining partition not recovered");

  std::size_t inputs = 0;
  auto clean = [&](const Hypergraph& g, const Partition& defining, std::size_t k, const std::string& name) {
    ++inputs;
    const StabilityReport r = stability_report(g, k, 0.01);
    tally.expect(r.missing == 0 && r.bad == 0, name + ": nonzero missing/bad");
    tally.expect(r.sparse_pairs.empty() && r.heavy_sparse_vertices.empty() && r.heavy_missing_vertices.empty(),
                 name + ": W, L or M nonempty");
    tally.expect(r.best_partition.normalized().assignment == defining.normalized().assignment,
                 name + ": defining partition not recovered");
  };
  clean(t, turan_partition(12, 3), 3, "T_3(12,3)");
  clean(turan_hypergraph(9, 4, 3), turan_partition(9, 4), 4, "T_3(9,4)");
  clean(turan_hypergraph(8, 2, 2), turan_partition(8, 2), 2, "T_2(8,2)");
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{1, 2, 3}, {2, 3, 4, 2}, {3, 3, 2}}) {
    clean(complete_k_partite(sizes, 3), block_partition(sizes), sizes.size(), "complete_k_partite");
  }
  return detail::finish("8", "stability diagnostics", tally,
                        format("perturbed T_3(12,3): edit=%zu bad=%zu; %zu clean inputs", rep.edit_distance_to_turan,
                               rep.bad, inputs),
                        clock, 60);
}

CheckResult construction_counts(const Options&) {
  Stopwatch clock;
  Tally tally;
  std::size_t cases = 0;
  for (std::size_t r = 2; r <= 5; ++r)
    for (std::size_t k = r; k <= 5; ++k)
      for (std::size_t n = k; n <= 30; ++n) {
        ++cases;
        const Hypergraph h = turan_hypergraph(n, k, r);
        tally.expect(h.size() == turan_count(n, k, r), format("T_%zu(%zu,%zu)", r, n, k));
      }
  tally.expect(g62().size() == 16, "e(G_6^2)");
  for (std::size_t n : {6, 12, 18}) {
    const std::vector<std::size_t> sizes(6, n / 6);
    tally.expect(g62_blowup(sizes).size() == 2 * n * n * n / 27, format("balanced G_%zu^2", n));
  }
  for (std::size_t n = 3; n <= 30; ++n) {
    const std::size_t a = n / 3;
    tally.expect(semibipartite_max(n).size() == a * binomial(n - a, 2), format("G_%zu^1", n));
  }
  return detail::finish("9", "construction counts", tally, format("%zu Turan cases", cases), clock, 5);
}

}  // namespace

CheckResult acceptance_criterion(int id, const Options& options) {
  switch (id) {
    case 1:
      return graph_consistency(options);
    case 2:
      return closed_forms(options);
    case 3:
      return lagrangian_exactness(options);
    case 4:
      return lemma_properties(options);
    case 5:
      return oracle_equivalence(options);
    case 6:
      return extremal_runs(options);
    case 7:
      return detector_agreement(options);
    case 8:
      return stability_diagnostics(options);
    case 9:
      return construction_counts(options);
  }
  throw ValidationError("unknown acceptance criterion " + std::to_string(id));
}

}  // namespace hyturan::verify
