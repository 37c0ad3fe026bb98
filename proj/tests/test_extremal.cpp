#include <cmath>

#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/isomorphism.hpp"
#include "hyturan/verify.hpp"

using namespace hyturan;

TEST_SUITE("extremal") {
  TEST_CASE("enumeration counts isomorphism classes") {
    std::uint64_t seen = 0;
    enumerate_free(4, 3, std::nullopt, [&](const Hypergraph&, bool) { ++seen; });
    CHECK(seen == 5);
    CHECK(seen == verify::brute_force_class_count(4, 3));
    seen = 0;
    enumerate_free(5, 2, std::nullopt, [&](const Hypergraph&, bool) { ++seen; });
    CHECK(seen == 34);
  }

  TEST_CASE("enumeration respects the pattern") {
    const Pattern pat = Pattern::clique_family(4, 3);
    std::size_t maximal = 0;
    enumerate_free(5, 3, pat, [&](const Hypergraph& g, bool is_max) {
      CHECK_FALSE(clique_family_core(g, 4).found());
      maximal += is_max;
    });
    CHECK(maximal > 0);
  }

  TEST_CASE("capacity") {
    CHECK_THROWS_AS(enumerate_free(20, 3, std::nullopt, [](const Hypergraph&, bool) {}), CapacityError);
    CHECK_THROWS_AS(enumerate_free(5, 3, Pattern::g62_colorable(), [](const Hypergraph&, bool) {}), ValidationError);
  }

  TEST_CASE("ex and spex at n = 5") {
    const SearchRecord ex = ex_search(5, 3, Pattern::clique_family(4, 3));
    CHECK(ex.mode == SearchMode::exhaustive);
    REQUIRE(ex.turan.has_value());
    CHECK(ex.turan->k == 3);
    CHECK(ex.turan->value == 4.0);
    for (const auto& w : ex.witnesses) {
      CHECK(w.verified_free);
      CHECK(w.value == ex.best_value);
    }
    SolverConfig cfg;
    cfg.p = 3.0;
    const SearchRecord spex = spex_search(5, 3, Pattern::clique_family(4, 3), cfg);
    CHECK(spex.objective == Objective::lambda);
    CHECK(!spex.witnesses.empty());
    CHECK(spex.best_value >= spex.turan->value - 1e-9);
  }

  TEST_CASE("symmetrization") {
    const Hypergraph two(6, 3, {{0, 1, 2}, {3, 4, 5}});
    const Hypergraph s = symmetrize(two, 0, 3);
    CHECK(s.edges() == std::vector<Edge>{{0, 4, 5}, {3, 4, 5}});
    const Hypergraph lonely(6, 3, {{1, 2, 5}});
    CHECK(symmetrize(lonely, 0, 3) == lonely);
    const Hypergraph h = random_hypergraph(7, 3, 0.5, 8);
    const Hypergraph t = symmetrize(h, 1, 4);
    for (const Edge& e : link(t, 1)) {
      if (std::find(e.begin(), e.end(), 4) != e.end()) continue;
      CHECK(std::find(link(t, 4).begin(), link(t, 4).end(), e) != link(t, 4).end());
    }
  }

  TEST_CASE("hill climb") {
    const Hypergraph t = turan_hypergraph(9, 3, 3);
    HillClimbOptions opts;
    opts.solver.p = 3.0;
    opts.seed = 7;
    const double target = p_spectral_radius(t, opts.solver).lambda;
    const Hypergraph start = t.without_edge(t.edge(0)).without_edge(t.edge(13));
    const SearchRecord rec = hill_climb(start, Pattern::clique_family(4, 3), opts);
    CHECK(rec.mode == SearchMode::hill_climb);
    CHECK(rec.best_value == doctest::Approx(target).epsilon(1e-8));
    CHECK(rec.witnesses.front().verified_free);
    const SearchRecord again = hill_climb(start, Pattern::clique_family(4, 3), opts);
    REQUIRE(again.trace.size() == rec.trace.size());
    for (std::size_t i = 0; i < rec.trace.size(); ++i) CHECK(again.trace[i].move == rec.trace[i].move);

    HillClimbOptions free_opts;
    free_opts.solver.p = 2.0;
    const SearchRecord full = hill_climb(Hypergraph(5, 3), std::nullopt, free_opts);
    CHECK(full.witnesses.front().graph == complete_r_graph(5, 3));
  }

  TEST_CASE("codegree threshold") {
    CHECK(codegree_threshold(12, 3, 2) == 0);
    CHECK(codegree_threshold(12, 3, 3) == (3 + 1 + 6) * 1);
    CHECK(codegree_threshold(10, 4, 4) == (4 + 1 + 2 * 10) * 10);
  }

  TEST_CASE("stability report") {
    const Hypergraph t = turan_hypergraph(12, 3, 3);
    const StabilityReport clean = stability_report(t, 3, 0.05);
    CHECK(clean.missing == 0);
    CHECK(clean.bad == 0);
    CHECK(clean.sparse_pairs.empty());
    CHECK(clean.heavy_sparse_vertices.empty());
    CHECK(clean.heavy_missing_vertices.empty());
    CHECK(clean.exact);

    Hypergraph less = t;
    for (std::size_t j : {0, 20, 40}) less = less.without_edge(t.edge(j));
    const StabilityReport minus = stability_report(less, 3, 0.05);
    CHECK(minus.missing == 3);
    CHECK(minus.bad == 0);
    CHECK(minus.edit_distance_to_turan == 3);
    CHECK(minus.missing + minus.bad == 3);

    const StabilityReport plus = stability_report(t.with_edge({0, 1, 2}), 3, 0.05);
    CHECK(plus.bad >= 1);
    CHECK(plus.threshold_l == doctest::Approx(std::pow(0.05, 1.0 / 9.0) * 12));
    CHECK(plus.threshold_m == doctest::Approx(std::pow(0.05, 5.0 / 36.0) * 144));
  }

  TEST_CASE("lambda versus the Turan graph") {
    SolverConfig cfg;
    cfg.p = 3.0;
    const Hypergraph t = turan_hypergraph(6, 3, 3);
    const KPartiteCheck same = lambda_vs_kpartite_check(t, turan_partition(6, 3), cfg);
    CHECK(same.holds);
    CHECK(same.isomorphic_to_turan);
    CHECK(std::abs(same.lambda - same.lambda_turan) <= 1e-9);
    const KPartiteCheck less = lambda_vs_kpartite_check(t.without_edge(t.edge(0)), turan_partition(6, 3), cfg);
    CHECK(less.holds);
    CHECK(less.strict);
    const std::vector<std::size_t> sizes{1, 2, 3};
    const KPartiteCheck lop = lambda_vs_kpartite_check(complete_k_partite(sizes, 3), block_partition(sizes), cfg);
    CHECK(lop.strict);
    CHECK(lop.lambda < 8.0);
  }
}
