#include <cmath>

#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/spectral.hpp"
#include "hyturan/verify.hpp"

using namespace hyturan;

namespace {

SolverConfig at(double p) {
  SolverConfig c;
  c.p = p;
  return c;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("polynomial evaluation") {
    const Hypergraph edge(3, 3, {{0, 1, 2}});
    CHECK(evaluate_poly(edge, std::vector<double>{1, 1, 1}) == doctest::Approx(6.0));
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(evaluate_poly(complete_r_graph(3, 2), std::vector<double>{s, s, s}) == doctest::Approx(2.0));
    CHECK(evaluate_poly(complete_r_graph(5, 3), std::vector<double>(5, 0.0)) == 0.0);
  }

  TEST_CASE("single edge closed form") {
    const Hypergraph edge(3, 3, {{0, 1, 2}});
    for (double p : {3.0, 4.0, 6.0})
      CHECK(p_spectral_radius(edge, at(p)).lambda == doctest::Approx(6.0 * std::pow(3.0, -3.0 / p)).epsilon(1e-10));
    CHECK(p_spectral_radius(edge, at(3.0)).lambda == doctest::Approx(2.0).epsilon(1e-10));
  }

  TEST_CASE("graphs match the adjacency eigenvalue") {
    CHECK(std::abs(p_spectral_radius(complete_r_graph(3, 2), at(2.0)).lambda - 2.0) <= 1e-8);
    const Hypergraph g = random_hypergraph(9, 2, 0.4, 17);
    CHECK(std::abs(p_spectral_radius(g, at(2.0)).lambda - verify::adjacency_spectral_radius(g)) <= 1e-8);
  }

  TEST_CASE("Turan and G_6^2 values") {
    CHECK(std::abs(p_spectral_radius(turan_hypergraph(6, 3, 3), at(3.0)).lambda - 8.0) <= 1e-6);
    CHECK(std::abs(p_spectral_radius(g62(), at(3.0)).lambda - 16.0) <= 1e-6);
  }

  TEST_CASE("Lagrangians") {
    CHECK(std::abs(lagrangian(complete_r_graph(4, 3), at(1.0)).lambda - 0.375) <= 1e-9);
    CHECK(std::abs(lagrangian(Hypergraph(3, 3, {{0, 1, 2}}), at(1.0)).lambda - 2.0 / 9.0) <= 1e-9);
    CHECK(std::abs(lagrangian(complete_r_graph(3, 2), at(1.0)).lambda - 2.0 / 3.0) <= 1e-9);
    // p = 1 through the general entry point routes to the same path.
    CHECK(std::abs(p_spectral_radius(complete_r_graph(5, 3), at(1.0)).lambda - 0.48) <= 1e-9);
  }

  TEST_CASE("p = infinity") {
    CHECK(p_spectral_radius(complete_r_graph(5, 3), at(kInfiniteP)).lambda == 60.0);
  }

  TEST_CASE("edgeless input") {
    const SolverResult res = p_spectral_radius(Hypergraph(4, 3), at(2.0));
    CHECK(res.lambda == 0.0);
    CHECK(residual(Hypergraph(4, 3), 2.0, res) == 0.0);
  }

  TEST_CASE("residual") {
    const Hypergraph edge(3, 3, {{0, 1, 2}});
    SolverResult exact;
    exact.lambda = 2.0;
    exact.vector.p = 3.0;
    exact.vector.values.assign(3, std::pow(3.0, -1.0 / 3.0));
    CHECK(residual(edge, 3.0, exact) <= 1e-14);

    const Hypergraph g = random_hypergraph(8, 3, 0.5, 9);
    SolverResult res = p_spectral_radius(g, at(2.0));
    CHECK(residual(g, 2.0, res) <= 1e-8);
    std::size_t i = 0;
    while (res.vector.values[i] < 1e-3) ++i;
    res.vector.values[i] += 1e-3;
    CHECK(residual(g, 2.0, res) > 1e-4);
  }

  TEST_CASE("closed-form bounds") {
    CHECK(size_upper_bound(8, 3, 3.0) == doctest::Approx(std::pow(48.0, 2.0 / 3.0)));
    CHECK(size_upper_bound(8, 3, 3.0) == doctest::Approx(13.208).epsilon(1e-4));
    CHECK(maclaurin_bound(3, 3) == doctest::Approx(2.0 / 9.0));
    CHECK(turan_lower_bound(6, 3, 3, 3.0) == doctest::Approx(8.0));
  }

  TEST_CASE("oracle") {
    CHECK(verify::jacobi_largest_eigenvalue({2, 1, 1, 2}, 2) == doctest::Approx(3.0));
    CHECK(oracle_p_spectral(Hypergraph(3, 3, {{0, 1, 2}}), 3.0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(oracle_p_spectral(complete_r_graph(3, 2), 2.0) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(oracle_p_spectral(complete_r_graph(4, 3), 1.0) == doctest::Approx(0.375).epsilon(1e-8));
    CHECK_THROWS_AS(oracle_p_spectral(complete_r_graph(7, 3), 2.0), CapacityError);
  }

  TEST_CASE("determinism across thread counts") {
    const Hypergraph g = random_hypergraph(10, 3, 0.4, 3);
    SolverConfig one = at(2.5), four = at(2.5);
    four.threads = 4;
    const SolverResult a = p_spectral_radius(g, one), b = p_spectral_radius(g, four);
    CHECK(a.lambda == b.lambda);
    CHECK(a.vector.values == b.vector.values);
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(p_spectral_radius(complete_r_graph(4, 3), at(0.5)), ValidationError);
  }
}
