#include <random>

#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/kernels.hpp"

using namespace hyturan;
using namespace hyturan::kernels;

TEST_SUITE("kernels") {
  TEST_CASE("scalar and AVX2 agree bitwise") {
    if (!backend_available(Backend::avx2)) {
      MESSAGE("AVX2 unavailable; equivalence not exercised");
      return;
    }
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t r = 2; r <= 6; ++r)
      for (std::size_t n : {r, r + 1, r + 3, r + 7}) {
        const Hypergraph h = random_hypergraph(n, r, 0.7, rng());
        const EdgeTable t(h);
        std::vector<double> x(n);
        for (double& v : x) v = unit(rng);
        std::vector<double> a(h.size()), b(h.size()), ga(n, 0.0), gb(n, 0.0);
        edge_products(Backend::scalar, t, x, a);
        edge_products(Backend::avx2, t, x, b);
        CHECK(a == b);
        accumulate_partials(Backend::scalar, t, x, ga);
        accumulate_partials(Backend::avx2, t, x, gb);
        CHECK(ga == gb);
      }
  }

  TEST_CASE("partials of a single edge") {
    const EdgeTable t(Hypergraph(3, 3, {{0, 1, 2}}));
    std::vector<double> x{2, 3, 5}, g(3, 0.0), prod(1);
    edge_products(t, x, prod);
    CHECK(prod[0] == 30.0);
    accumulate_partials(t, x, g);
    CHECK(g == std::vector<double>{15, 10, 6});
  }

  TEST_CASE("pairwise sum") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  }

  TEST_CASE("backend selection") {
    const Backend before = active_backend();
    set_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    CHECK(backend_name(Backend::scalar) == "scalar");
    set_backend(before);
  }
}
