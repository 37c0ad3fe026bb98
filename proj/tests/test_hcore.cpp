#include <numeric>

#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/isomorphism.hpp"

using namespace hyturan;

TEST_SUITE("hcore") {
  TEST_CASE("construction and validation") {
    const Hypergraph h(3, 3, {{0, 1, 2}});
    CHECK(h.size() == 1);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 1}}), ValidationError);
    CHECK_THROWS_AS(Hypergraph(4, 2, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS(Hypergraph(3, 2, {{0, 3}}));
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1}}), ValidationError);
  }

  TEST_CASE("edges are stored sorted") {
    const Hypergraph h(4, 2, {{3, 2}, {1, 0}, {2, 0}});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(h.contains_edge(std::vector<Vertex>{2, 3}));
    CHECK(h.find_edge(std::vector<Vertex>{1, 3}) == h.size());
  }

  TEST_CASE("degree, codegree and link") {
    const Hypergraph k4 = complete_r_graph(4, 3);
    CHECK(degree(k4, 0) == 3);
    CHECK(codegree(k4, 0, 1) == 2);
    CHECK(link(Hypergraph(3, 3, {{0, 1, 2}}), 0) == std::vector<Edge>{{1, 2}});
    CHECK_THROWS_AS(degree(k4, 9), IndexError);
  }

  TEST_CASE("strong independence") {
    const Hypergraph t = turan_hypergraph(6, 3, 3);
    CHECK(is_strong_independent(t, std::vector<Vertex>{0, 1}));
    CHECK_FALSE(is_strong_independent(t, std::vector<Vertex>{0, 2}));
    CHECK(is_strong_independent(t, std::vector<Vertex>{}));
  }

  TEST_CASE("k-partiteness") {
    CHECK(is_k_partite(turan_hypergraph(6, 3, 3), turan_partition(6, 3)));
    const Hypergraph k4 = complete_r_graph(4, 3);
    for (std::size_t a = 0; a < 81; ++a) {
      std::vector<std::size_t> assign(4);
      for (std::size_t i = 0, c = a; i < 4; ++i, c /= 3) assign[i] = c % 3;
      CHECK_FALSE(is_k_partite(k4, Partition(3, assign)));
    }
    CHECK(is_k_partite(Hypergraph(5, 3), Partition(3, {0, 0, 0, 1, 2})));
  }

  TEST_CASE("transversal number") {
    CHECK(transversal_number(Hypergraph(5, 3)) == 0);
    CHECK(transversal_number(Hypergraph(3, 3, {{0, 1, 2}})) == 1);
    CHECK(transversal_number(complete_r_graph(4, 3)) == 2);
  }

  TEST_CASE("blow-up") {
    const std::vector<std::size_t> s23{2, 3};
    CHECK(blow_up(Hypergraph(2, 2, {{0, 1}}), s23).size() == 6);
    const std::vector<std::size_t> twos(6, 2), ones(6, 1);
    CHECK(blow_up(g62(), twos).size() == 128);
    CHECK(is_isomorphic(blow_up(g62(), ones), g62()));
  }

  TEST_CASE("partition score") {
    CHECK(partition_score(turan_hypergraph(6, 3, 3), turan_partition(6, 3)) == 24);
    CHECK(partition_score(Hypergraph(3, 3, {{0, 1, 2}}), Partition(1, {0, 0, 0})) == 1);
    CHECK(partition_score(Hypergraph(4, 3), Partition(2, {0, 1, 0, 1})) == 0);
  }

  TEST_CASE("edit delta and isomorphism") {
    const Hypergraph t = turan_hypergraph(6, 3, 3);
    CHECK(edit_delta(t, t).total() == 0);
    CHECK(edit_delta(t, t.without_edge(t.edge(3))).total() == 1);
    std::vector<Vertex> perm{5, 3, 1, 0, 2, 4};
    CHECK(is_isomorphic(t, t.relabeled(perm)));
    CHECK_FALSE(is_isomorphic(t, t.without_edge(t.edge(0))));
    CHECK_THROWS_AS(canonical_form(Hypergraph(13, 2)), CapacityError);
  }

  TEST_CASE("intersection lower bound") {
    const std::vector<std::size_t> a{3, 3}, b{5}, c{1, 1};
    CHECK(intersection_lower_bound(a, 4) == 2);
    CHECK(intersection_lower_bound(b, 5) == 5);
    CHECK(intersection_lower_bound(c, 2) == 0);
  }

  TEST_CASE("induced subgraph") {
    const Hypergraph k5 = complete_r_graph(5, 3);
    const Hypergraph sub = induced(k5, std::vector<Vertex>{0, 2, 4, 3});
    CHECK(sub == complete_r_graph(4, 3));
  }
}
