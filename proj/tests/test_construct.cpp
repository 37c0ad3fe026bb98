#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/isomorphism.hpp"

using namespace hyturan;

TEST_SUITE("construct") {
  TEST_CASE("Turan counts") {
    CHECK(turan_count(6, 3, 3) == 8);
    CHECK(turan_count(7, 3, 3) == 12);
    CHECK(turan_count(5, 2, 2) == 6);
    CHECK(turan_count(9, 3, 3) == 27);
    CHECK(turan_hypergraph(9, 3, 3).size() == 27);
  }

  TEST_CASE("Turan hypergraph layout") {
    const Hypergraph t = turan_hypergraph(6, 3, 3);
    CHECK(t.size() == 8);
    CHECK(turan_partition(6, 3).assignment == std::vector<std::size_t>{0, 0, 1, 1, 2, 2});
    CHECK(turan_hypergraph(4, 4, 4).edges() == std::vector<Edge>{{0, 1, 2, 3}});
    CHECK_THROWS_AS(turan_hypergraph(5, 2, 3), ValidationError);
  }

  TEST_CASE("complete graphs") {
    CHECK(complete_r_graph(4, 3).size() == 4);
    CHECK(complete_r_graph(3, 3).size() == 1);
    CHECK(complete_r_graph(5, 3).size() == 10);
  }

  TEST_CASE("expanded clique") {
    const Hypergraph h = expanded_clique(4, 3);
    CHECK(h.order() == 10);
    CHECK(h.size() == 6);
    CHECK(expanded_clique(3, 2) == complete_r_graph(3, 2));
    const Hypergraph h44 = expanded_clique(4, 4);
    CHECK(h44.order() == 16);
    CHECK(h44.size() == 6);
    const Hypergraph shared = expanded_clique(4, 3, Enlargement::shared);
    CHECK(shared.order() == 5);
    CHECK(shared.size() == 6);
  }

  TEST_CASE("generalized fan") {
    const Hypergraph f = generalized_fan(4, 3);
    CHECK(f.order() == 7);
    CHECK(f.size() == 4);
    CHECK(f.contains_edge(std::vector<Vertex>{0, 1, 2}));
    CHECK(generalized_fan(3, 2) == complete_r_graph(3, 2));
    CHECK(generalized_fan(5, 3).order() == 12);
    CHECK(generalized_fan(5, 3).size() == 8);
  }

  TEST_CASE("complete k-partite") {
    const std::vector<std::size_t> twos{2, 2, 2}, ones{1, 1, 1, 1, 1}, bad{2, 4};
    CHECK(complete_k_partite(twos, 3) == turan_hypergraph(6, 3, 3));
    CHECK(complete_k_partite(ones, 3) == complete_r_graph(5, 3));
    CHECK_THROWS_AS(complete_k_partite(bad, 3), ValidationError);
  }

  TEST_CASE("semibipartite maximum") {
    CHECK(semibipartite_max(6).size() == 12);
    CHECK(semibipartite_max(12).size() == 112);
    CHECK(semibipartite_max(3).edges() == std::vector<Edge>{{0, 1, 2}});
  }

  TEST_CASE("G_6^2 and blow-ups") {
    const Hypergraph g = g62();
    CHECK(g.size() == 16);
    for (const Edge& e : std::vector<Edge>{{0, 1, 2}, {0, 1, 5}, {2, 3, 4}, {3, 4, 5}})
      CHECK_FALSE(g.contains_edge(e));
    const std::vector<std::size_t> twos(6, 2), ones(6, 1);
    CHECK(g62_blowup(twos).size() == 128);
    CHECK(g62_blowup(twos).order() == 12);
    CHECK(g62_blowup(ones) == g);
    for (std::size_t n = 6; n <= 13; ++n) {
      const auto s = g62_balanced_sizes(n);
      for (std::size_t v : s) CHECK((v == n / 6 || v == (n + 5) / 6));
    }
  }

  TEST_CASE("M1") {
    const Hypergraph m = m1_pattern();
    CHECK(m.size() == 9);
    CHECK_FALSE(m.contains_edge(std::vector<Vertex>{2, 3, 4}));
  }

  TEST_CASE("random hypergraphs") {
    CHECK(random_hypergraph(6, 3, 0.0, 1).empty());
    CHECK(random_hypergraph(6, 3, 1.0, 1) == complete_r_graph(6, 3));
    CHECK(random_hypergraph(8, 3, 0.5, 42) == random_hypergraph(8, 3, 0.5, 42));
    CHECK_FALSE(random_hypergraph(8, 3, 0.5, 42) == random_hypergraph(8, 3, 0.5, 43));
  }
}
