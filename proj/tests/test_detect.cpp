#include <algorithm>

#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/detect.hpp"
#include "hyturan/verify.hpp"

using namespace hyturan;

TEST_SUITE("detect") {
  TEST_CASE("subgraph embedding") {
    CHECK(contains_subgraph(complete_r_graph(5, 3), complete_r_graph(4, 3)).found());
    CHECK_FALSE(contains_subgraph(turan_hypergraph(12, 3, 3), expanded_clique(4, 3)).found());
    const Hypergraph two(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(contains_subgraph(Hypergraph(3, 3, {{0, 1, 2}}), two).found());

    const Witness w = contains_subgraph(complete_r_graph(6, 3), m1_pattern());
    REQUIRE(w.found());
    const Hypergraph f = m1_pattern();
    for (std::size_t j = 0; j < f.size(); ++j) {
      Edge image;
      for (Vertex v : f.edge(j)) image.push_back(w.vertices[v]);
      std::sort(image.begin(), image.end());
      CHECK(complete_r_graph(6, 3).contains_edge(image));
    }
  }

  TEST_CASE("homomorphism") {
    const std::vector<std::size_t> twos3{2, 2, 2}, twos6(6, 2);
    const Hypergraph edge(3, 3, {{0, 1, 2}});
    CHECK(contains_hom(edge, blow_up(edge, twos3)).found());
    CHECK_FALSE(contains_hom(Hypergraph(4, 3), edge).found());
    CHECK(contains_hom(g62(), g62_blowup(twos6)).found());
  }

  TEST_CASE("family cores") {
    const Witness w = clique_family_core(complete_r_graph(4, 3), 4);
    REQUIRE(w.found());
    CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(clique_family_core(turan_hypergraph(9, 3, 3), 4).found());
    CHECK_FALSE(fan_family_core(turan_hypergraph(9, 3, 3), 4).found());
    // t <= r is degenerate: any edge is a fan core.
    CHECK(fan_family_core(turan_hypergraph(9, 3, 3), 3).found());
    CHECK(fan_family_core(generalized_fan(5, 3), 5).found());
    CHECK_FALSE(fan_family_core(expanded_clique(4, 3), 4).found());
    CHECK(clique_family_core(expanded_clique(4, 3), 4).found());
  }

  TEST_CASE("Berge cliques") {
    CHECK_FALSE(contains_berge_clique(Hypergraph(3, 3, {{0, 1, 2}}), 3).found());
    const Witness w = contains_berge_clique(complete_r_graph(5, 3), 3);
    REQUIRE(w.found());
    CHECK(w.edges.size() == 3);
    CHECK_FALSE(contains_berge_clique(turan_hypergraph(12, 3, 3), 4).found());
    CHECK(verify::brute_force_berge(complete_r_graph(5, 3), 3));
  }

  TEST_CASE("colourability") {
    const Witness s = is_semibipartite_colorable(semibipartite_max(6));
    REQUIRE(s.found());
    CHECK(s.vertices == std::vector<Vertex>{0, 1});
    CHECK_FALSE(is_semibipartite_colorable(complete_r_graph(4, 3)).found());
    const std::vector<std::size_t> twos(6, 2);
    CHECK(is_g62_colorable(g62_blowup(twos)).found());
    CHECK(is_g62_colorable(complete_r_graph(4, 3)).found());
    CHECK_FALSE(is_g62_colorable(m1_pattern()).found());
  }

  TEST_CASE("M family") {
    int which = 0;
    CHECK(contains_m_family(complete_r_graph(5, 3), &which).found());
    CHECK(which == 1);
    CHECK(contains_m1(complete_r_graph(5, 3)).found());
    CHECK_FALSE(contains_m_family(g62()).found());
    CHECK_FALSE(contains_m_family(semibipartite_max(9)).found());
    CHECK_FALSE(contains_m_family(g62_balanced(12)).found());
  }

  TEST_CASE("budget and capacity") {
    DetectLimits tiny;
    tiny.node_budget = 3;
    CHECK(contains_subgraph(turan_hypergraph(12, 3, 3), expanded_clique(4, 3), tiny).status ==
          SearchStatus::budget_exceeded);
    CHECK_THROWS_AS(clique_family_core(Hypergraph(65, 3), 4), CapacityError);
  }

  TEST_CASE("pattern dispatch") {
    CHECK(parse_kind("clique-family") == PatternKind::clique_family);
    CHECK_FALSE(parse_kind("nonsense").has_value());
    for (PatternKind k : {PatternKind::explicit_graph, PatternKind::berge_clique, PatternKind::g62_colorable})
      CHECK(parse_kind(kind_name(k)) == k);
    CHECK(Pattern::clique_family(4, 3).describe() == "clique-family(t=4,r=3)");
    CHECK(Pattern::berge_clique(4).monotone());
    CHECK_FALSE(Pattern::semibipartite_colorable().monotone());
    CHECK(contains(complete_r_graph(5, 3), Pattern::m1()).found());
    CHECK(contains(semibipartite_max(7), Pattern::semibipartite_colorable()).found());
  }
}
