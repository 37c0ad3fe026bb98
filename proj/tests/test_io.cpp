#include "doctest.h"
#include "hyturan/construct.hpp"
#include "hyturan/io.hpp"

using namespace hyturan;

TEST_SUITE("io") {
  TEST_CASE("round trip") {
    const Hypergraph t = turan_hypergraph(7, 3, 3);
    CHECK(hypergraph_from_json(dump(to_json(t))) == t);
  }

  TEST_CASE("reader accepts any edge order") {
    const Hypergraph h = hypergraph_from_json(R"({"n": 4, "r": 2, "edges": [[3, 2], [1, 0]]})");
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  }

  TEST_CASE("parse errors carry line and column") {
    try {
      hypergraph_from_json("{\n  \"n\": 3,\n  \"r\": ]\n}");
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() >= 8);
    }
    CHECK_THROWS_AS(hypergraph_from_json(R"({"n": 3, "r": 3})"), ValidationError);
    CHECK_THROWS_AS(hypergraph_from_json(R"({"n": 3, "r": 3, "edges": [[0, 1, 1]]})"), ValidationError);
  }

  TEST_CASE("numbers use 17 significant digits") {
    nlohmann::ordered_json j;
    j["x"] = 0.1;
    CHECK(dump(j).find("0.10000000000000001") != std::string::npos);
  }

  TEST_CASE("solver result fields") {
    SolverConfig cfg;
    cfg.p = 3.0;
    const auto j = to_json(p_spectral_radius(turan_hypergraph(6, 3, 3), cfg));
    for (const char* key : {"lambda", "vector", "residual", "iterations", "status"}) CHECK(j.contains(key));
  }
}
