#include <doctest.h>

#include <set>

#include "cdom/constructions.hpp"
#include "cdom/iso.hpp"
#include "cdom/topology.hpp"
#include "oracles.hpp"

using namespace cdom;

TEST_SUITE("constructions") {
  TEST_CASE("paley graphs") {
    const Graph qr = paley(13);
    CHECK(qr.neighbors(0) == VertexSet{1, 3, 4, 9, 10, 12});
    CHECK(oracle::isomorphic(paley(5), cycle_graph(5)));
    for (int q : {5, 13, 17, 29}) {
      const Graph g = paley(q);
      CHECK(g.min_degree() == (q - 1) / 2);
      CHECK(g.max_degree() == (q - 1) / 2);
      CHECK(are_isomorphic(g, complement(g)));
    }
    CHECK_THROWS_AS(paley(7), std::invalid_argument);
    CHECK_THROWS_AS(paley(9), std::invalid_argument);
    CHECK_THROWS_AS(paley(37), std::invalid_argument);
  }

  TEST_CASE("strongly regular parameters") {
    CHECK(srg_check(paley(13)) == SrgParams{13, 6, 2, 3});
    CHECK(srg_check(paley(17)) == SrgParams{17, 8, 3, 4});
    CHECK(srg_check(cycle_graph(5)) == SrgParams{5, 2, 0, 1});
    CHECK(srg_check(petersen_graph()) == SrgParams{10, 3, 0, 1});
    CHECK(srg_check(complete_graph(4)) == SrgParams{4, 3, 2, 0});
    CHECK(srg_check(Graph(4)) == SrgParams{4, 0, 0, 0});
    CHECK_FALSE(srg_check(path_graph(4)).has_value());
    CHECK_FALSE(srg_check(cycle_graph(6)).has_value());
  }

  TEST_CASE("twin addition") {
    const Graph open = twin_add(path_graph(3), 1, false);
    CHECK(open.order() == 4);
    CHECK(open.neighbors(3) == VertexSet{0, 2});
    CHECK(oracle::isomorphic(open, cycle_graph(4)));
    const Graph closed = twin_add(complete_graph(3), 0, true);
    CHECK(closed == complete_graph(4));
    const Graph qr = twin_add(paley(13), 0, false);
    CHECK(qr.order() == 14);
    CHECK(qr.degree(13) == 6);
    CHECK_FALSE(qr.adjacent(0, 13));
    CHECK(twin_add(paley(13), 0, true).adjacent(0, 13));
    CHECK_THROWS(twin_add(path_graph(3), 3, false));
  }

  TEST_CASE("named graphs") {
    CHECK(named("K7") == complete_graph(7));
    CHECK(named("E3") == Graph(3));
    CHECK(named("P5") == path_graph(5));
    CHECK(named("C6") == cycle_graph(6));
    CHECK(named("K3,3") == complete_bipartite(3, 3));
    CHECK(named("K3,3,1") == complete_tripartite(3, 3, 1));
    CHECK(named("QR13") == paley(13));
    CHECK(named("petersen") == petersen_graph());
    CHECK(named("prism") == triangular_prism());
    CHECK_THROWS_AS(named("K"), std::invalid_argument);
    CHECK_THROWS_AS(named("Q13"), std::invalid_argument);
    CHECK_THROWS_AS(named("K3,x"), std::invalid_argument);
    CHECK_THROWS_AS(named("C2"), std::invalid_argument);
  }

  TEST_CASE("named solids") {
    CHECK(petersen_graph().size() == 15);
    CHECK(petersen_graph().min_degree() == 3);
    CHECK(octahedron().size() == 12);
    CHECK(cube_graph().size() == 12);
    CHECK(icosahedron().order() == 12);
    CHECK(icosahedron().size() == 30);
    CHECK(srg_check(octahedron()) == SrgParams{6, 4, 2, 4});
    CHECK(wheel_graph(6).order() == 7);
    CHECK(wheel_graph(6).size() == 12);
    CHECK(oracle::isomorphic(triangular_prism(), complement(cycle_graph(6))));
  }

  TEST_CASE("families by order and size") {
    CHECK(graph_family(5, 5, 0, 4).size() == 6);
    CHECK(graph_family(6, 7, 0, 5).size() == 24);
    CHECK(graph_family(5, 4, 1, 4).size() == 4);
    const auto two = graph_family(6, 6, 2, 2);
    REQUIRE(two.size() == 2);
    std::set<std::uint64_t> keys;
    for (const Graph& g : two) keys.insert(oracle::class_key(g));
    CHECK(keys.count(oracle::class_key(cycle_graph(6))) == 1);
    CHECK(keys.count(oracle::class_key(disjoint_union(complete_graph(3), complete_graph(3)))) == 1);
    CHECK(graph_family(4, 3, 0, 3).size() == 3);
    CHECK_THROWS_AS(graph_family(9, 10, 0, 8), std::invalid_argument);
  }

  TEST_CASE("family classes agree with the exhaustive oracle") {
    for (int m = 0; m <= 10; ++m) {
      std::set<std::uint64_t> want;
      for (std::uint64_t mask = 0; mask < (1u << 10); ++mask)
        if (__builtin_popcountll(mask) == m) want.insert(oracle::class_key(oracle::from_mask(5, mask)));
      const auto got = graph_family(5, m, 0, 4);
      std::set<std::uint64_t> keys;
      for (const Graph& g : got) keys.insert(oracle::class_key(g));
      CHECK(got.size() == want.size());
      CHECK(keys == want);
    }
  }

  TEST_CASE("vertex-deleted paley graph is unique up to isomorphism") {
    const Graph qr = paley(13);
    const Graph d0 = delete_vertex(qr, 0);
    CHECK(d0.size() == 33);
    for (Vertex v = 1; v < 13; ++v) CHECK(canonical_form(delete_vertex(qr, v)) == canonical_form(d0));
  }

  TEST_CASE("planar fixtures") {
    const auto fx = planar_fixtures();
    CHECK(fx.size() == 9);
    for (const auto& [name, g] : fx) {
      INFO(name);
      CHECK(is_planar(g));
      CHECK(is_connected(g));
    }
  }
}
