#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cdom/constructions.hpp"
#include "cdom/graph.hpp"
#include "cdom/random.hpp"
#include "oracles.hpp"

using namespace cdom;

TEST_SUITE("graph") {
  TEST_CASE("constructor bounds and row validation") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(33), std::invalid_argument);
    CHECK_NOTHROW(Graph(32));
    const std::uint32_t loop[] = {1u, 0u};
    CHECK_THROWS(Graph::from_rows(2, loop));
    const std::uint32_t asym[] = {2u, 0u};
    CHECK_THROWS(Graph::from_rows(2, asym));
    const std::uint32_t stray[] = {4u, 0u};
    CHECK_THROWS(Graph::from_rows(2, stray));
  }

  TEST_CASE("complement") {
    CHECK(complement(complete_graph(5)) == Graph(5));
    CHECK(oracle::isomorphic(complement(path_graph(4)), path_graph(4)));
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Graph g = random_gnp(9, 0.4, s);
      CHECK(complement(complement(g)) == g);
      const Graph h = complement(g);
      for (Vertex v = 0; v < g.order(); ++v) CHECK(h.degree(v) == g.order() - 1 - g.degree(v));
    }
  }

  TEST_CASE("degree statistics") {
    const auto k7 = degree_stats(complete_graph(7));
    CHECK(k7.max_degree == 6);
    CHECK(k7.min_degree == 6);
    CHECK(k7.edges == 21);
    const auto qr = degree_stats(paley(13));
    CHECK(qr.min_degree == 6);
    CHECK(qr.max_degree == 6);
    CHECK(qr.edges == 39);
    const auto p3 = degree_stats(path_graph(3));
    CHECK(p3.sequence == std::vector<int>{1, 1, 2});
    CHECK(p3.edges == 2);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto st = degree_stats(random_gnp(11, 0.5, s));
      CHECK(std::accumulate(st.sequence.begin(), st.sequence.end(), 0) == 2 * st.edges);
    }
  }

  TEST_CASE("delta star never exceeds floor((n-1)/2)") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const int n = 2 + static_cast<int>(s % 14);
      const Graph g = random_gnp(n, 0.1 + 0.004 * static_cast<double>(s), s);
      CHECK(min_degree_star(g) <= (n - 1) / 2);
    }
  }

  TEST_CASE("common neighbours") {
    const Graph qr = paley(13);
    for (Vertex u = 0; u < 13; ++u)
      for (Vertex v = u + 1; v < 13; ++v) CHECK(common_neighbors(qr, u, v).size() == (qr.adjacent(u, v) ? 2 : 3));
    CHECK(common_neighbors(complete_graph(6), 1, 4).size() == 4);
    CHECK_THROWS_AS(common_neighbors(qr, 3, 3), std::invalid_argument);
  }

  TEST_CASE("pair partition by common neighbours") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Graph g = random_gnp(10, 0.5, s);
      const Graph h = complement(g);
      for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
          const VertexSet a = common_neighbors(g, u, v), b = common_neighbors(h, u, v);
          const VertexSet rest = (g.neighbors(u) ^ g.neighbors(v)) - VertexSet{u, v};
          CHECK_FALSE(a.intersects(b));
          CHECK_FALSE(rest.intersects(a | b));
          CHECK((a | b | rest | VertexSet{u, v}) == g.vertices());
        }
    }
  }

  TEST_CASE("edge contraction") {
    CHECK(oracle::isomorphic(contract_edge(complete_graph(4), 1, 2), complete_graph(3)));
    CHECK(oracle::isomorphic(contract_edge(cycle_graph(5), 0, 4), cycle_graph(4)));
    const Graph qr = contract_edge(paley(13), 0, 1);
    CHECK(qr.order() == 12);
    CHECK(qr.degree(0) == 8);
    CHECK(qr.max_degree() == 8);
    CHECK_THROWS_AS(contract_edge(path_graph(4), 0, 2), std::invalid_argument);
    // Merged vertex keeps the smaller index; higher indices shift down.
    const Graph p = contract_edge(path_graph(5), 2, 1);
    CHECK(p == path_graph(4));
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Graph g = random_gnp(9, 0.5, s);
      for (auto [u, v] : g.edges()) {
        const Graph c = contract_edge(g, u, v);
        CHECK(c.order() == g.order() - 1);
        CHECK(c.size() <= g.size() - 1);
      }
    }
  }

  TEST_CASE("join, union, induced, connectivity") {
    CHECK(join(complete_graph(6), Graph(1)) == complete_graph(7));
    const Graph qr = paley(13);
    for (Vertex v = 0; v < 13; ++v) {
      const Graph nb = induced(qr, qr.neighbors(v));
      CHECK(nb.order() == 6);
      CHECK(nb.min_degree() == 2);
      CHECK(nb.max_degree() == 2);
    }
    const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(complement(two)));
    CHECK_FALSE(induces_connected(two, {}));
    CHECK(component_of(two, 4, two.vertices()) == VertexSet{3, 4, 5});
    CHECK_THROWS(delete_vertex(two, 6));
  }

  TEST_CASE("relabel, paths and cycles") {
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph p = relabel(path_graph(3), perm);
    CHECK(p.adjacent(2, 0));
    CHECK(p.adjacent(0, 1));
    CHECK(is_path(p));
    CHECK(is_cycle(cycle_graph(7)));
    CHECK_FALSE(is_cycle(path_graph(7)));
    CHECK_FALSE(is_path(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(is_path(Graph(1)));
  }

  TEST_CASE("vertex sets") {
    const VertexSet s{1, 4, 7};
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 1);
    CHECK(s.highest() == 7);
    CHECK(s.to_vector() == std::vector<Vertex>{1, 4, 7});
    CHECK(lex_less(VertexSet{0, 5}, VertexSet{1, 2}));
    CHECK_FALSE(lex_less(VertexSet{1, 2}, VertexSet{0, 5}));
    CHECK(lex_less(VertexSet{1, 2, 9}, VertexSet{1, 3, 4}));
  }
}
