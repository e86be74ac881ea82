#include <doctest.h>

#include "cdom/compliance.hpp"
#include "cdom/constructions.hpp"
#include "cdom/domination.hpp"
#include "cdom/random.hpp"
#include "oracles.hpp"

using namespace cdom;

TEST_SUITE("domination") {
  TEST_CASE("domination number examples") {
    const auto star = gamma(star_graph(5));
    CHECK(star.value == 1);
    CHECK(star.witness == VertexSet{0});
    CHECK(gamma(cycle_graph(6)).value == 2);
    CHECK(oracle::gamma(cycle_graph(6), false) == 2);
    CHECK(gamma(paley(13)).value == 3);
    CHECK(oracle::gamma(paley(13), false) == 3);
  }

  TEST_CASE("connected domination examples") {
    for (int n = 7; n <= 12; ++n) {
      CHECK(gamma_c(path_graph(n)).value == n - 2);
      CHECK(gamma_c(complement(path_graph(n))).value == 2);
    }
    const Graph qr = paley(13);
    CHECK(gamma_c(qr).value == 4);
    CHECK(oracle::gamma(qr, true) == 4);
    CHECK(gamma_c(disjoint_union(complete_graph(3), complete_graph(3))).infinite());
    CHECK(gamma_c(Graph(1)).value == 1);
    CHECK(gamma_c(Graph(2)).infinite());
  }

  TEST_CASE("witnesses are valid and lexicographically least") {
    const auto r = gamma_c(cycle_graph(7));
    CHECK(r.value == 5);
    CHECK(r.witness == VertexSet{0, 1, 2, 3, 4});
    for (std::uint64_t s = 0; s < 200; ++s) {
      const Graph g = random_gnp(9, 0.35, s);
      const auto d = gamma(g);
      CHECK(dominates(g, d.witness));
      CHECK(d.witness.size() == *d.value);
      const auto c = gamma_c(g);
      if (c.infinite()) continue;
      CHECK(dominates(g, c.witness));
      CHECK(induces_connected(g, c.witness));
      // No lexicographically smaller connected dominating set of that size.
      for (std::uint32_t m = 0; m < (1u << 9); ++m) {
        const VertexSet t(m);
        if (t.size() == *c.value && lex_less(t, c.witness)) CHECK_FALSE((dominates(g, t) && induces_connected(g, t)));
      }
    }
  }

  TEST_CASE("agreement with the subset oracle on every graph of order <= 6") {
    for (int n = 1; n <= 6; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const Graph g = graph_from_mask(n, mask);
        REQUIRE(gamma(g).value == oracle::gamma(g, false));
        const int want = n == 1 ? 1 : oracle::gamma(g, true);
        const auto got = gamma_c(g);
        REQUIRE(got.value.value_or(0) == want);
        REQUIRE(min_connected_domination_small(g, n) == want);
      }
    }
  }

  TEST_CASE("agreement with the subset oracle on random order-7..10 graphs") {
    for (std::uint64_t s = 0; s < 600; ++s) {
      const int n = 7 + static_cast<int>(s % 4);
      const Graph g = random_gnp(n, 0.2 + 0.1 * static_cast<double>(s % 6), s);
      CHECK(gamma(g).value == oracle::gamma(g, false));
      CHECK(gamma_c(g).value.value_or(0) == oracle::gamma(g, true));
    }
  }

  TEST_CASE("gamma <= gamma_c and monotone under edge addition") {
    for (std::uint64_t s = 0; s < 300; ++s) {
      const Graph g = random_gnp(10, 0.3, s);
      const auto d = gamma(g), c = gamma_c(g);
      if (!c.infinite()) CHECK(*d.value <= *c.value);
      Rng rng(s);
      const Vertex u = static_cast<Vertex>(rng.below(10));
      Vertex v = static_cast<Vertex>(rng.below(10));
      if (u == v) v = (v + 1) % 10;
      const Graph h = g.with_edge(u, v);
      CHECK(*gamma(h).value <= *d.value);
      if (!c.infinite()) CHECK(*gamma_c(h).value <= *c.value);
    }
  }

  TEST_CASE("small kernel respects its limit") {
    CHECK(min_connected_domination_small(cycle_graph(7), 4) == 0);
    CHECK(min_connected_domination_small(cycle_graph(7), 5) == 5);
    CHECK_THROWS(min_connected_domination_small(Graph(13), 3));
  }

  TEST_CASE("three-set witness") {
    const Graph qr = paley(13);
    for (Vertex a = 0; a < 13; ++a)
      for (Vertex b = a + 1; b < 13; ++b)
        for (Vertex c = b + 1; c < 13; ++c) {
          const VertexSet s{a, b, c};
          if (!induces_connected(qr, s)) continue;
          CHECK(three_set_witness(qr, s).has_value());
          CHECK(three_set_witness(complement(qr), s).has_value() == induces_connected(complement(qr), s));
        }
    CHECK_FALSE(three_set_witness(complete_graph(5), {0, 1, 2}).has_value());
    CHECK(three_set_witness(cycle_graph(7), {0, 1, 2}) == 4);
    CHECK_FALSE(three_set_witness(cycle_graph(7), {0, 2, 4}).has_value());
    CHECK_THROWS_AS(three_set_witness(cycle_graph(7), {0, 1}), std::invalid_argument);
  }

  TEST_CASE("three-set witnesses exist for every connected triple of a 3-non-compliant graph") {
    for (const Graph& g : {paley(13), twin_add(paley(13), 0, false), twin_add(paley(13), 5, true)}) {
      REQUIRE_FALSE(is_k_compliant(g, 3).compliant());
      for (const Graph& h : {g, complement(g)})
        for (Vertex a = 0; a < h.order(); ++a)
          for (Vertex b = a + 1; b < h.order(); ++b)
            for (Vertex c = b + 1; c < h.order(); ++c) {
              const VertexSet s{a, b, c};
              if (induces_connected(h, s)) CHECK(three_set_witness(h, s).has_value());
            }
    }
  }
}
