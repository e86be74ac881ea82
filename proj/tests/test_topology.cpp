#include <doctest.h>

#include <algorithm>

#include "cdom/constructions.hpp"
#include "cdom/iso.hpp"
#include "cdom/random.hpp"
#include "cdom/topology.hpp"
#include "oracles.hpp"

using namespace cdom;

namespace {

bool in_family(const Graph& g) {
  const auto& fam = petersen_family();
  return std::any_of(fam.begin(), fam.end(), [&](const Graph& m) { return are_isomorphic(m, g); });
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("minor examples") {
    const auto k7 = has_minor(complete_graph(7), complete_graph(6));
    REQUIRE(k7.found());
    CHECK(check_minor_witness(complete_graph(7), complete_graph(6), *k7.witness));
    CHECK(has_minor(petersen_graph(), complete_graph(6)).status == MinorStatus::Absent);
    CHECK(has_minor(petersen_graph(), complete_graph(5)).found());
    CHECK(has_minor(petersen_graph(), complete_bipartite(3, 3)).found());
    CHECK(has_minor(cycle_graph(8), cycle_graph(5)).found());
    CHECK(has_minor(path_graph(8), cycle_graph(3)).status == MinorStatus::Absent);
    CHECK(has_minor(complete_graph(3), complete_graph(4)).status == MinorStatus::Absent);
  }

  TEST_CASE("order-10 graphs with 31 edges have a K6 minor") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = random_gnm(10, 31, s);
      const auto r = has_minor(g, complete_graph(6));
      REQUIRE(r.found());
      CHECK(check_minor_witness(g, complete_graph(6), *r.witness));
    }
  }

  TEST_CASE("agreement with the assignment oracle on small hosts") {
    const std::vector<Graph> targets{complete_graph(3), complete_graph(4), cycle_graph(4), complete_bipartite(2, 3),
                                     star_graph(3), path_graph(4), disjoint_union(complete_graph(2), complete_graph(2))};
    for (std::uint64_t s = 0; s < 150; ++s) {
      const int n = 5 + static_cast<int>(s % 3);
      const Graph host = random_gnp(n, 0.25 + 0.1 * static_cast<double>(s % 5), s);
      for (const Graph& t : targets) {
        const auto r = has_minor(host, t);
        REQUIRE(r.status != MinorStatus::Unknown);
        CHECK(r.found() == oracle::has_minor(host, t));
        if (r.found()) CHECK(check_minor_witness(host, t, *r.witness));
      }
    }
  }

  TEST_CASE("witness checker rejects broken witnesses") {
    const Graph k4 = complete_graph(4);
    CHECK(check_minor_witness(k4, complete_graph(3), {{VertexSet{0}, VertexSet{1}, VertexSet{2}}}));
    CHECK_FALSE(check_minor_witness(k4, complete_graph(3), {{VertexSet{0}, VertexSet{0, 1}, VertexSet{2}}}));
    CHECK_FALSE(check_minor_witness(k4, complete_graph(3), {{VertexSet{0}, VertexSet{1}}}));
    CHECK_FALSE(check_minor_witness(path_graph(4), complete_graph(2), {{VertexSet{0, 2}, VertexSet{1}}}));
    CHECK_FALSE(check_minor_witness(path_graph(4), complete_graph(2), {{VertexSet{0}, VertexSet{3}}}));
  }

  TEST_CASE("budget exhaustion is reported as unknown") {
    const Graph g = random_gnm(12, 24, 0);
    const auto full = has_minor(g, complete_graph(6));
    REQUIRE(full.status == MinorStatus::Absent);
    REQUIRE(full.nodes > 2);
    const auto r = has_minor(g, complete_graph(6), 2);
    CHECK(r.status == MinorStatus::Unknown);
    CHECK_FALSE(r.witness.has_value());
    CHECK(has_minor(g, complete_graph(6), full.nodes).status == MinorStatus::Absent);
  }

  TEST_CASE("size caps") {
    CHECK_THROWS_AS(has_minor(complete_graph(12), complete_graph(11)), std::invalid_argument);
    CHECK_THROWS_AS(has_minor(Graph(21), complete_graph(3)), std::invalid_argument);
  }

  TEST_CASE("minors are inherited by supergraphs") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Graph g = random_gnp(9, 0.45, s);
      const auto r = has_minor(g, complete_graph(5));
      if (!r.found()) continue;
      Rng rng(s);
      const Vertex u = static_cast<Vertex>(rng.below(9));
      const Vertex v = static_cast<Vertex>((u + 1 + rng.below(8)) % 9);
      CHECK(has_minor(g.with_edge(u, v), complete_graph(5)).found());
    }
  }

  TEST_CASE("planarity") {
    for (const auto& [name, g] : planar_fixtures()) {
      INFO(name);
      CHECK(is_planar(g));
    }
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(petersen_graph()));
  }

  TEST_CASE("delta-Y and Y-delta moves") {
    const Graph y = delta_y(complete_graph(4), {0, 1, 2});
    CHECK(y.order() == 5);
    CHECK(y.size() == 6);
    CHECK(y.degree(4) == 3);
    CHECK(are_isomorphic(y_delta(y, 4), complete_graph(4)));
    const Graph k6 = complete_graph(6);
    const Graph k6y = delta_y(k6, {0, 1, 2});
    CHECK(k6y.size() == 15);
    CHECK(y_delta(k6y, 6) == k6);
    CHECK(are_isomorphic(y_delta(k6y, 6), k6));
    CHECK_THROWS_AS(delta_y(path_graph(3), {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(y_delta(path_graph(3), 1), std::invalid_argument);
  }

  TEST_CASE("the family closure") {
    const auto& fam = petersen_family();
    REQUIRE(fam.size() == 7);
    std::vector<int> orders;
    for (const Graph& g : fam) {
      orders.push_back(g.order());
      CHECK(g.size() == 15);
      CHECK_FALSE(is_planar(g));
    }
    CHECK(orders == std::vector<int>{6, 7, 7, 8, 8, 9, 10});
    CHECK(in_family(complete_graph(6)));
    CHECK(in_family(petersen_graph()));
    CHECK(in_family(complete_tripartite(3, 3, 1)));
    const Graph k44 = complete_bipartite(4, 4);
    CHECK(in_family(k44.without_edge(0, 4)));
    CHECK(delta_y_closure(complete_graph(6)).size() == 7);
  }

  TEST_CASE("intrinsic linking") {
    CHECK(is_il(complete_graph(6)).linked);
    CHECK(is_il(petersen_graph()).linked);
    CHECK_FALSE(is_il(complete_graph(5)).linked);
    for (const auto& [name, g] : planar_fixtures()) {
      INFO(name);
      CHECK_FALSE(is_il(g).linked);
    }
    const auto r = is_il(complete_bipartite(4, 4));
    REQUIRE(r.linked);
    REQUIRE(r.member.has_value());
    CHECK(check_minor_witness(complete_bipartite(4, 4), petersen_family()[*r.member], *r.witness));
    // Every family member deletes to a linklessly embeddable graph.
    for (const Graph& g : petersen_family()) {
      for (auto [u, v] : g.edges()) CHECK_FALSE(is_il(g.without_edge(u, v)).linked);
    }
  }

  TEST_CASE("intrinsic knotting certificates") {
    CHECK(is_ik_sufficient(complete_graph(7)) == IkCertificate::ByK7);
    CHECK(is_ik_sufficient(join(petersen_graph(), Graph(1))) == IkCertificate::ByConeOverIl);
    CHECK(is_ik_sufficient(complete_graph(6)) == IkCertificate::Unknown);
    CHECK(is_ik_sufficient(petersen_graph()) == IkCertificate::Unknown);
  }

  TEST_CASE("maximal linklessly embeddable graphs") {
    const Graph s = saturate_nil(Graph(6));
    CHECK(is_max_nil(s));
    CHECK_FALSE(is_il(s).linked);
    CHECK(s.size() == 14);
    CHECK(is_max_nil(complete_graph(5)));
    CHECK_FALSE(is_max_nil(cycle_graph(5)));
    CHECK_THROWS_AS(is_max_nil(complete_graph(6)), std::invalid_argument);
    CHECK_THROWS_AS(saturate_nil(complete_graph(6)), std::invalid_argument);
    CHECK_THROWS_AS(saturate_nil(Graph(15)), std::invalid_argument);
    const Graph t = saturate_nil(cycle_graph(7));
    CHECK(is_max_nil(t));
    for (auto [u, v] : cycle_graph(7).edges()) CHECK(t.adjacent(u, v));
  }
}
