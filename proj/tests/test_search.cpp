#include <doctest.h>

#include <set>

#include "cdom/constructions.hpp"
#include "cdom/io.hpp"
#include "cdom/iso.hpp"
#include "cdom/random.hpp"
#include "cdom/search.hpp"
#include "oracles.hpp"

using namespace cdom;

TEST_SUITE("search") {
  TEST_CASE("random regular graphs") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Graph g = random_regular(13, 6, s);
      REQUIRE(g.min_degree() == 6);
      REQUIRE(g.max_degree() == 6);
    }
    CHECK(random_regular(10, 3, 4) == random_regular(10, 3, 4));
    CHECK_THROWS_AS(random_regular(7, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_regular(5, 5, 0), std::invalid_argument);
  }

  TEST_CASE("random graph models") {
    CHECK(random_gnp(9, 0.0, 3) == Graph(9));
    CHECK(random_gnp(9, 1.0, 3) == complete_graph(9));
    CHECK(random_gnp(12, 0.4, 7) == random_gnp(12, 0.4, 7));
    CHECK_THROWS_AS(random_gnp(5, 1.5, 0), std::invalid_argument);
    for (std::uint64_t s = 0; s < 50; ++s) CHECK(random_gnm(11, 20, s).size() == 20);
    CHECK(random_gnm(6, 15, 1) == complete_graph(6));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      CHECK(rng.below(7) < 7);
      const double u = rng.unit();
      CHECK((u >= 0.0 && u < 1.0));
    }
  }

  TEST_CASE("regular sampling finds the injected paley graph exactly once") {
    SearchSpec spec;
    spec.order = 13;
    spec.regular = 6;
    spec.use_basic = true;
    spec.count = 500;
    spec.seed = 11;
    spec.inject = {paley(13), paley(13)};
    const auto r = search_non_compliant(spec);
    REQUIRE(r.hits.size() == 1);
    CHECK(are_isomorphic(r.hits[0].graph, paley(13)));
    CHECK_FALSE(r.hits[0].report.compliant());
    CHECK(r.examined == 502);
  }

  TEST_CASE("twin extensions of the paley graph stay non-compliant") {
    SearchSpec spec;
    spec.order = 14;
    spec.mode = SearchMode::Candidates;
    spec.candidates = {twin_add(paley(13), 0, false), twin_add(paley(13), 0, true),
                       disjoint_union(paley(13), Graph(1))};
    const auto r = search_non_compliant(spec);
    CHECK(r.hits.size() == 2);
    CHECK(r.checked == 3);
  }

  TEST_CASE("exhaustive order-7 search") {
    SearchSpec spec;
    spec.order = 7;
    spec.mode = SearchMode::Exhaustive;
    spec.k = 2;
    const auto r = search_non_compliant(spec);
    CHECK(r.examined == 1044);
    // Independent count: classes whose smallest connected dominating set on
    // either side exceeds 2.
    const auto all = enumerate_graphs(7);
    std::size_t want = 0;
    for (const Graph& g : all)
      if (oracle::min_k(g) > 2) ++want;
    CHECK(r.hits.size() == want);
    for (const auto& h : r.hits) CHECK(oracle::min_k(h.graph) > 2);
  }

  TEST_CASE("graph enumeration counts") {
    const std::size_t want[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == want[n - 1]);
    CHECK(enumerate_graphs(8).size() == 12346);
  }

  TEST_CASE("enumeration agrees with the class-key oracle") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::uint64_t> want;
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) want.insert(oracle::class_key(oracle::from_mask(n, m)));
      std::set<std::uint64_t> got;
      for (const Graph& g : enumerate_graphs(n)) got.insert(oracle::class_key(g));
      CHECK(got == want);
    }
  }

  TEST_CASE("enumeration caps prune correctly") {
    // Cubic graphs on 8 vertices: 5 connected classes plus 2K4.
    std::size_t cubic = 0;
    for (const Graph& g : enumerate_graphs(8, 3, 12))
      if (g.min_degree() == 3) ++cubic;
    CHECK(cubic == 6);
    CHECK(enumerate_graphs(4, 3, 3).size() == 7);
    for (const Graph& g : enumerate_graphs(7, 2)) CHECK(g.max_degree() <= 2);
  }

  TEST_CASE("serial and parallel runs agree") {
    set_thread_count(3);
    SearchSpec spec;
    spec.order = 11;
    spec.count = 300;
    spec.seed = 99;
    spec.min_edges = 20;
    spec.max_edges = 35;
    spec.k = 2;
    const auto a = search_non_compliant(spec, Execution::Serial);
    const auto b = search_non_compliant(spec, Execution::Parallel);
    CHECK(a.examined == b.examined);
    CHECK(a.rejected == b.rejected);
    CHECK(a.filtered == b.filtered);
    CHECK(a.checked == b.checked);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) CHECK(a.hits[i].graph == b.hits[i].graph);
    const auto ea = enumerate_graphs(7, 4, 14, Execution::Serial);
    const auto eb = enumerate_graphs(7, 4, 14, Execution::Parallel);
    CHECK(ea == eb);
    set_thread_count(0);
  }

  TEST_CASE("spec validation") {
    SearchSpec ok;
    ok.order = 13;
    ok.regular = 6;
    CHECK_NOTHROW(validate(ok));
    auto bad = ok;
    bad.order = 17;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ok;
    bad.regular = 5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ok;
    bad.use_order14 = true;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ok;
    bad.min_edges = 40;
    bad.max_edges = 30;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ok;
    bad.mode = SearchMode::Exhaustive;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad.allow_long = true;
    CHECK_NOTHROW(validate(bad));
    bad = ok;
    bad.k = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ok;
    bad.mode = SearchMode::Candidates;
    bad.candidates = {paley(5)};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  }

  TEST_CASE("spec parsing") {
    const auto s = parse_search_spec(
        R"({"order": 13, "regular": 6, "filters": ["basic"], "mode": "sample", "count": 10, "seed": 4, "k": 3,
            "inject": ["QR13"]})");
    CHECK(s.order == 13);
    CHECK(s.regular == 6);
    CHECK(s.use_basic);
    CHECK(s.count == 10);
    CHECK(s.seed == 4);
    REQUIRE(s.inject.size() == 1);
    CHECK(s.inject[0] == paley(13));
    const auto e = parse_search_spec(R"({"order": 14, "degree": [6, 7], "edges": [45, 46], "filters": ["order14"],
                                        "mode": "candidates", "candidates": ["K14"]})");
    CHECK(e.min_degree == 6);
    CHECK(e.max_degree == 7);
    CHECK(e.max_edges == 46);
    CHECK(e.use_order14);
    CHECK(e.mode == SearchMode::Candidates);
    CHECK_THROWS_AS(parse_search_spec(R"({"order": 13, "colour": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec(R"({"order": 13, "mode": "guess"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec(R"({"order": 13, "filters": ["sharp"]})"), std::invalid_argument);
  }

  TEST_CASE("spec hash") {
    SearchSpec a;
    a.order = 13;
    a.count = 5;
    auto b = a;
    CHECK(spec_hash(a) == spec_hash(b));
    b.count = 6;
    CHECK(spec_hash(a) != spec_hash(b));
    b = a;
    b.inject = {paley(13)};
    CHECK(spec_hash(a) != spec_hash(b));
  }

  TEST_CASE("hits survive the filters they were screened by") {
    SearchSpec spec;
    spec.order = 13;
    spec.regular = 6;
    spec.use_basic = true;
    spec.count = 200;
    spec.seed = 3;
    spec.inject = {paley(13)};
    for (const auto& h : search_non_compliant(spec).hits) CHECK(filter_basic(h.graph).pass);
  }
}
