#include <doctest.h>

#include <sstream>

#include "cdom/constructions.hpp"
#include "cdom/errors.hpp"
#include "cdom/io.hpp"
#include "cdom/random.hpp"

using namespace cdom;

namespace {

std::size_t parse_error_position(std::string_view text, bool edgelist) {
  try {
    if (edgelist)
      parse_edgelist(text);
    else
      parse_graph6(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph6 reference strings") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
    CHECK(emit_graph6(path_graph(4)) == "Ch");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
    CHECK(emit_graph6(complete_graph(6)) == "E~~w");
    CHECK(emit_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(emit_graph6(paley(13)) == "LlthgsL`mEkLkL");
    CHECK(parse_graph6("IheA@GUAo") == petersen_graph());
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
  }

  TEST_CASE("graph6 round trips") {
    for (std::uint64_t s = 0; s < 300; ++s) {
      const int n = 1 + static_cast<int>(s % 32);
      const Graph g = random_gnp(n, 0.5, s);
      REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
  }

  TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK(parse_error_position("L!!", false) == 1);
    CHECK(parse_error_position("Bw~", false) == 2);
    CHECK(parse_error_position("Bx", false) == 1);  // padding bits set
    CHECK(parse_error_position("Dh", false) == 2);  // truncated
    CHECK_THROWS_AS(parse_graph6("~"), ParseError);  // orders above 62 unsupported
  }

  TEST_CASE("edge lists") {
    CHECK(parse_edgelist("2 1\n0 1") == complete_graph(2));
    CHECK(emit_edgelist(complete_graph(2)) == "2 1\n0 1\n");
    CHECK(parse_edgelist("# triangle\n3 3\n\n0 1\n1 2\n# closing edge\n2 0\n") == complete_graph(3));
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Graph g = random_gnp(1 + static_cast<int>(s % 20), 0.3, s);
      REQUIRE(parse_edgelist(emit_edgelist(g)) == g);
    }
  }

  TEST_CASE("edge list errors carry line numbers") {
    CHECK(parse_error_position("x y\n", true) == 1);
    CHECK(parse_error_position("3 1\n0 3\n", true) == 2);
    CHECK(parse_error_position("3 1\n1 1\n", true) == 2);
    CHECK(parse_error_position("3 2\n0 1\n# c\n1 0\n", true) == 4);
    CHECK(parse_error_position("3 2\n0 1\n", true) != static_cast<std::size_t>(-1));
    CHECK(parse_error_position("3 1\n0 1\n1 2\n", true) == 3);
    CHECK(parse_error_position("0 0\n", true) == 1);
  }

  TEST_CASE("format detection") {
    CHECK(parse_graph("Bw") == complete_graph(3));
    CHECK(parse_graph("# comment\n3 2\n0 1\n1 2\n") == path_graph(3));
    CHECK(parse_graph_or_name("QR13") == paley(13));
    CHECK(parse_graph_or_name("Dhc") == cycle_graph(5));
    CHECK_THROWS_AS(parse_graph_or_name("L!!"), ParseError);
  }

  TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  }

  TEST_CASE("checkpoint round trip") {
    Checkpoint cp;
    cp.spec_hash = 0x0123456789abcdefull;
    cp.seed = 42;
    cp.graphs = {paley(13), petersen_graph(), Graph(1)};
    std::stringstream ss;
    write_checkpoint(ss, cp);
    CHECK(ss.str().starts_with("# cdom-checkpoint v1 spec=0123456789abcdef seed=42\n"));
    const Checkpoint back = read_checkpoint(ss);
    CHECK(back.spec_hash == cp.spec_hash);
    CHECK(back.seed == 42);
    CHECK(back.graphs == cp.graphs);
    std::stringstream bad("# something else\nBw\n");
    CHECK_THROWS(read_checkpoint(bad));
  }
}
