#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

/// graph6 (the nauty interchange format). An optional ">>graph6<<" prefix
/// and trailing newline are accepted. Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge list: a line "n m", then m lines "u v" with 0-based indices. Blank
/// lines and lines starting with '#' are skipped. Throws ParseError with the
/// line number on a bad header, out-of-range index, loop, duplicate edge, or
/// wrong edge count.
Graph parse_edgelist(std::string_view text);
/// Header plus edges in lexicographic order, newline terminated.
std::string emit_edgelist(const Graph& g);

/// Edge list when the first meaningful line holds two integers, else graph6.
Graph parse_graph(std::string_view text);

/// A name accepted by named() (K7, QR13, petersen, ...) or a graph6 string.
Graph parse_graph_or_name(std::string_view token);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

struct Checkpoint {
  std::uint64_t spec_hash = 0;
  std::uint64_t seed = 0;
  std::vector<Graph> graphs;
};

/// "# cdom-checkpoint v1 spec=<16 hex> seed=<decimal>" then one graph6 per line.
void write_checkpoint(std::ostream& out, const Checkpoint& cp);
Checkpoint read_checkpoint(std::istream& in);

}  // namespace cdom
