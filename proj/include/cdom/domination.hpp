#pragma once

#include <optional>

#include "cdom/graph.hpp"

namespace cdom {

/// Minimum (connected) dominating set. `value` is empty for "infinite",
/// which only happens for connected domination of a disconnected graph.
struct DominationResult {
  std::optional<int> value;
  /// Lexicographically smallest optimal set; empty when infinite.
  VertexSet witness;

  bool infinite() const { return !value.has_value(); }
};

/// Domination number gamma(g).
DominationResult gamma(const Graph& g);

/// Connected domination number gamma_c(g).
DominationResult gamma_c(const Graph& g);

/// Lexicographically smallest connected dominating set with exactly `size`
/// vertices, if any.
std::optional<VertexSet> connected_dominating_set_of_size(const Graph& g, int size);

/// Smallest connected dominating set using at most `limit` vertices.
/// Branch-free subset kernel for tiny graphs (order <= 12); used by the
/// exhaustive f(n) sweep. Returns 0 when nothing of size <= limit exists.
int min_connected_domination_small(const Graph& g, int limit);

/// If g[s] is connected, the lowest vertex outside s with no neighbour in s.
/// Throws std::invalid_argument unless |s| == 3.
std::optional<Vertex> three_set_witness(const Graph& g, VertexSet s);

}  // namespace cdom
