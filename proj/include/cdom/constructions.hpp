#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_tripartite(int a, int b, int c);
Graph petersen_graph();
Graph triangular_prism();

Graph octahedron();
Graph cube_graph();
Graph icosahedron();
/// Cycle C_n plus a hub joined to every cycle vertex.
Graph wheel_graph(int rim);

/// Planar graphs used as negative controls for intrinsic linking: K4, C6,
/// P5, prism, octahedron, cube, wheel W6, K2,5 and the icosahedron.
std::vector<std::pair<std::string, Graph>> planar_fixtures();

/// Paley graph on Z_q: i ~ j iff i - j is a nonzero square mod q. Requires a
/// prime q = 1 (mod 4) with q <= 29.
Graph paley(int q);

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool operator==(const SrgParams&) const = default;
};

/// Parameters when g is strongly regular. Complete and edgeless graphs count,
/// with the vacuous parameter reported as 0.
std::optional<SrgParams> srg_check(const Graph& g);

/// Adds vertex n with neighbourhood N(u) (open twin) or N[u] (closed twin).
Graph twin_add(const Graph& g, Vertex u, bool closed);

/// Graph by name: Kn, En, Pn, Cn, Ka,b, Ka,b,c, QRq, petersen, prism.
/// Throws std::invalid_argument for anything else.
Graph named(std::string_view name);

/// All graphs with the given order and size whose degrees lie in
/// [min_degree, max_degree], one per isomorphism class, sorted by canonical
/// form. Requires order <= 8.
std::vector<Graph> graph_family(int order, int size, int min_degree, int max_degree);

}  // namespace cdom
