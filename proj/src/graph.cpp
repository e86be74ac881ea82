#include "cdom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cdom {
namespace {

// Removes bit `pos` and shifts the higher bits down by one.
std::uint32_t squeeze_bit(std::uint32_t row, int pos) {
  std::uint32_t below = row & low_mask(pos);
  std::uint32_t above = pos >= 31 ? 0u : (row >> (pos + 1)) << pos;
  return below | above;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, 32], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= std::uint32_t{1} << v;
    g.rows_[v] |= std::uint32_t{1} << u;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint32_t> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match order");
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~low_mask(n)) throw std::invalid_argument("adjacency bit beyond order");
    if ((rows[v] >> v) & 1u) throw std::invalid_argument("self-loop in adjacency rows");
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (Vertex v : VertexSet(rows[u]))
      if (!((rows[v] >> u) & 1u)) throw std::invalid_argument("adjacency rows are not symmetric");
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Vertex v : VertexSet(rows_[u] & ~low_mask(u + 1))) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[u] |= std::uint32_t{1} << v;
  g.rows_[v] |= std::uint32_t{1} << u;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[u] &= ~(std::uint32_t{1} << v);
  g.rows_[v] &= ~(std::uint32_t{1} << u);
  return g;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<std::uint32_t, kMaxOrder> rows{};
  for (int v = 0; v < n; ++v) rows[v] = ~g.row(v) & low_mask(n) & ~(std::uint32_t{1} << v);
  return Graph::from_rows(n, std::span(rows.data(), n));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (int v = 0; v < g.order(); ++v) s.sequence.push_back(g.degree(v));
  std::sort(s.sequence.begin(), s.sequence.end());
  s.min_degree = s.sequence.front();
  s.max_degree = s.sequence.back();
  int total = 0;
  for (int d : s.sequence) total += d;
  s.edges = total / 2;
  return s;
}

int min_degree_star(const Graph& g) {
  return std::min(g.min_degree(), g.order() - 1 - g.max_degree());
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_neighbors needs two distinct vertices");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw std::out_of_range("vertex out of range");
  return (g.neighbors(u) & g.neighbors(v)).without(u).without(v);
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out - s;
}

bool dominates(const Graph& g, VertexSet s) {
  return (neighborhood(g, s) | s) == g.vertices();
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw std::out_of_range("vertex out of range");
  if (u == v || !g.adjacent(u, v)) {
    throw std::invalid_argument("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  const int n = g.order();
  std::array<std::uint32_t, kMaxOrder> rows{};
  std::uint32_t merged = (g.row(u) | g.row(v)) & ~(std::uint32_t{1} << u) & ~(std::uint32_t{1} << v);
  for (int w = 0; w < n; ++w) {
    std::uint32_t r = g.row(w);
    if (w == keep) r = merged;
    else if (merged >> w & 1u) r |= std::uint32_t{1} << keep;
    r &= ~(std::uint32_t{1} << drop);
    rows[w] = r;
  }
  std::array<std::uint32_t, kMaxOrder> out{};
  int k = 0;
  for (int w = 0; w < n; ++w) {
    if (w == drop) continue;
    out[k++] = squeeze_bit(rows[w], drop);
  }
  return Graph::from_rows(n - 1, std::span(out.data(), n - 1));
}

VertexSet component_of(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return component_of(g, s.lowest(), s) == s;
}

bool is_connected(const Graph& g) { return induces_connected(g, g.vertices()); }

Graph induced(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::out_of_range("induced: set exceeds vertex range");
  std::vector<Vertex> keep = s.to_vector();
  const int k = static_cast<int>(keep.size());
  std::array<std::uint32_t, kMaxOrder> rows{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adjacent(keep[i], keep[j])) rows[i] |= std::uint32_t{1} << j;
  return Graph::from_rows(k, std::span(rows.data(), k));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: vertex out of range");
  return induced(g, g.vertices().without(v));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) { return g.with_edge(u, v); }
Graph delete_edge(const Graph& g, Vertex u, Vertex v) { return g.without_edge(u, v); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw std::invalid_argument("disjoint union exceeds the 32-vertex cap");
  std::array<std::uint32_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.row(v) << g.order();
  return Graph::from_rows(n, std::span(rows.data(), n));
}

Graph join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  std::array<std::uint32_t, kMaxOrder> rows{};
  const std::uint32_t left = low_mask(g.order());
  const std::uint32_t right = low_mask(u.order()) & ~left;
  for (int v = 0; v < u.order(); ++v) rows[v] = u.row(v) | (v < g.order() ? right : left);
  return Graph::from_rows(u.order(), std::span(rows.data(), u.order()));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::uint32_t hit = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n) throw std::invalid_argument("relabel: not a permutation");
    hit |= std::uint32_t{1} << p;
  }
  if (hit != low_mask(n)) throw std::invalid_argument("relabel: not a permutation");
  std::array<std::uint32_t, kMaxOrder> rows{};
  for (int v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) rows[perm[v]] |= std::uint32_t{1} << perm[w];
  return Graph::from_rows(n, std::span(rows.data(), n));
}

bool is_path(const Graph& g) {
  return is_connected(g) && g.size() == g.order() - 1 && g.max_degree() <= 2;
}

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && g.min_degree() == 2 && g.max_degree() == 2;
}

}  // namespace cdom
