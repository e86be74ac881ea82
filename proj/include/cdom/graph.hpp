#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cdom {

/// Largest supported order. One 32-bit word per adjacency row.
inline constexpr int kMaxOrder = 32;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Mask with the low `n` bits set (n in [0, 32]).
constexpr std::uint32_t low_mask(int n) noexcept {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1u;
}

/// A set of vertex indices of some graph, stored as a bitset.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1u;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= std::uint32_t{1} << v;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) { return VertexSet(low_mask(n)); }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint32_t{1} << v); }
  static VertexSet of(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }
  constexpr Vertex highest() const { return 31 - std::countl_zero(bits_); }
  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint32_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint32_t{1} << v)); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists of two equal-size sets.
/// (For sets of different size this still gives a strict weak order.)
constexpr bool lex_less(VertexSet a, VertexSet b) {
  std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return a.contains(std::countr_zero(diff));
}

/// Small simple undirected graph on vertices 0..n-1 with 1 <= n <= 32.
///
/// Immutable value type: every operation that changes structure returns a new
/// graph, so instances can be shared freely between threads.
class Graph {
 public:
  /// Edgeless graph on n vertices. Throws std::invalid_argument unless 1 <= n <= 32.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from raw rows. Validates symmetry, loops and out-of-range bits.
  static Graph from_rows(int n, std::span<const std::uint32_t> rows);

  int order() const { return n_; }
  /// Edge count.
  int size() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
  std::uint32_t row(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1u; }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  int max_degree() const;
  int min_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::array<std::uint32_t, kMaxOrder> rows_{};
};

struct DegreeStats {
  std::vector<int> sequence;  ///< ascending
  int max_degree = 0;
  int min_degree = 0;
  int edges = 0;
};

Graph complement(const Graph& g);
DegreeStats degree_stats(const Graph& g);

/// min(delta(g), delta(complement(g)))
int min_degree_star(const Graph& g);

/// N(u) & N(v) without u and v. Throws std::invalid_argument when u == v.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Open neighbourhood of a set: vertices outside `s` adjacent to some member.
VertexSet neighborhood(const Graph& g, VertexSet s);

bool dominates(const Graph& g, VertexSet s);

/// Identifies the endpoints of edge {u, v}. The merged vertex keeps index
/// min(u, v); max(u, v) is removed and higher indices shift down by one.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
/// Whether g[s] is connected. The empty set counts as disconnected.
bool induces_connected(const Graph& g, VertexSet s);
/// Vertex set of the component of g[within] containing `start`.
VertexSet component_of(const Graph& g, Vertex start, VertexSet within);

/// g[s], members relabelled 0..|s|-1 in ascending order.
Graph induced(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

/// Disjoint union plus every edge between the two parts; h's vertices follow g's.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Graph whose vertex perm[v] corresponds to vertex v of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected and a path / a cycle (on at least 3 vertices).
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);

}  // namespace cdom
