#include "cdom/domination.hpp"

#include <stdexcept>

namespace cdom {
namespace {

// Lexicographic DFS over sets of a fixed size; prunes once the lowest
// undominated vertex can no longer be covered by an unchosen candidate.
bool dominating_dfs(const Graph& g, int remaining, Vertex next, VertexSet chosen, VertexSet covered,
                    VertexSet& out) {
  const VertexSet all = g.vertices();
  if (covered == all) {
    out = chosen;
    return true;
  }
  if (remaining == 0) return false;
  const Vertex lowest_open = (all - covered).lowest();
  const VertexSet allowed = VertexSet(all.bits() & ~low_mask(next));
  if ((g.closed_neighbors(lowest_open) & allowed).empty()) return false;
  for (Vertex v : allowed) {
    if (dominating_dfs(g, remaining - 1, v + 1, chosen.with(v), covered | g.closed_neighbors(v), out)) return true;
  }
  return false;
}

// Enumerates each connected set containing `seed` as its minimum exactly once
// (ESU scheme) and keeps the lexicographically smallest dominating one.
struct ConnectedSetSearch {
  const Graph& g;
  int target;
  Vertex seed;
  VertexSet forbidden;  // vertices below the seed
  std::optional<VertexSet> best;

  void extend(VertexSet sub, VertexSet ext, VertexSet sub_nbhd) {
    if (sub.size() == target) {
      if ((sub | sub_nbhd) == g.vertices() && (!best || lex_less(sub, *best))) best = sub;
      return;
    }
    while (!ext.empty()) {
      const Vertex w = ext.lowest();
      ext = ext.without(w);
      const VertexSet exclusive = g.neighbors(w) - sub - sub_nbhd - forbidden;
      extend(sub.with(w), ext | exclusive, (sub_nbhd | g.neighbors(w)) - sub.with(w));
    }
  }
};

}  // namespace

DominationResult gamma(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k) {
    VertexSet found;
    if (dominating_dfs(g, k, 0, {}, {}, found)) return {k, found};
  }
  throw std::logic_error("gamma: the full vertex set always dominates");
}

std::optional<VertexSet> connected_dominating_set_of_size(const Graph& g, int size) {
  if (size < 1 || size > g.order()) return std::nullopt;
  for (Vertex seed = 0; seed < g.order(); ++seed) {
    ConnectedSetSearch search{g, size, seed, VertexSet(low_mask(seed)), std::nullopt};
    const VertexSet start = VertexSet::single(seed);
    search.extend(start, g.neighbors(seed) - search.forbidden, g.neighbors(seed));
    // Sets from a smaller seed are lexicographically smaller.
    if (search.best) return search.best;
  }
  return std::nullopt;
}

DominationResult gamma_c(const Graph& g) {
  if (g.order() == 1) return {1, VertexSet::single(0)};
  if (!is_connected(g)) return {std::nullopt, {}};
  for (int k = 1; k <= g.order(); ++k)
    if (auto s = connected_dominating_set_of_size(g, k)) return {k, *s};
  throw std::logic_error("gamma_c: a connected graph is dominated by its vertex set");
}

int min_connected_domination_small(const Graph& g, int limit) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("min_connected_domination_small: order must be <= 12");
  const std::uint32_t full = low_mask(n);
  std::uint32_t closed[kMaxOrder];
  for (int v = 0; v < n; ++v) closed[v] = g.row(v) | (std::uint32_t{1} << v);
  for (int k = 1; k <= std::min(limit, n); ++k) {
    // Gosper's hack: all k-subsets of n bits in increasing order.
    std::uint32_t s = low_mask(k);
    while (s <= full) {
      std::uint32_t cover = 0;
      for (std::uint32_t r = s; r; r &= r - 1) cover |= closed[std::countr_zero(r)];
      if (cover == full) {
        std::uint32_t seen = s & (~s + 1u), frontier = seen;
        while (frontier) {
          std::uint32_t next = 0;
          for (std::uint32_t r = frontier; r; r &= r - 1) next |= closed[std::countr_zero(r)];
          next &= s & ~seen;
          seen |= next;
          frontier = next;
        }
        if (seen == s) return k;
      }
      const std::uint32_t c = s & (~s + 1u);
      const std::uint32_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return 0;
}

std::optional<Vertex> three_set_witness(const Graph& g, VertexSet s) {
  if (s.size() != 3) throw std::invalid_argument("three_set_witness needs exactly three vertices");
  if (!s.is_subset_of(g.vertices())) throw std::out_of_range("three_set_witness: vertex out of range");
  if (!induces_connected(g, s)) return std::nullopt;
  const VertexSet untouched = g.vertices() - s - neighborhood(g, s);
  if (untouched.empty()) return std::nullopt;
  return untouched.lowest();
}

}  // namespace cdom
