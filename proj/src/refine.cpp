#include "refine.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace cdom::detail {

void refine(const Graph& g, Cells& cells) {
  std::deque<VertexSet> queue(cells.begin(), cells.end());
  while (!queue.empty()) {
    const VertexSet splitter = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const VertexSet cell = cells[c];
      if (cell.size() == 1) continue;
      std::array<int, kMaxOrder> count{};
      int lo = kMaxOrder, hi = -1;
      for (Vertex v : cell) {
        count[v] = (g.neighbors(v) & splitter).size();
        lo = std::min(lo, count[v]);
        hi = std::max(hi, count[v]);
      }
      if (lo == hi) continue;
      Cells pieces;
      for (int k = lo; k <= hi; ++k) {
        VertexSet piece;
        for (Vertex v : cell)
          if (count[v] == k) piece = piece.with(v);
        if (!piece.empty()) pieces.push_back(piece);
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
      for (VertexSet p : pieces) queue.push_back(p);
      c += pieces.size() - 1;
    }
  }
}

Cells individualize(const Cells& cells, std::size_t index, Vertex v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c == index) {
      out.push_back(VertexSet::single(v));
      out.push_back(cells[c].without(v));
    } else {
      out.push_back(cells[c]);
    }
  }
  return out;
}

std::size_t target_cell(const Cells& cells) {
  std::size_t best = kNoCell;
  int best_size = kMaxOrder + 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    int s = cells[c].size();
    if (s > 1 && s < best_size) {
      best = c;
      best_size = s;
    }
  }
  return best;
}

std::vector<int> quotient_signature(const Graph& g, const Cells& cells) {
  std::vector<int> sig;
  sig.reserve(cells.size() * (cells.size() + 1));
  for (VertexSet c : cells) sig.push_back(c.size());
  for (VertexSet c : cells) {
    const Vertex rep = c.lowest();
    for (VertexSet d : cells) sig.push_back((g.neighbors(rep) & d).size());
  }
  return sig;
}

VertexSet twin_representatives(const Graph& g, VertexSet cell) {
  VertexSet reps;
  for (Vertex v : cell) {
    bool twin = false;
    for (Vertex u : reps) {
      if (g.neighbors(u).without(v) == g.neighbors(v).without(u)) {
        twin = true;
        break;
      }
    }
    if (!twin) reps = reps.with(v);
  }
  return reps;
}

}  // namespace cdom::detail
