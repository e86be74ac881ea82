#include "cdom/iso.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "refine.hpp"

namespace cdom {
namespace {

using detail::Cells;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  detail::CanonicalLabeling run(Cells cells) {
    detail::refine(g_, cells);
    descend(cells);
    detail::CanonicalLabeling out;
    out.form.order = n_;
    out.form.rows = best_;
    out.order = best_order_;
    return out;
  }

 private:
  void descend(const Cells& cells) {
    const std::size_t idx = detail::target_cell(cells);
    if (idx == detail::kNoCell) {
      leaf(cells);
      return;
    }
    for (Vertex v : detail::twin_representatives(g_, cells[idx])) {
      Cells next = detail::individualize(cells, idx, v);
      detail::refine(g_, next);
      descend(next);
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[cells[i].lowest()] = i;
    std::array<std::uint32_t, kMaxOrder> rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint32_t r = 0;
      for (Vertex w : g_.neighbors(cells[i].lowest())) r |= std::uint32_t{1} << pos[w];
      rows[i] = r;
    }
    if (!have_best_ || std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_.begin(),
                                                    best_.begin() + n_)) {
      have_best_ = true;
      best_ = rows;
      best_order_.resize(n_);
      for (int i = 0; i < n_; ++i) best_order_[i] = cells[i].lowest();
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<std::uint32_t, kMaxOrder> best_{};
  std::vector<Vertex> best_order_;
};

// Individualise-and-refine matcher: g follows a single path, h branches over
// the matching cell, and quotient signatures prune incompatible pairs.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  std::optional<std::vector<Vertex>> run() {
    Cells cg{g_.vertices()}, ch{h_.vertices()};
    detail::refine(g_, cg);
    detail::refine(h_, ch);
    if (detail::quotient_signature(g_, cg) != detail::quotient_signature(h_, ch)) return std::nullopt;
    if (descend(cg, ch)) return result_;
    return std::nullopt;
  }

 private:
  bool descend(const Cells& cg, const Cells& ch) {
    const std::size_t idx = detail::target_cell(cg);
    if (idx == detail::kNoCell) return check_leaf(cg, ch);
    const Vertex pick = cg[idx].lowest();
    Cells ng = detail::individualize(cg, idx, pick);
    detail::refine(g_, ng);
    const auto sig = detail::quotient_signature(g_, ng);
    for (Vertex v : detail::twin_representatives(h_, ch[idx])) {
      Cells nh = detail::individualize(ch, idx, v);
      detail::refine(h_, nh);
      if (detail::quotient_signature(h_, nh) != sig) continue;
      if (descend(ng, nh)) return true;
    }
    return false;
  }

  bool check_leaf(const Cells& cg, const Cells& ch) {
    const int n = g_.order();
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[cg[i].lowest()] = ch[i].lowest();
    for (int u = 0; u < n; ++u) {
      std::uint32_t mapped = 0;
      for (Vertex w : g_.neighbors(u)) mapped |= std::uint32_t{1} << perm[w];
      if (mapped != h_.row(perm[u])) return false;
    }
    result_ = std::move(perm);
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> result_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(order)};
  std::uint8_t acc = 0;
  int filled = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((rows[i] >> j) & 1u));
      if (++filled == 8) {
        bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) out += fmt::format("{:02x}", b);
  return out;
}

Graph CanonicalForm::graph() const { return Graph::from_rows(order, std::span(rows.data(), order)); }

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(f.order);
  for (int i = 0; i < f.order; ++i) {
    h ^= f.rows[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw std::invalid_argument(fmt::format("canonical_form supports order <= {}, got {}", kCanonicalMaxOrder,
                                            g.order()));
  }
  return detail::canonical_labeling(g).form;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (degree_stats(g).sequence != degree_stats(h).sequence) return std::nullopt;
  return IsoSearch(g, h).run();
}

namespace detail {

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colors) {
  Cells cells;
  if (colors.empty()) {
    cells.push_back(g.vertices());
  } else {
    VertexSet seen;
    for (VertexSet c : colors) {
      if (c.empty()) continue;
      if (seen.intersects(c)) throw std::invalid_argument("colour classes overlap");
      seen |= c;
      cells.push_back(c);
    }
    if (seen != g.vertices()) throw std::invalid_argument("colour classes must cover the vertex set");
  }
  return CanonicalSearch(g).run(std::move(cells));
}

bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  const VertexSet all = g.vertices();
  const VertexSet cu[] = {VertexSet::single(u), all.without(u)};
  const VertexSet cv[] = {VertexSet::single(v), all.without(v)};
  if (g.order() == 1) return true;
  return canonical_labeling(g, cu).form == canonical_labeling(g, cv).form;
}

}  // namespace detail
}  // namespace cdom
