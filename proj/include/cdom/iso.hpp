#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

/// Orders accepted by canonical_form.
inline constexpr int kCanonicalMaxOrder = 16;

/// Exact isomorphism-class fingerprint: the adjacency rows of g under the
/// least relabelling found by the individualisation-refinement search.
/// Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int order = 0;
  std::array<std::uint32_t, kMaxOrder> rows{};

  /// Lowercase hex: one byte for the order, then the upper triangle packed
  /// column by column (graph6 bit order), most significant bit first.
  std::string hex() const;
  /// The canonically labelled representative.
  Graph graph() const;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Throws std::invalid_argument above kCanonicalMaxOrder.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// A permutation `perm` with relabel(g, perm) == h, if one exists. Works up
/// to the full 32-vertex cap.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

namespace detail {

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Canonical labelling of a vertex-coloured graph. `colors` is an ordered
/// partition of the vertex set (empty = single colour). Any order <= 32.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colors = {});

/// Whether some automorphism of g maps u to v.
bool same_orbit(const Graph& g, Vertex u, Vertex v);

}  // namespace detail
}  // namespace cdom
