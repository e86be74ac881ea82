#pragma once

// Ordered-partition refinement shared by canonical labelling, isomorphism
// search and orbit tests. Everything here depends only on the partition's
// structure, never on vertex names, so results are isomorphism invariant.

#include <cstddef>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom::detail {

using Cells = std::vector<VertexSet>;

inline constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

/// Refines `cells` to the coarsest equitable partition below it.
void refine(const Graph& g, Cells& cells);

/// Splits cell `index` into {v} followed by the remainder (not refined).
Cells individualize(const Cells& cells, std::size_t index, Vertex v);

/// First non-singleton cell of minimum size, or kNoCell when discrete.
std::size_t target_cell(const Cells& cells);

/// Cell sizes followed by the quotient matrix of an equitable partition.
std::vector<int> quotient_signature(const Graph& g, const Cells& cells);

/// Drops members of `cell` that are twins of an earlier member. Swapping two
/// twins is an automorphism fixing every other vertex, so their search
/// subtrees are images of one another.
VertexSet twin_representatives(const Graph& g, VertexSet cell);

}  // namespace cdom::detail
