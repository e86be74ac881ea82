#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

inline constexpr int kMinorMaxTarget = 10;
inline constexpr int kMinorMaxHost = 20;

/// Disjoint connected branch sets in a host, one per target vertex.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
};

enum class MinorStatus { Found, Absent, Unknown };

struct MinorResult {
  MinorStatus status = MinorStatus::Absent;
  std::optional<MinorWitness> witness;
  /// Search states expanded.
  std::uint64_t nodes = 0;

  bool found() const { return status == MinorStatus::Found; }
};

/// Decides whether `target` is a minor of `host`.
///
/// The search merges host vertices into branch sets by edge contraction and
/// finishes with a subgraph embedding of the target, placed in descending
/// degree order. Merge states are memoised up to isomorphism and pruned by
/// order and edge-count bounds, planarity (for non-planar targets), and
/// reductions that are safe for the target's minimum degree.
///
/// Exhaustive unless `budget` (expanded states) runs out, in which case the
/// status is Unknown. Throws std::invalid_argument when the target exceeds
/// 10 vertices or the host exceeds 20.
MinorResult has_minor(const Graph& host, const Graph& target, std::optional<std::uint64_t> budget = std::nullopt);

/// Independent checker for the MinorWitness invariants.
bool check_minor_witness(const Graph& host, const Graph& target, const MinorWitness& witness);

bool is_planar(const Graph& g);

/// Replaces triangle {a, b, c} by a new vertex (index n) joined to a, b, c.
Graph delta_y(const Graph& g, VertexSet triangle);

/// Removes the degree-3 vertex v and joins its neighbours pairwise (only the
/// missing edges are added).
Graph y_delta(const Graph& g, Vertex v);

/// The seven graphs reachable from K6 by delta-Y and Y-delta moves, sorted by
/// order and then canonical form.
const std::vector<Graph>& petersen_family();

/// Closure of `seed` under delta-Y moves and Y-delta moves at vertices with an
/// independent neighbourhood, up to isomorphism.
std::vector<Graph> delta_y_closure(const Graph& seed, int max_order = 12);

struct IlResult {
  bool linked = false;
  /// Index into petersen_family() of the member found as a minor.
  std::optional<std::size_t> member;
  std::optional<MinorWitness> witness;
};

/// Intrinsic linking: some Petersen-family graph is a minor of g. Members are
/// tried smallest first. Requires order <= 20.
IlResult is_il(const Graph& g);

enum class IkCertificate { ByK7, ByConeOverIl, Unknown };

/// Two sufficient conditions for intrinsic knotting: a K7 minor, or a vertex
/// adjacent to all others whose deletion leaves an IL graph. Unknown is not a
/// proof of knotless embeddability.
IkCertificate is_ik_sufficient(const Graph& g);

/// Adds non-edges in lexicographic order whenever the result stays linklessly
/// embeddable. Throws std::invalid_argument if g is IL or order exceeds 14.
Graph saturate_nil(const Graph& g);

/// g is not IL and every added non-edge makes it IL. Throws
/// std::invalid_argument if g is IL.
bool is_max_nil(const Graph& g);

}  // namespace cdom
