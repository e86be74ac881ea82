#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "cdom/graph.hpp"
#include "cdom/parallel.hpp"

namespace cdom {

/// Which of G and its complement a statement refers to.
enum class Side { Graph, Complement };

enum class Verdict { Compliant, NonCompliant };

struct ComplianceReport {
  int k = 0;
  Verdict verdict = Verdict::NonCompliant;
  /// Side carrying the witness; set when compliant.
  std::optional<Side> side;
  /// Connected dominating set of size <= k on `side` (for the minor route:
  /// the connected set whose contraction reaches degree >= n - k).
  VertexSet witness;
  /// min(gamma_c(G), gamma_c(complement)). The minor route only knows it when
  /// it is at most k.
  std::optional<int> min_k;

  bool compliant() const { return verdict == Verdict::Compliant; }
};

/// k-compliance through connected domination: compliant iff
/// min(gamma_c(G), gamma_c(complement)) <= k, with gamma_c infinite on a
/// disconnected side. Ties between sides go to G. Requires 1 <= k <= n.
ComplianceReport is_k_compliant(const Graph& g, int k);

inline constexpr int kMinorRouteMaxK = 4;

/// k-compliance straight from the definition: looks in G, then in the
/// complement, for a connected set of at most k vertices whose contraction
/// leaves a vertex of degree >= n - k. Independent of the domination solver.
/// Requires 1 <= k <= min(n, 4).
ComplianceReport compliance_by_minor(const Graph& g, int k);

/// Necessary conditions on a 3-non-compliant graph.
enum class FilterRule {
  AdjacentCommonNeighbors,     ///< adjacent pair, |N(u) & N(v)| >= 2
  NonAdjacentCommonNeighbors,  ///< non-adjacent pair, |N(u) & N(v)| >= 3
  DegreeWindow,                ///< every degree inside [lo, hi]
  EdgeWindow,                  ///< edge count inside [lo, hi]
  Degree6NeighborSum,          ///< degree-6 vertex, sum of neighbour degrees
  Degree7NonAdjacentCommon,    ///< non-adjacent degree-7 pair, |N(u) & N(v)| >= 4
  Degree7AdjacentCommon,       ///< adjacent degree-7 pair, |N(u) & N(v)| >= 3
  Degree7NeighborSum,          ///< 45 edges: degree-7 vertex, neighbour degree sum >= 44
};

std::string_view rule_name(FilterRule rule);

struct FilterEvidence {
  FilterRule rule;
  Side side = Side::Graph;
  /// The violating vertex or pair; empty for edge-count rules.
  VertexSet vertices;
  int measured = 0;
  /// The bound that was violated.
  int threshold = 0;
  /// True when `threshold` is an upper bound (measured > threshold).
  bool upper_bound = false;
};

struct FilterVerdict {
  bool pass = true;
  std::optional<FilterEvidence> evidence;
};

/// Re-measures the evidence on g (or its complement) and confirms the
/// violation it claims.
bool evidence_holds(const Graph& g, const FilterEvidence& evidence);

/// Common-neighbour conditions on G: adjacent pairs share >= 2 neighbours,
/// non-adjacent pairs share >= 3. Reports the first violating pair.
FilterVerdict filter_basic(const Graph& g);

/// Conditions for 3-non-compliance at order 14, applied to G and to the
/// complement. Throws std::invalid_argument unless n == 14.
FilterVerdict filter_order14(const Graph& g);

/// Conditions for 3-non-compliance at order 15, applied to G and to the
/// complement. Throws std::invalid_argument unless n == 15.
FilterVerdict filter_order15(const Graph& g);

enum class OneOfThree { Compliant3, K7InGraph, K7InComplement };

std::string_view one_of_three_name(OneOfThree r);

/// For order 15: 3-compliant, or a K7 minor in G, or one in the complement,
/// checked in that order. Throws TheoremFalsified when none holds and
/// std::invalid_argument unless n == 15.
OneOfThree verify_one_of_three(const Graph& g);

/// Graph on n vertices whose edge i is the i-th pair in lexicographic order
/// (0,1), (0,2), ..., (n-2, n-1).
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

struct FResult {
  int n = 0;
  int f = 0;
  /// max over graphs of order n of min(gamma_c(G), gamma_c(complement)).
  int max_min_k = 0;
  /// Smallest edge mask attaining the maximum.
  std::uint64_t mask = 0;
  Graph extremal{1};
};

inline constexpr int kFMaxOrder = 8;
inline constexpr int kFLongOrder = 8;

/// f(n) = n - max_G min(gamma_c(G), gamma_c(complement)) over all labelled
/// graphs of order n, skipping any mask larger than its complement mask.
/// Throws std::invalid_argument for n outside [1, 8] and for n = 8 unless
/// `allow_long`.
FResult compute_f(int n, Execution exec = Execution::Parallel, bool allow_long = false);

/// Counts (graph, k) pairs on n vertices where is_k_compliant and
/// compliance_by_minor disagree, over all labelled graphs. n <= 7.
std::uint64_t compliance_route_disagreements(int n, std::span<const int> ks,
                                             Execution exec = Execution::Parallel);

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view check_status_name(CheckStatus s);

struct NordhausSum {
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<int> gc;
  std::optional<int> gc_complement;
  int delta_star = 0;
};

/// gamma_c(G) + gamma_c(complement) <= delta*(G) + 2 when both sides are
/// connected and both values are at least 4.
NordhausSum check_nordhaus_sum(const Graph& g);

struct NordhausProduct {
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<int> gc;
  std::optional<int> gc_complement;
  bool equality = false;
  bool path_or_cycle = false;
};

/// gamma_c(G) * gamma_c(complement) <= 2n - 4 for n >= 7 with both sides
/// connected, with equality exactly when G or its complement is a path or a
/// cycle. Fails on a violated bound or a mismatched equality case.
NordhausProduct check_nordhaus_product(const Graph& g);

/// n - ceil(sqrt(2n - 4)) + 1. Throws std::invalid_argument for n < 7.
int bound_fn_sqrt(int n);

/// n - floor((n + 1) / 4). Throws std::invalid_argument for n < 15.
int bound_fn_linear(int n);

}  // namespace cdom
