#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdom/compliance.hpp"
#include "cdom/graph.hpp"
#include "cdom/parallel.hpp"

namespace cdom {

enum class SearchMode {
  Sample,      ///< `count` seeded random graphs, plus `inject` up front
  Exhaustive,  ///< every isomorphism class of the order
  Candidates,  ///< exactly the graphs in `candidates`
};

struct SearchSpec {
  int order = 0;
  /// When set, only d-regular graphs.
  std::optional<int> regular;
  int min_degree = 0;
  /// Defaults to order - 1.
  std::optional<int> max_degree;
  int min_edges = 0;
  /// Defaults to order * (order - 1) / 2.
  std::optional<int> max_edges;
  bool use_basic = false;
  bool use_order14 = false;
  bool use_order15 = false;
  SearchMode mode = SearchMode::Sample;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  int k = 3;
  std::vector<Graph> inject;
  std::vector<Graph> candidates;
  /// Required for exhaustive runs at order >= 13.
  bool allow_long = false;
};

inline constexpr int kSearchMaxOrder = 16;
inline constexpr int kExhaustiveLongOrder = 13;

/// Throws std::invalid_argument on inconsistent constraints: bad order,
/// empty degree or edge windows, odd degree sum for a regular spec, order
/// filters at the wrong order, k out of range, candidates of the wrong order,
/// or an exhaustive order >= 13 without `allow_long`.
void validate(const SearchSpec& spec);

/// Spec from JSON, e.g.
///   {"order": 13, "regular": 6, "filters": ["basic"], "mode": "sample",
///    "count": 10000, "seed": 1, "k": 3, "inject": ["<graph6>"]}
/// Other keys: "degree": [lo, hi], "edges": [lo, hi], "candidates": [...],
/// "long": bool. Graphs are graph6 strings or names accepted by named().
/// Throws std::invalid_argument on malformed input.
SearchSpec parse_search_spec(std::string_view json_text);

/// Stable fingerprint of the spec contents, used in checkpoint headers.
std::uint64_t spec_hash(const SearchSpec& spec);

struct SearchHit {
  Graph graph;
  ComplianceReport report;
};

struct SearchResult {
  /// Non-compliant graphs, one per isomorphism class, by canonical form.
  std::vector<SearchHit> hits;
  std::uint64_t examined = 0;
  /// Rejected by the constraints (sample mode rejection sampling).
  std::uint64_t rejected = 0;
  /// Failed a filter.
  std::uint64_t filtered = 0;
  /// Passed the filters and got a full compliance check.
  std::uint64_t checked = 0;
};

/// Filters (necessary conditions) then full compliance checks. Output is
/// identical for every thread count.
SearchResult search_non_compliant(const SearchSpec& spec, Execution exec = Execution::Parallel);

/// One graph per isomorphism class of the given order, by canonical
/// augmentation (vertex addition). Degree and edge caps prune the tree since
/// every intermediate graph is an induced subgraph of its descendants.
/// Sorted by canonical form. Requires order <= 16.
std::vector<Graph> enumerate_graphs(int order, int max_degree = kMaxOrder, int max_edges = kMaxOrder * kMaxOrder,
                                    Execution exec = Execution::Parallel);

}  // namespace cdom
