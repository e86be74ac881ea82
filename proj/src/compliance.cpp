#include "cdom/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "cdom/constructions.hpp"
#include "cdom/domination.hpp"
#include "cdom/errors.hpp"
#include "cdom/topology.hpp"

namespace cdom {
namespace {

Graph side_graph(const Graph& g, Side side) { return side == Side::Graph ? g : complement(g); }

// Contracts the connected set s to a single vertex, one internal edge at a time.
Graph contract_set(Graph h, VertexSet s) {
  while (s.size() > 1) {
    Vertex a = -1, b = -1;
    for (Vertex u : s) {
      const VertexSet inside = h.neighbors(u) & s;
      if (!inside.empty()) {
        a = u;
        b = inside.lowest();
        break;
      }
    }
    const Vertex drop = std::max(a, b);
    h = contract_edge(h, a, b);
    const std::uint32_t bits = s.without(drop).bits();
    const std::uint32_t below = bits & low_mask(drop);
    s = VertexSet(below | ((bits & ~low_mask(drop)) >> 1));
  }
  return h;
}

std::optional<VertexSet> contraction_reaching(const Graph& h, int size, int degree) {
  const int n = h.order();
  if (size > n) return std::nullopt;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s < full;) {
    const VertexSet set(static_cast<std::uint32_t>(s));
    if (induces_connected(h, set) && contract_set(h, set).max_degree() >= degree) return set;
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return std::nullopt;
}

void check_k(const Graph& g, int k, int cap) {
  if (k < 1 || k > std::min(g.order(), cap))
    throw std::invalid_argument(fmt::format("k = {} out of range for order {}", k, g.order()));
}

using Evidence = std::optional<FilterEvidence>;

Evidence below(FilterRule rule, Side side, VertexSet vs, int measured, int threshold) {
  if (measured >= threshold) return std::nullopt;
  return FilterEvidence{rule, side, vs, measured, threshold, false};
}

Evidence above(FilterRule rule, Side side, VertexSet vs, int measured, int threshold) {
  if (measured <= threshold) return std::nullopt;
  return FilterEvidence{rule, side, vs, measured, threshold, true};
}

int neighbor_degree_sum(const Graph& h, Vertex v) {
  int sum = 0;
  for (Vertex w : h.neighbors(v)) sum += h.degree(w);
  return sum;
}

Evidence basic_conditions(const Graph& h, Side side) {
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v) {
      const int c = common_neighbors(h, u, v).size();
      const Evidence e = h.adjacent(u, v) ? below(FilterRule::AdjacentCommonNeighbors, side, {u, v}, c, 2)
                                          : below(FilterRule::NonAdjacentCommonNeighbors, side, {u, v}, c, 3);
      if (e) return e;
    }
  return std::nullopt;
}

Evidence window(FilterRule rule, Side side, VertexSet vs, int measured, int lo, int hi) {
  if (auto e = below(rule, side, vs, measured, lo)) return e;
  return above(rule, side, vs, measured, hi);
}

Evidence degree_window(const Graph& h, Side side, int lo, int hi) {
  for (Vertex v = 0; v < h.order(); ++v)
    if (auto e = window(FilterRule::DegreeWindow, side, VertexSet::single(v), h.degree(v), lo, hi)) return e;
  return std::nullopt;
}

Evidence degree6_sum(const Graph& h, Side side, int threshold) {
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) == 6)
      if (auto e = below(FilterRule::Degree6NeighborSum, side, VertexSet::single(v), neighbor_degree_sum(h, v),
                         threshold))
        return e;
  return std::nullopt;
}

struct OrderRules {
  int degree_lo, degree_hi, edge_lo, edge_hi, degree6_sum;
  bool degree7_rules;
};

constexpr OrderRules kOrder14{6, 7, 45, 46, 39, true};
constexpr OrderRules kOrder15{6, 8, 49, 56, 42, false};

Evidence order_conditions(const Graph& h, Side side, const OrderRules& r) {
  if (auto e = degree_window(h, side, r.degree_lo, r.degree_hi)) return e;
  if (auto e = window(FilterRule::EdgeWindow, side, {}, h.size(), r.edge_lo, r.edge_hi)) return e;
  if (auto e = basic_conditions(h, side)) return e;
  if (auto e = degree6_sum(h, side, r.degree6_sum)) return e;
  if (!r.degree7_rules) return std::nullopt;
  for (Vertex u = 0; u < h.order(); ++u) {
    if (h.degree(u) != 7) continue;
    for (Vertex v = u + 1; v < h.order(); ++v) {
      if (h.degree(v) != 7) continue;
      const int c = common_neighbors(h, u, v).size();
      const Evidence e = h.adjacent(u, v) ? below(FilterRule::Degree7AdjacentCommon, side, {u, v}, c, 3)
                                          : below(FilterRule::Degree7NonAdjacentCommon, side, {u, v}, c, 4);
      if (e) return e;
    }
  }
  if (h.size() == 45) {
    for (Vertex v = 0; v < h.order(); ++v)
      if (h.degree(v) == 7)
        if (auto e = below(FilterRule::Degree7NeighborSum, side, VertexSet::single(v), neighbor_degree_sum(h, v), 44))
          return e;
  }
  return std::nullopt;
}

FilterVerdict both_sides(const Graph& g, const OrderRules& r) {
  for (Side side : {Side::Graph, Side::Complement}) {
    if (auto e = order_conditions(side_graph(g, side), side, r)) return {false, e};
  }
  return {};
}

// Lexicographic pair index -> (u, v) table for order n.
struct PairTable {
  int n;
  std::vector<std::pair<int, int>> pairs;
  explicit PairTable(int n) : n(n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  Graph build(std::uint64_t mask) const {
    std::array<std::uint32_t, kMaxOrder> rows{};
    for (std::uint64_t m = mask; m; m &= m - 1) {
      auto [u, v] = pairs[std::countr_zero(m)];
      rows[u] |= std::uint32_t{1} << v;
      rows[v] |= std::uint32_t{1} << u;
    }
    return Graph::from_rows(n, std::span<const std::uint32_t>(rows.data(), n));
  }
};

struct Best {
  int value = -1;
  std::uint64_t mask = 0;

  void absorb(const Best& o) {
    if (o.value > value || (o.value == value && o.value >= 0 && o.mask < mask)) *this = o;
  }
};

int side_min(const Graph& h, int limit) { return min_connected_domination_small(h, limit); }

// min(gamma_c(G), gamma_c(complement)) when it exceeds `floor`, else -1.
int min_k_above(const Graph& g, const Graph& gc, int floor) {
  if (floor >= 1 && (side_min(g, floor) != 0 || side_min(gc, floor) != 0)) return -1;
  const int a = side_min(g, g.order());
  const int b = side_min(gc, g.order());
  if (a == 0) return b;
  if (b == 0) return a;
  return std::min(a, b);
}

Best scan_masks(const PairTable& table, std::uint64_t lo, std::uint64_t hi, std::uint64_t full) {
  Best best;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const std::uint64_t comp = mask ^ full;
    if (mask > comp) continue;
    const Graph g = table.build(mask);
    const int v = min_k_above(g, table.build(comp), best.value);
    if (v > best.value) best = {v, mask};
  }
  return best;
}

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

}  // namespace

ComplianceReport is_k_compliant(const Graph& g, int k) {
  check_k(g, k, g.order());
  const Graph gc = complement(g);
  ComplianceReport report;
  report.k = k;
  for (int s = 1; s <= g.order(); ++s) {
    for (Side side : {Side::Graph, Side::Complement}) {
      const Graph& h = side == Side::Graph ? g : gc;
      std::optional<VertexSet> set;
      if (h.order() == 1)
        set = VertexSet::single(0);
      else if (is_connected(h))
        set = connected_dominating_set_of_size(h, s);
      if (!set) continue;
      report.min_k = s;
      if (s <= k) {
        report.verdict = Verdict::Compliant;
        report.side = side;
        report.witness = *set;
      }
      return report;
    }
  }
  throw std::logic_error("is_k_compliant: a graph and its complement cannot both be disconnected");
}

ComplianceReport compliance_by_minor(const Graph& g, int k) {
  check_k(g, k, kMinorRouteMaxK);
  const Graph gc = complement(g);
  ComplianceReport report;
  report.k = k;
  for (int kk = 1; kk <= k; ++kk) {
    for (int size = 1; size <= kk; ++size) {
      for (Side side : {Side::Graph, Side::Complement}) {
        const Graph& h = side == Side::Graph ? g : gc;
        if (auto set = contraction_reaching(h, size, g.order() - kk)) {
          report.verdict = Verdict::Compliant;
          report.side = side;
          report.witness = *set;
          report.min_k = kk;
          return report;
        }
      }
    }
  }
  return report;
}

std::string_view rule_name(FilterRule rule) {
  switch (rule) {
    case FilterRule::AdjacentCommonNeighbors: return "adjacent-common-neighbors";
    case FilterRule::NonAdjacentCommonNeighbors: return "non-adjacent-common-neighbors";
    case FilterRule::DegreeWindow: return "degree-window";
    case FilterRule::EdgeWindow: return "edge-window";
    case FilterRule::Degree6NeighborSum: return "degree6-neighbor-sum";
    case FilterRule::Degree7NonAdjacentCommon: return "degree7-non-adjacent-common";
    case FilterRule::Degree7AdjacentCommon: return "degree7-adjacent-common";
    case FilterRule::Degree7NeighborSum: return "degree7-neighbor-sum";
  }
  return "unknown";
}

bool evidence_holds(const Graph& g, const FilterEvidence& e) {
  const Graph h = side_graph(g, e.side);
  if (!e.vertices.is_subset_of(h.vertices())) return false;
  const bool violated = e.upper_bound ? e.measured > e.threshold : e.measured < e.threshold;
  if (!violated) return false;
  const auto vs = e.vertices.to_vector();
  auto pair_common = [&](bool adjacent, int degree, int threshold) {
    if (vs.size() != 2 || h.adjacent(vs[0], vs[1]) != adjacent || e.upper_bound || e.threshold != threshold) return false;
    if (degree > 0 && (h.degree(vs[0]) != degree || h.degree(vs[1]) != degree)) return false;
    return common_neighbors(h, vs[0], vs[1]).size() == e.measured;
  };
  switch (e.rule) {
    case FilterRule::AdjacentCommonNeighbors: return pair_common(true, 0, 2);
    case FilterRule::NonAdjacentCommonNeighbors: return pair_common(false, 0, 3);
    case FilterRule::Degree7AdjacentCommon: return pair_common(true, 7, 3);
    case FilterRule::Degree7NonAdjacentCommon: return pair_common(false, 7, 4);
    case FilterRule::DegreeWindow: return vs.size() == 1 && h.degree(vs[0]) == e.measured;
    case FilterRule::EdgeWindow: return vs.empty() && h.size() == e.measured;
    case FilterRule::Degree6NeighborSum:
      return vs.size() == 1 && !e.upper_bound && h.degree(vs[0]) == 6 && neighbor_degree_sum(h, vs[0]) == e.measured;
    case FilterRule::Degree7NeighborSum:
      return vs.size() == 1 && !e.upper_bound && e.threshold == 44 && h.size() == 45 && h.degree(vs[0]) == 7 &&
             neighbor_degree_sum(h, vs[0]) == e.measured;
  }
  return false;
}

FilterVerdict filter_basic(const Graph& g) {
  if (auto e = basic_conditions(g, Side::Graph)) return {false, e};
  return {};
}

FilterVerdict filter_order14(const Graph& g) {
  if (g.order() != 14) throw std::invalid_argument("filter_order14 needs a graph of order 14");
  return both_sides(g, kOrder14);
}

FilterVerdict filter_order15(const Graph& g) {
  if (g.order() != 15) throw std::invalid_argument("filter_order15 needs a graph of order 15");
  return both_sides(g, kOrder15);
}

std::string_view one_of_three_name(OneOfThree r) {
  switch (r) {
    case OneOfThree::Compliant3: return "compliant3";
    case OneOfThree::K7InGraph: return "k7-in-graph";
    case OneOfThree::K7InComplement: return "k7-in-complement";
  }
  return "unknown";
}

OneOfThree verify_one_of_three(const Graph& g) {
  if (g.order() != 15) throw std::invalid_argument("verify_one_of_three needs a graph of order 15");
  if (is_k_compliant(g, 3).compliant()) return OneOfThree::Compliant3;
  const Graph k7 = complete_graph(7);
  if (has_minor(g, k7).found()) return OneOfThree::K7InGraph;
  if (has_minor(complement(g), k7).found()) return OneOfThree::K7InComplement;
  throw TheoremFalsified(fmt::format("order-15 graph is 3-non-compliant with no K7 minor on either side (mask {:#x})",
                                     mask_of(g)));
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 11) throw std::invalid_argument("graph_from_mask: order must be in [1, 11]");
  return PairTable(n).build(mask);
}

std::uint64_t mask_of(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("mask_of: order must be <= 11");
  std::uint64_t mask = 0;
  int i = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v, ++i)
      if (g.adjacent(u, v)) mask |= std::uint64_t{1} << i;
  return mask;
}

FResult compute_f(int n, Execution exec, bool allow_long) {
  if (n < 1 || n > kFMaxOrder) throw std::invalid_argument(fmt::format("compute_f: n = {} outside [1, 8]", n));
  if (n >= kFLongOrder && !allow_long)
    throw std::invalid_argument(fmt::format("compute_f: n = {} is long-running and needs the long flag", n));
  const PairTable table(n);
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::uint64_t full = total - 1;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;

  Best best;
  if (exec == Execution::Serial) {
    for (std::uint64_t c = 0; c < chunks; ++c) best.absorb(scan_masks(table, c * kChunk, std::min(total, (c + 1) * kChunk), full));
  } else {
    std::vector<Best> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c)
      partial[c] = scan_masks(table, c * kChunk, std::min(total, (c + 1) * kChunk), full);
    for (const Best& b : partial) best.absorb(b);
  }
  return {n, n - best.value, best.value, best.mask, table.build(best.mask)};
}

std::uint64_t compliance_route_disagreements(int n, std::span<const int> ks, Execution exec) {
  if (n < 1 || n > 7) throw std::invalid_argument("compliance_route_disagreements: order must be in [1, 7]");
  const PairTable table(n);
  const std::int64_t total = std::int64_t{1} << (n * (n - 1) / 2);
  std::uint64_t bad = 0;
  auto count = [&](std::int64_t mask) {
    const Graph g = table.build(static_cast<std::uint64_t>(mask));
    std::uint64_t b = 0;
    for (int k : ks)
      if (k <= n && is_k_compliant(g, k).compliant() != compliance_by_minor(g, k).compliant()) ++b;
    return b;
  };
  if (exec == Execution::Serial) {
    for (std::int64_t mask = 0; mask < total; ++mask) bad += count(mask);
  } else {
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : bad)
    for (std::int64_t mask = 0; mask < total; ++mask) bad += count(mask);
  }
  return bad;
}

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

NordhausSum check_nordhaus_sum(const Graph& g) {
  NordhausSum r;
  r.delta_star = min_degree_star(g);
  const Graph gc = complement(g);
  if (!is_connected(g) || !is_connected(gc)) return r;
  r.gc = gamma_c(g).value;
  r.gc_complement = gamma_c(gc).value;
  if (*r.gc < 4 || *r.gc_complement < 4) return r;
  r.status = *r.gc + *r.gc_complement <= r.delta_star + 2 ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

NordhausProduct check_nordhaus_product(const Graph& g) {
  NordhausProduct r;
  const Graph gc = complement(g);
  if (g.order() < 7 || !is_connected(g) || !is_connected(gc)) return r;
  const int n = g.order();
  r.gc = gamma_c(g).value;
  r.gc_complement = gamma_c(gc).value;
  const int product = *r.gc * *r.gc_complement;
  r.equality = product == 2 * n - 4;
  r.path_or_cycle = is_path(g) || is_cycle(g) || is_path(gc) || is_cycle(gc);
  r.status = product <= 2 * n - 4 && r.equality == r.path_or_cycle ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

int bound_fn_sqrt(int n) {
  if (n < 7) throw std::invalid_argument("bound_fn_sqrt needs n >= 7");
  int root = static_cast<int>(std::sqrt(static_cast<double>(2 * n - 4)));
  while (root * root < 2 * n - 4) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= 2 * n - 4) --root;
  return n - root + 1;
}

int bound_fn_linear(int n) {
  if (n < 15) throw std::invalid_argument("bound_fn_linear needs n >= 15");
  return n - (n + 1) / 4;
}

}  // namespace cdom
