#include "cdom/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <fmt/format.h>

#include "cdom/constructions.hpp"
#include "cdom/iso.hpp"

namespace cdom {
namespace {

struct BudgetExhausted {};

// A contracted host: vertex i of `g` stands for the host vertices origin[i].
struct MergeState {
  Graph g;
  std::vector<VertexSet> origin;
};

MergeState contract(const MergeState& s, Vertex u, Vertex v) {
  const Vertex keep = std::min(u, v), drop = std::max(u, v);
  MergeState out{contract_edge(s.g, u, v), s.origin};
  out.origin[keep] |= out.origin[drop];
  out.origin.erase(out.origin.begin() + drop);
  return out;
}

MergeState remove(const MergeState& s, Vertex v) {
  MergeState out{delete_vertex(s.g, v), s.origin};
  out.origin.erase(out.origin.begin() + v);
  return out;
}

// Target vertices in placement order: highest degree first, then whichever
// has the most already-placed neighbours.
std::vector<Vertex> placement_order(const Graph& t) {
  std::vector<Vertex> order;
  VertexSet placed;
  while (placed != t.vertices()) {
    Vertex best = -1;
    std::tuple<int, int> best_key{-1, -1};
    for (Vertex v : t.vertices() - placed) {
      std::tuple<int, int> key{(t.neighbors(v) & placed).size(), t.degree(v)};
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed = placed.with(best);
  }
  return order;
}

class SubgraphEmbedder {
 public:
  SubgraphEmbedder(const Graph& target, const Graph& host)
      : t_(target), h_(host), order_(placement_order(target)), image_(target.order(), -1) {}

  std::optional<std::vector<Vertex>> run() {
    if (place(0, {})) return image_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t i, VertexSet used) {
    if (i == order_.size()) return true;
    const Vertex tv = order_[i];
    VertexSet cand = h_.vertices() - used;
    for (Vertex tw : t_.neighbors(tv))
      if (image_[tw] >= 0) cand &= h_.neighbors(image_[tw]);
    const int need = t_.degree(tv);
    for (Vertex hv : cand) {
      if (h_.degree(hv) < need) continue;
      image_[tv] = hv;
      if (place(i + 1, used.with(hv))) return true;
    }
    image_[tv] = -1;
    return false;
  }

  const Graph& t_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
};

class MinorSearch {
 public:
  MinorSearch(const Graph& target, std::optional<std::uint64_t> budget)
      : target_(target),
        h_(target.order()),
        mh_(target.size()),
        min_deg_(target.min_degree()),
        connected_(is_connected(target)),
        nonplanar_(!is_planar(target)),
        budget_(budget) {}

  std::optional<MinorWitness> run(const MergeState& root) {
    if (connected_) {
      VertexSet left = root.g.vertices();
      while (!left.empty()) {
        const VertexSet comp = component_of(root.g, left.lowest(), left);
        left -= comp;
        if (comp.size() < h_) continue;
        MergeState part{induced(root.g, comp), {}};
        for (Vertex v : comp) part.origin.push_back(root.origin[v]);
        if (auto w = descend(part)) return w;
      }
      return std::nullopt;
    }
    return descend(root);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Deletions and suppressions that cannot destroy a model of the target.
  bool reduce(MergeState& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v = 0; v < s.g.order(); ++v) {
        const int d = s.g.degree(v);
        if (d < min_deg_ && d <= 1) {
          if (s.g.order() == 1) return false;
          s = remove(s, v);
          changed = true;
          break;
        }
        if (d == 2 && min_deg_ >= 3) {
          s = contract(s, v, s.g.neighbors(v).lowest());
          changed = true;
          break;
        }
      }
    }
    return true;
  }

  std::optional<MinorWitness> descend(MergeState s) {
    if (budget_ && nodes_ >= *budget_) throw BudgetExhausted{};
    ++nodes_;
    if (!reduce(s)) return std::nullopt;
    const int n = s.g.order();
    const int m = s.g.size();
    if (n < h_ || m < mh_) return std::nullopt;
    // In a connected host every vertex outside a branch set costs an edge and
    // every branch set of size b needs b - 1 internal edges.
    if (connected_ && m - (n - h_) < mh_) return std::nullopt;
    if (nonplanar_ && m <= 3 * n - 6 && is_planar(s.g)) return std::nullopt;
    if (!seen_.insert(detail::canonical_labeling(s.g).form).second) return std::nullopt;

    if (auto image = SubgraphEmbedder(target_, s.g).run()) {
      MinorWitness w;
      for (Vertex t = 0; t < h_; ++t) w.branch_sets.push_back(s.origin[(*image)[t]]);
      return w;
    }
    if (n == h_) return std::nullopt;

    std::vector<std::tuple<int, int, Vertex, Vertex>> edges;
    for (auto [u, v] : s.g.edges())
      edges.emplace_back(common_neighbors(s.g, u, v).size(), s.g.degree(u) + s.g.degree(v), u, v);
    std::sort(edges.begin(), edges.end());
    for (auto [c, d, u, v] : edges) {
      if (auto w = descend(contract(s, u, v))) return w;
    }
    return std::nullopt;
  }

  const Graph& target_;
  int h_;
  int mh_;
  int min_deg_;
  bool connected_;
  bool nonplanar_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen_;
};

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

MinorResult has_minor(const Graph& host, const Graph& target, std::optional<std::uint64_t> budget) {
  if (target.order() > kMinorMaxTarget)
    throw std::invalid_argument(fmt::format("has_minor: target order {} exceeds {}", target.order(), kMinorMaxTarget));
  if (host.order() > kMinorMaxHost)
    throw std::invalid_argument(fmt::format("has_minor: host order {} exceeds {}", host.order(), kMinorMaxHost));

  MinorResult result;
  if (target.order() > host.order() || target.size() > host.size()) return result;

  // A vertex adjacent to everything can always be its own branch set of a
  // complete target, so peel such vertices off first.
  MergeState state{host, {}};
  for (Vertex v = 0; v < host.order(); ++v) state.origin.push_back(VertexSet::single(v));
  std::vector<VertexSet> apex_sets;
  Graph rest = target;
  if (is_complete(target)) {
    while (rest.order() > 1 && state.g.order() > 1) {
      Vertex apex = -1;
      for (Vertex v = 0; v < state.g.order(); ++v)
        if (state.g.degree(v) == state.g.order() - 1) apex = v;
      if (apex < 0) break;
      apex_sets.push_back(state.origin[apex]);
      state = remove(state, apex);
      rest = delete_vertex(rest, rest.order() - 1);
    }
    if (rest.order() == 1 || state.g.order() == 1) {
      if (rest.order() == 1 && state.g.order() >= 1 && static_cast<int>(apex_sets.size()) + 1 == target.order()) {
        MinorWitness w;
        w.branch_sets.push_back(state.origin[0]);
        w.branch_sets.insert(w.branch_sets.end(), apex_sets.rbegin(), apex_sets.rend());
        result.status = MinorStatus::Found;
        result.witness = std::move(w);
      }
      return result;
    }
  }

  MinorSearch search(rest, budget);
  try {
    auto w = search.run(state);
    result.nodes = search.nodes();
    if (w) {
      // Apex vertices take the positions of the peeled (highest-index)
      // target vertices; all target vertices of a clique are interchangeable.
      w->branch_sets.insert(w->branch_sets.end(), apex_sets.rbegin(), apex_sets.rend());
      result.status = MinorStatus::Found;
      result.witness = std::move(w);
    }
  } catch (const BudgetExhausted&) {
    result.status = MinorStatus::Unknown;
    result.nodes = search.nodes();
  }
  return result;
}

bool check_minor_witness(const Graph& host, const Graph& target, const MinorWitness& witness) {
  if (static_cast<int>(witness.branch_sets.size()) != target.order()) return false;
  VertexSet used;
  for (VertexSet b : witness.branch_sets) {
    if (b.empty() || !b.is_subset_of(host.vertices()) || used.intersects(b)) return false;
    if (!induces_connected(host, b)) return false;
    used |= b;
  }
  for (auto [i, j] : target.edges()) {
    if (!neighborhood(host, witness.branch_sets[i]).intersects(witness.branch_sets[j])) return false;
  }
  return true;
}

Graph delta_y(const Graph& g, VertexSet triangle) {
  if (triangle.size() != 3 || !triangle.is_subset_of(g.vertices()))
    throw std::invalid_argument("delta_y needs three vertices of the graph");
  const auto t = triangle.to_vector();
  if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) || !g.adjacent(t[1], t[2]))
    throw std::invalid_argument("delta_y: vertices do not form a triangle");
  if (g.order() == kMaxOrder) throw std::invalid_argument("delta_y would exceed the vertex cap");
  Graph out = disjoint_union(g, Graph(1));
  out = out.without_edge(t[0], t[1]).without_edge(t[0], t[2]).without_edge(t[1], t[2]);
  const Vertex hub = g.order();
  for (Vertex v : t) out = out.with_edge(hub, v);
  return out;
}

Graph y_delta(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("y_delta: vertex out of range");
  if (g.degree(v) != 3) throw std::invalid_argument("y_delta needs a vertex of degree 3");
  const auto nb = g.neighbors(v).to_vector();
  Graph out = g.with_edge(nb[0], nb[1]).with_edge(nb[0], nb[2]).with_edge(nb[1], nb[2]);
  return delete_vertex(out, v);
}

std::vector<Graph> delta_y_closure(const Graph& seed, int max_order) {
  std::map<CanonicalForm, Graph> found;
  std::deque<Graph> queue{seed};
  found.emplace(canonical_form(seed), seed);
  auto visit = [&](const Graph& g) {
    if (g.order() > max_order) return;
    if (found.emplace(canonical_form(g), g).second) queue.push_back(g);
  };
  while (!queue.empty()) {
    const Graph g = queue.front();
    queue.pop_front();
    for (auto [u, v] : g.edges())
      for (Vertex w : common_neighbors(g, u, v))
        if (w > v) visit(delta_y(g, VertexSet{u, v, w}));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) continue;
      const auto nb = g.neighbors(v).to_vector();
      if (g.adjacent(nb[0], nb[1]) || g.adjacent(nb[0], nb[2]) || g.adjacent(nb[1], nb[2])) continue;
      visit(y_delta(g, v));
    }
  }
  std::vector<Graph> out;
  for (auto& [form, g] : found) out.push_back(g);
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
  return out;
}

const std::vector<Graph>& petersen_family() {
  static const std::vector<Graph> family = delta_y_closure(complete_graph(6));
  return family;
}

IlResult is_il(const Graph& g) {
  if (g.order() > kMinorMaxHost) throw std::invalid_argument("is_il: order exceeds 20");
  const auto& family = petersen_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto r = has_minor(g, family[i]);
    if (r.found()) return {true, i, r.witness};
  }
  return {};
}

IkCertificate is_ik_sufficient(const Graph& g) {
  if (g.order() > kMinorMaxHost) throw std::invalid_argument("is_ik_sufficient: order exceeds 20");
  if (has_minor(g, complete_graph(7)).found()) return IkCertificate::ByK7;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.order() > 1 && g.degree(v) == g.order() - 1 && is_il(delete_vertex(g, v)).linked)
      return IkCertificate::ByConeOverIl;
  }
  return IkCertificate::Unknown;
}

Graph saturate_nil(const Graph& g) {
  if (g.order() > 14) throw std::invalid_argument("saturate_nil: order exceeds 14");
  if (is_il(g).linked) throw std::invalid_argument("saturate_nil: input is intrinsically linked");
  // Rejected additions stay rejected: adding more edges keeps an IL graph IL.
  Graph cur = g;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (cur.adjacent(u, v)) continue;
      Graph next = cur.with_edge(u, v);
      if (!is_il(next).linked) cur = next;
    }
  return cur;
}

bool is_max_nil(const Graph& g) {
  if (is_il(g).linked) throw std::invalid_argument("is_max_nil: input is intrinsically linked");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && !is_il(g.with_edge(u, v)).linked) return false;
  return true;
}

}  // namespace cdom
