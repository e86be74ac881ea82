#include "cdom/constructions.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "cdom/compliance.hpp"
#include "cdom/iso.hpp"

namespace cdom {

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  return path_graph(n).with_edge(0, n - 1);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(int a, int b) { return join(Graph(a), Graph(b)); }

Graph complete_tripartite(int a, int b, int c) { return join(complete_bipartite(a, b), Graph(c)); }

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g = g.with_edge(i, (i + 1) % 5);
    g = g.with_edge(i, i + 5);
    g = g.with_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph triangular_prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron() { return complete_tripartite(2, 2, 2); }

Graph cube_graph() {
  Graph g(8);
  for (Vertex v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v ^ bit) > v) g = g.with_edge(v, v ^ bit);
  return g;
}

Graph icosahedron() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  Graph g(12);
  for (int i = 0; i < 5; ++i) {
    const Vertex u = 1 + i, u_next = 1 + (i + 1) % 5, l = 6 + i, l_next = 6 + (i + 1) % 5;
    g = g.with_edge(0, u).with_edge(u, u_next).with_edge(11, l).with_edge(l, l_next);
    g = g.with_edge(u, l).with_edge(u, l_next);
  }
  return g;
}

Graph wheel_graph(int rim) { return join(cycle_graph(rim), Graph(1)); }

std::vector<std::pair<std::string, Graph>> planar_fixtures() {
  return {{"K4", complete_graph(4)},   {"C6", cycle_graph(6)},          {"P5", path_graph(5)},
          {"prism", triangular_prism()}, {"octahedron", octahedron()},   {"cube", cube_graph()},
          {"W6", wheel_graph(6)},        {"K2,5", complete_bipartite(2, 5)}, {"icosahedron", icosahedron()}};
}

Graph paley(int q) {
  auto prime = [](int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  if (q > 29 || !prime(q) || q % 4 != 1)
    throw std::invalid_argument(fmt::format("paley: {} is not a prime = 1 (mod 4) up to 29", q));
  VertexSet squares;
  for (int x = 1; x < q; ++x) squares = squares.with(x * x % q);
  Graph g(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      if (squares.contains(j - i)) g = g.with_edge(i, j);
  return g;
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const int n = g.order();
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<int> lambda, mu;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = common_neighbors(g, u, v).size();
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot && *slot != c) return std::nullopt;
      slot = c;
    }
  return SrgParams{n, k, lambda.value_or(0), mu.value_or(0)};
}

Graph twin_add(const Graph& g, Vertex u, bool closed) {
  if (u < 0 || u >= g.order()) throw std::out_of_range("twin_add: vertex out of range");
  if (g.order() == kMaxOrder) throw std::invalid_argument("twin_add would exceed the vertex cap");
  Graph out = disjoint_union(g, Graph(1));
  const Vertex v = g.order();
  for (Vertex w : g.neighbors(u)) out = out.with_edge(v, w);
  if (closed) out = out.with_edge(v, u);
  return out;
}

namespace {

std::vector<int> parse_numbers(std::string_view s, std::string_view full) {
  std::vector<int> out;
  while (true) {
    int x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || x < 0) throw std::invalid_argument(fmt::format("unknown graph name '{}'", full));
    out.push_back(x);
    s.remove_prefix(ptr - s.data());
    if (s.empty()) return out;
    if (s.front() != ',') throw std::invalid_argument(fmt::format("unknown graph name '{}'", full));
    s.remove_prefix(1);
  }
}

}  // namespace

Graph named(std::string_view name) {
  if (name == "petersen") return petersen_graph();
  if (name == "prism") return triangular_prism();
  if (name.size() >= 2) {
    std::string_view head = name.substr(0, name.starts_with("QR") ? 2 : 1);
    const auto nums = parse_numbers(name.substr(head.size()), name);
    if (head == "QR" && nums.size() == 1) return paley(nums[0]);
    if (head == "K" && nums.size() == 1) return complete_graph(nums[0]);
    if (head == "K" && nums.size() == 2) return complete_bipartite(nums[0], nums[1]);
    if (head == "K" && nums.size() == 3) return complete_tripartite(nums[0], nums[1], nums[2]);
    if (head == "E" && nums.size() == 1) return empty_graph(nums[0]);
    if (head == "P" && nums.size() == 1) return path_graph(nums[0]);
    if (head == "C" && nums.size() == 1) return cycle_graph(nums[0]);
  }
  throw std::invalid_argument(fmt::format("unknown graph name '{}'", name));
}

std::vector<Graph> graph_family(int order, int size, int min_degree, int max_degree) {
  if (order < 1 || order > 8) throw std::invalid_argument("graph_family: order must be in [1, 8]");
  const int pairs = order * (order - 1) / 2;
  std::map<CanonicalForm, Graph> classes;
  if (size < 0 || size > pairs) return {};
  if (size == 0) {
    Graph g(order);
    if (min_degree <= 0 && max_degree >= 0) return {g};
    return {};
  }
  // Gosper's hack walks every mask with exactly `size` bits.
  const std::uint64_t limit = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < limit;) {
    const Graph g = graph_from_mask(order, mask);
    if (g.min_degree() >= min_degree && g.max_degree() <= max_degree) classes.emplace(canonical_form(g), g);
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::vector<Graph> out;
  for (auto& [form, g] : classes) out.push_back(g);
  return out;
}

}  // namespace cdom
