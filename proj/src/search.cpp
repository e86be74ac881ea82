#include "cdom/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "cdom/io.hpp"
#include "cdom/iso.hpp"
#include "cdom/random.hpp"

namespace cdom {
namespace {

using Json = nlohmann::json;

int max_degree_of(const SearchSpec& s) { return s.max_degree.value_or(s.order - 1); }
int max_edges_of(const SearchSpec& s) { return s.max_edges.value_or(s.order * (s.order - 1) / 2); }

bool meets_constraints(const SearchSpec& s, const Graph& g) {
  if (g.order() != s.order) return false;
  if (s.regular && (g.min_degree() != *s.regular || g.max_degree() != *s.regular)) return false;
  if (g.min_degree() < s.min_degree || g.max_degree() > max_degree_of(s)) return false;
  return g.size() >= s.min_edges && g.size() <= max_edges_of(s);
}

bool passes_filters(const SearchSpec& s, const Graph& g) {
  if (s.use_basic && !filter_basic(g).pass) return false;
  if (s.use_order14 && !filter_order14(g).pass) return false;
  if (s.use_order15 && !filter_order15(g).pass) return false;
  return true;
}

// Sample item `index`: up to 64 seeded draws until one meets the constraints.
std::optional<Graph> draw(const SearchSpec& s, std::uint64_t index) {
  const std::uint64_t base = derive_seed(s.seed, index);
  const int lo = s.min_edges, hi = max_edges_of(s);
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t seed = derive_seed(base, attempt);
    Graph g(s.order);
    if (s.regular) {
      g = random_regular(s.order, *s.regular, seed);
    } else {
      Rng rng(seed);
      const int m = lo + static_cast<int>(rng.below(hi - lo + 1));
      g = random_gnm(s.order, m, rng.next());
    }
    if (meets_constraints(s, g)) return g;
  }
  return std::nullopt;
}

struct Tally {
  std::uint64_t examined = 0, rejected = 0, filtered = 0, checked = 0;
  std::map<CanonicalForm, SearchHit> hits;

  void consider(const SearchSpec& s, const std::optional<Graph>& g) {
    ++examined;
    if (!g || !meets_constraints(s, *g)) {
      ++rejected;
      return;
    }
    if (!passes_filters(s, *g)) {
      ++filtered;
      return;
    }
    ++checked;
    ComplianceReport r = is_k_compliant(*g, s.k);
    if (!r.compliant()) hits.emplace(canonical_form(*g), SearchHit{*g, r});
  }

  void merge(Tally&& o) {
    examined += o.examined;
    rejected += o.rejected;
    filtered += o.filtered;
    checked += o.checked;
    hits.merge(o.hits);
  }
};

template <class Item>
Tally run_items(const SearchSpec& s, std::int64_t count, Item item, Execution exec) {
  Tally total;
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) total.consider(s, item(i));
    return total;
  }
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < count; ++i) local.consider(s, item(i));
#pragma omp critical
    total.merge(std::move(local));
  }
  return total;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("graphs in a search spec must be strings");
  try {
    return parse_graph_or_name(j.get<std::string>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(fmt::format("bad graph '{}' in search spec: {}", j.get<std::string>(), e.what()));
  }
}

std::pair<int, int> window_from_json(const Json& j, std::string_view key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument(fmt::format("'{}' must be [lo, hi]", key));
  return {j[0].get<int>(), j[1].get<int>()};
}

// Children of `parent` by adding vertex n, kept when the new vertex is the
// canonical deletion vertex: among minimum-degree vertices, the one earliest
// in the canonical labelling (up to automorphism).
void augment(const Graph& parent, int max_degree, int max_edges, std::vector<Graph>& out) {
  const int n = parent.order();
  std::set<CanonicalForm> seen;
  for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << n); ++nb) {
    const VertexSet s(nb);
    const int d = s.size();
    if (d > max_degree || parent.size() + d > max_edges) continue;
    bool ok = true;
    for (Vertex v : s)
      if (parent.degree(v) + 1 > max_degree) ok = false;
    if (!ok) continue;
    Graph child = disjoint_union(parent, Graph(1));
    for (Vertex v : s) child = child.with_edge(n, v);
    if (child.min_degree() != d) continue;
    const auto lab = detail::canonical_labeling(child);
    Vertex chosen = -1;
    for (Vertex v : lab.order)
      if (child.degree(v) == d) {
        chosen = v;
        break;
      }
    if (chosen != n && !detail::same_orbit(child, chosen, n)) continue;
    if (seen.insert(lab.form).second) out.push_back(child);
  }
}

}  // namespace

void validate(const SearchSpec& s) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("search spec: " + msg); };
  if (s.order < 1 || s.order > kSearchMaxOrder) fail(fmt::format("order must be in [1, {}]", kSearchMaxOrder));
  const int maxd = max_degree_of(s), maxm = max_edges_of(s);
  if (s.min_degree < 0 || s.min_degree > maxd || maxd > s.order - 1) fail("empty degree window");
  if (s.min_edges < 0 || s.min_edges > maxm || maxm > s.order * (s.order - 1) / 2) fail("empty edge window");
  if (s.regular) {
    const int d = *s.regular;
    if (d < 0 || d >= s.order) fail("regular degree out of range");
    if ((s.order * d) % 2 != 0) fail("odd degree sum");
    if (d < s.min_degree || d > maxd) fail("regular degree outside the degree window");
    const int m = s.order * d / 2;
    if (m < s.min_edges || m > maxm) fail("regular edge count outside the edge window");
  }
  if (s.min_degree * s.order > 2 * maxm || maxd * s.order < 2 * s.min_edges) fail("degree and edge windows disagree");
  if (s.use_order14 && s.order != 14) fail("the order-14 filter needs order 14");
  if (s.use_order15 && s.order != 15) fail("the order-15 filter needs order 15");
  if (s.k < 1 || s.k > s.order) fail("k out of range");
  for (const Graph& g : s.inject)
    if (g.order() != s.order) fail("injected graph has the wrong order");
  for (const Graph& g : s.candidates)
    if (g.order() != s.order) fail("candidate has the wrong order");
  if (s.mode == SearchMode::Exhaustive && s.order >= kExhaustiveLongOrder && !s.allow_long)
    fail(fmt::format("exhaustive search at order {} is long-running; set \"long\": true", s.order));
}

SearchSpec parse_search_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(fmt::format("search spec is not JSON: {}", e.what()));
  }
  if (!j.is_object()) throw std::invalid_argument("search spec must be a JSON object");
  static const std::set<std::string> known{"order", "regular", "degree", "edges",      "filters", "mode",
                                           "count", "seed",    "k",      "inject",     "candidates", "long"};
  for (auto& [key, value] : j.items())
    if (!known.count(key)) throw std::invalid_argument(fmt::format("unknown search spec key '{}'", key));
  SearchSpec s;
  try {
    s.order = j.at("order").get<int>();
    if (j.contains("regular")) s.regular = j["regular"].get<int>();
    if (j.contains("degree")) {
      auto [lo, hi] = window_from_json(j["degree"], "degree");
      s.min_degree = lo;
      s.max_degree = hi;
    }
    if (j.contains("edges")) {
      auto [lo, hi] = window_from_json(j["edges"], "edges");
      s.min_edges = lo;
      s.max_edges = hi;
    }
    for (const auto& f : j.value("filters", Json::array())) {
      const auto name = f.get<std::string>();
      if (name == "basic") s.use_basic = true;
      else if (name == "order14") s.use_order14 = true;
      else if (name == "order15") s.use_order15 = true;
      else throw std::invalid_argument(fmt::format("unknown filter '{}'", name));
    }
    const auto mode = j.value("mode", std::string("sample"));
    if (mode == "sample") s.mode = SearchMode::Sample;
    else if (mode == "exhaustive") s.mode = SearchMode::Exhaustive;
    else if (mode == "candidates") s.mode = SearchMode::Candidates;
    else throw std::invalid_argument(fmt::format("unknown mode '{}'", mode));
    s.count = j.value("count", std::uint64_t{0});
    s.seed = j.value("seed", std::uint64_t{0});
    s.k = j.value("k", 3);
    s.allow_long = j.value("long", false);
    for (const auto& g : j.value("inject", Json::array())) s.inject.push_back(graph_from_json(g));
    for (const auto& g : j.value("candidates", Json::array())) s.candidates.push_back(graph_from_json(g));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(fmt::format("search spec: {}", e.what()));
  }
  validate(s);
  return s;
}

std::uint64_t spec_hash(const SearchSpec& s) {
  std::string text = fmt::format("order={};regular={};degree={},{};edges={},{};filters={}{}{};mode={};count={};seed={};k={};long={}",
                                 s.order, s.regular ? *s.regular : -1, s.min_degree, max_degree_of(s), s.min_edges,
                                 max_edges_of(s), int{s.use_basic}, int{s.use_order14}, int{s.use_order15},
                                 static_cast<int>(s.mode), s.count, s.seed, s.k, int{s.allow_long});
  for (const Graph& g : s.inject) text += ";inject=" + emit_graph6(g);
  for (const Graph& g : s.candidates) text += ";candidate=" + emit_graph6(g);
  return fnv1a(text);
}

SearchResult search_non_compliant(const SearchSpec& spec, Execution exec) {
  validate(spec);
  Tally tally;
  switch (spec.mode) {
    case SearchMode::Sample: {
      const auto injected = static_cast<std::int64_t>(spec.inject.size());
      tally = run_items(
          spec, injected + static_cast<std::int64_t>(spec.count),
          [&](std::int64_t i) -> std::optional<Graph> {
            if (i < injected) return spec.inject[i];
            return draw(spec, static_cast<std::uint64_t>(i - injected));
          },
          exec);
      break;
    }
    case SearchMode::Candidates:
      tally = run_items(
          spec, static_cast<std::int64_t>(spec.candidates.size()),
          [&](std::int64_t i) -> std::optional<Graph> { return spec.candidates[i]; }, exec);
      break;
    case SearchMode::Exhaustive: {
      const auto all = enumerate_graphs(spec.order, max_degree_of(spec), max_edges_of(spec), exec);
      tally = run_items(
          spec, static_cast<std::int64_t>(all.size()), [&](std::int64_t i) -> std::optional<Graph> { return all[i]; },
          exec);
      break;
    }
  }
  SearchResult result{{}, tally.examined, tally.rejected, tally.filtered, tally.checked};
  for (auto& [form, hit] : tally.hits) result.hits.push_back(std::move(hit));
  return result;
}

std::vector<Graph> enumerate_graphs(int order, int max_degree, int max_edges, Execution exec) {
  if (order < 1 || order > kSearchMaxOrder)
    throw std::invalid_argument(fmt::format("enumerate_graphs: order must be in [1, {}]", kSearchMaxOrder));
  std::vector<Graph> level{Graph(1)};
  for (int n = 1; n < order; ++n) {
    std::vector<std::vector<Graph>> children(level.size());
    if (exec == Execution::Serial) {
      for (std::size_t i = 0; i < level.size(); ++i) augment(level[i], max_degree, max_edges, children[i]);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(level.size()); ++i)
        augment(level[i], max_degree, max_edges, children[i]);
    }
    level.clear();
    for (auto& c : children) level.insert(level.end(), c.begin(), c.end());
  }
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  keyed.reserve(level.size());
  for (const Graph& g : level) keyed.emplace_back(canonical_form(g), g);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [form, g] : keyed) out.push_back(g);
  return out;
}

}  // namespace cdom
