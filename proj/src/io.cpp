#include "cdom/io.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "cdom/constructions.hpp"
#include "cdom/errors.hpp"

namespace cdom {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

// Whitespace-separated non-negative integers; nullopt on anything else.
std::optional<std::vector<long>> integers(std::string_view line) {
  std::vector<long> out;
  line = trim(line);
  while (!line.empty()) {
    long x = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), x);
    if (ec != std::errc{} || x < 0) return std::nullopt;
    out.push_back(x);
    line.remove_prefix(ptr - line.data());
    if (!line.empty() && line.front() != ' ' && line.front() != '\t') return std::nullopt;
    line = trim(line);
  }
  return out;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(">>graph6<<")) offset = 10;
  std::string_view body = text.substr(offset);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  if (body.empty()) throw ParseError("empty graph6 string", offset);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError(fmt::format("byte {:#04x} is not graph6", c), offset + i);
  }
  if (body[0] == 126) throw ParseError("graph6 order above 62 is not supported", offset);
  const int n = body[0] - 63;
  if (n < 1 || n > kMaxOrder) throw ParseError(fmt::format("graph6 order {} outside [1, {}]", n, kMaxOrder), offset);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() != 1 + bytes)
    throw ParseError(fmt::format("graph6 for order {} needs {} data bytes, got {}", n, bytes, body.size() - 1),
                     offset + std::min(body.size(), 1 + bytes));
  Graph g(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = body[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g = g.with_edge(u, v);
    }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k)
    if (((body[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", offset + 1 + k / 6);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && skippable(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing edge-list header", i + 1);
  const auto header = integers(lines[i]);
  if (!header || header->size() != 2) throw ParseError("edge-list header must be 'n m'", i + 1);
  const long n = (*header)[0], m = (*header)[1];
  if (n < 1 || n > kMaxOrder) throw ParseError(fmt::format("order {} outside [1, {}]", n, kMaxOrder), i + 1);
  Graph g(static_cast<int>(n));
  long seen = 0;
  for (++i; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    const auto e = integers(lines[i]);
    if (!e || e->size() != 2) throw ParseError("edge line must be 'u v'", i + 1);
    const long u = (*e)[0], v = (*e)[1];
    if (u >= n || v >= n) throw ParseError(fmt::format("vertex index out of range for order {}", n), i + 1);
    if (u == v) throw ParseError("self-loop", i + 1);
    if (g.adjacent(u, v)) throw ParseError(fmt::format("duplicate edge {} {}", u, v), i + 1);
    g = g.with_edge(u, v);
    ++seen;
  }
  if (seen != m) throw ParseError(fmt::format("header promises {} edges, found {}", m, seen), lines.size());
  return g;
}

std::string emit_edgelist(const Graph& g) {
  std::string out = fmt::format("{} {}\n", g.order(), g.size());
  for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
  return out;
}

Graph parse_graph(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    if (skippable(line)) continue;
    const auto nums = integers(line);
    if (nums && nums->size() == 2) return parse_edgelist(text);
    break;
  }
  return parse_graph6(trim(text));
}

Graph parse_graph_or_name(std::string_view token) {
  try {
    return named(token);
  } catch (const std::invalid_argument&) {
    return parse_graph6(token);
  }
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_checkpoint(std::ostream& out, const Checkpoint& cp) {
  out << fmt::format("# cdom-checkpoint v1 spec={:016x} seed={}\n", cp.spec_hash, cp.seed);
  for (const Graph& g : cp.graphs) out << emit_graph6(g) << '\n';
}

Checkpoint read_checkpoint(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty checkpoint", 1);
  Checkpoint cp;
  unsigned long long hash = 0, seed = 0;
  if (std::sscanf(line.c_str(), "# cdom-checkpoint v1 spec=%16llx seed=%llu", &hash, &seed) != 2)
    throw ParseError("bad checkpoint header", 1);
  cp.spec_hash = hash;
  cp.seed = seed;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (trim(line).empty()) continue;
    try {
      cp.graphs.push_back(parse_graph6(trim(line)));
    } catch (const ParseError&) {
      throw ParseError("bad graph6 in checkpoint", lineno);
    }
  }
  return cp;
}

}  // namespace cdom
