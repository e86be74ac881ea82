#include "cdom/random.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace cdom {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(x);
  return splitmix64(x);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("random_regular: order out of range");
  if (d < 0 || d >= n || (n * d) % 2 != 0)
    throw std::invalid_argument(fmt::format("random_regular: no {}-regular graph on {} vertices", d, n));
  Rng rng(seed);
  std::vector<Vertex> points;
  while (true) {
    points.clear();
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) points.push_back(v);
    Graph g(n);
    bool ok = true;
    // Pair a random remaining point with another random remaining point,
    // rejecting loops and repeats; restart after too many rejections.
    while (!points.empty() && ok) {
      int tries = 0;
      while (true) {
        const std::size_t i = rng.below(points.size());
        const std::size_t j = rng.below(points.size());
        const Vertex u = points[i], v = points[j];
        if (i != j && u != v && !g.adjacent(u, v)) {
          g = g.with_edge(u, v);
          const std::size_t hi = std::max(i, j), lo = std::min(i, j);
          points[hi] = points.back();
          points.pop_back();
          points[lo] = points.back();
          points.pop_back();
          break;
        }
        if (++tries > 64 * static_cast<int>(points.size())) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return g;
  }
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_gnp: p must lie in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) g = g.with_edge(u, v);
  return g;
}

Graph random_gnm(int n, int m, std::uint64_t seed) {
  const int pairs = n * (n - 1) / 2;
  if (m < 0 || m > pairs) throw std::invalid_argument("random_gnm: edge count out of range");
  Rng rng(seed);
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  // Partial Fisher-Yates.
  for (int i = 0; i < m; ++i) std::swap(all[i], all[i + rng.below(pairs - i)]);
  Graph g(n);
  for (int i = 0; i < m; ++i) g = g.with_edge(all[i].first, all[i].second);
  return g;
}

}  // namespace cdom
