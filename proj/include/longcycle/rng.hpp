#pragma once

#include <cstdint>
#include <random>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Seeded generator with platform-independent helpers (std::mt19937_64 is
/// fully specified; the distribution wrappers avoid the
/// implementation-defined standard distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1; rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

/// G(n, 1/2) sample.
inline Graph random_graph(Rng& rng, int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) b.add_edge(u, v);
  return std::move(b).freeze();
}

/// Uniformly random relabelling of g.
inline Graph random_relabel(Rng& rng, const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).freeze();
}

}  // namespace longcycle
