#include "longcycle/recognition.hpp"

#include <algorithm>
#include <array>

#include "longcycle/families.hpp"

namespace longcycle {

Pattern::Pattern(Graph g, std::string name)
    : graph_(std::move(g)), name_(std::move(name)) {
  if (graph_.order() > 6)
    throw Error(Error::Code::PatternTooLarge,
                "induced patterns are limited to order 6");
  certificate_ = canonical(graph_);
  size_ = graph_.size();
}

const Pattern& Pattern::P4() {
  static const Pattern p(path_graph(4), "P4");
  return p;
}

const Pattern& Pattern::C4() {
  static const Pattern p(cycle_graph(4), "C4");
  return p;
}

const Pattern& Pattern::TwoK2() {
  static const Pattern p(matching_graph(2), "2K2");
  return p;
}

const Pattern& Pattern::Claw() {
  static const Pattern p(join(empty_graph(1), empty_graph(3)), "K13");
  return p;
}

const Pattern& Pattern::by_name(std::string_view name) {
  if (name == "P4") return P4();
  if (name == "C4") return C4();
  if (name == "2K2") return TwoK2();
  if (name == "K13" || name == "claw") return Claw();
  throw Error(Error::Code::InvalidParameter,
              "unknown pattern name: " + std::string(name));
}

namespace {

bool subset_matches(const Graph& g, const Pattern& h,
                    std::span<const int> subset) {
  const int k = h.order();
  int edges = 0;
  VertexSet bits = 0;
  for (int i = 0; i < k; ++i) {
    bits |= vbit(subset[i]);
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(subset[i], subset[j])) ++edges;
  }
  if (edges != h.size()) return false;
  return canonical(induced_subgraph(g, bits)).bytes == h.certificate().bytes;
}

// Lexicographic combinations c[0] < ... < c[k-1] drawn from `pool`.
template <typename Fn>
std::optional<VertexSet> search_subsets(std::span<const int> pool, int k,
                                        Fn&& accept) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k <= 0) return std::nullopt;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(static_cast<size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (accept(std::span<const int>(subset))) {
      VertexSet bits = 0;
      for (int v : subset) bits |= vbit(v);
      return bits;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<VertexSet> find_induced(const Graph& g, const Pattern& h) {
  if (h.order() == 0) return VertexSet{0};
  std::vector<int> pool;
  for (int v = 0; v < g.order(); ++v) pool.push_back(v);
  return search_subsets(pool, h.order(), [&](std::span<const int> s) {
    return subset_matches(g, h, s);
  });
}

std::optional<VertexSet> find_induced_through(const Graph& g, const Pattern& h,
                                              int v) {
  if (v < 0 || v >= g.order())
    throw Error(Error::Code::InvalidVertex, "pattern anchor out of range");
  if (h.order() == 0) return VertexSet{0};
  std::vector<int> pool;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) pool.push_back(u);
  std::vector<int> subset(static_cast<size_t>(h.order()));
  const auto hit =
      search_subsets(pool, h.order() - 1, [&](std::span<const int> s) {
        subset[0] = v;
        std::copy(s.begin(), s.end(), subset.begin() + 1);
        std::sort(subset.begin(), subset.end());
        return subset_matches(g, h, subset);
      });
  if (!hit) {
    if (h.order() == 1) return VertexSet{vbit(v)};
    return std::nullopt;
  }
  return *hit | vbit(v);
}

bool contains_induced(const Graph& g, const Pattern& h) {
  return find_induced(g, h).has_value();
}

bool is_induced_free(const Graph& g, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns)
    if (contains_induced(g, p)) return false;
  return true;
}

ThresholdWitness is_threshold(const Graph& g) {
  const int n = g.order();
  ThresholdWitness w;
  VertexSet rest = g.vertices();
  while (rest) {
    const int remaining = set_size(rest);
    int pick = -1;
    char kind = 'I';
    LONGCYCLE_FOR_EACH_VERTEX(v, rest) {
      if ((g.neighbors(v) & rest) == 0) {
        pick = v;
        kind = 'I';
        break;
      }
    }
    if (pick < 0) {
      LONGCYCLE_FOR_EACH_VERTEX(v, rest) {
        if (set_size(g.neighbors(v) & rest) == remaining - 1) {
          pick = v;
          kind = 'U';
          break;
        }
      }
    }
    if (pick < 0) return w;  // stuck: not a threshold graph
    w.elimination.emplace_back(pick, kind);
    rest &= ~vbit(pick);
  }
  w.threshold = true;
  // Weights from elimination positions e = 1..n: isolated removals get e,
  // universal removals get 2n - e, cutoff 2n. A pair is adjacent iff the
  // earlier-removed endpoint was removed as universal, and these values
  // realize exactly that rule.
  w.weights.assign(static_cast<size_t>(n), 0);
  w.cutoff = 2 * n;
  for (size_t idx = 0; idx < w.elimination.size(); ++idx) {
    const auto [v, kind] = w.elimination[idx];
    const int e = static_cast<int>(idx) + 1;
    w.weights[static_cast<size_t>(v)] = kind == 'U' ? 2 * n - e : e;
  }
  return w;
}

bool is_claw_free(const Graph& g) { return !contains_induced(g, Pattern::Claw()); }

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

UniformThetaResult recognize_uniform_theta(const Graph& g) {
  UniformThetaResult r;
  const int n = g.order();
  if (n < 4 || !is_connected(g)) return r;
  int x = -1, y = -1;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 2) continue;
    if (d < 2) return r;
    if (x < 0)
      x = v;
    else if (y < 0)
      y = v;
    else
      return r;  // a third hub
  }
  if (y < 0) return r;
  if (g.degree(x) != g.degree(y)) return r;
  const int m = g.degree(x);
  int common_len = -1;
  int covered = 2;
  LONGCYCLE_FOR_EACH_VERTEX(w0, g.neighbors(x)) {
    int prev = x, cur = w0, len = 1;
    while (cur != y && g.degree(cur) == 2) {
      const VertexSet next = g.neighbors(cur) & ~vbit(prev);
      prev = cur;
      cur = first_vertex(next);
      ++len;
    }
    if (cur != y) return r;  // walked back into x
    if (common_len < 0) common_len = len;
    if (len != common_len) return r;
    covered += len - 1;
  }
  if (covered != n) return r;  // stray structure outside the branches
  if (common_len < 2) return r;
  r.uniform_theta = true;
  r.a = common_len;
  r.m = m;
  return r;
}

}  // namespace longcycle
