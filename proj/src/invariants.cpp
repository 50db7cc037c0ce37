#include "longcycle/invariants.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <unordered_map>

namespace longcycle {

namespace {

struct SplitMixHash {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

using FailedStates = std::unordered_map<VertexSet, VertexSet, SplitMixHash>;

std::vector<int> canonical_cycle_sequence(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  int pos = 0;
  for (int i = 1; i < k; ++i)
    if (seq[i] < seq[pos]) pos = i;
  std::vector<int> fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = seq[(pos + i) % k];
    bwd[i] = seq[(pos - i + k) % k];
  }
  return fwd <= bwd ? fwd : bwd;
}

}  // namespace

PathWitness PathWitness::checked(const Graph& g, std::vector<int> vertices) {
  if (vertices.empty())
    throw Error(Error::Code::InvalidParameter, "empty path witness");
  VertexSet seen = 0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order())
      throw Error(Error::Code::InvalidVertex, "path vertex out of range");
    if (seen & vbit(v))
      throw Error(Error::Code::InvalidParameter, "repeated path vertex");
    seen |= vbit(v);
    if (i > 0 && !g.has_edge(vertices[i - 1], v))
      throw Error(Error::Code::InvalidParameter, "nonadjacent path step");
  }
  return PathWitness{std::move(vertices)};
}

int CycleWitness::cycle_distance(int x, int y) const {
  const int k = length();
  int ix = -1, iy = -1;
  for (int i = 0; i < k; ++i) {
    if (vertices[i] == x) ix = i;
    if (vertices[i] == y) iy = i;
  }
  if (ix < 0 || iy < 0)
    throw Error(Error::Code::InvalidVertex, "vertex not on cycle");
  const int d = std::abs(ix - iy);
  return std::min(d, k - d);
}

CycleWitness CycleWitness::checked(const Graph& g, std::vector<int> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k < 3)
    throw Error(Error::Code::InvalidParameter, "cycle needs >= 3 vertices");
  VertexSet seen = 0;
  for (int i = 0; i < k; ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order())
      throw Error(Error::Code::InvalidVertex, "cycle vertex out of range");
    if (seen & vbit(v))
      throw Error(Error::Code::InvalidParameter, "repeated cycle vertex");
    seen |= vbit(v);
    if (!g.has_edge(v, vertices[(i + 1) % k]))
      throw Error(Error::Code::InvalidParameter, "nonadjacent cycle step");
  }
  return CycleWitness{canonical_cycle_sequence(vertices)};
}

// ---- connectivity -----------------------------------------------------------

namespace {

// Unit-capacity max flow on the vertex-split digraph; counts internally
// disjoint s-t paths, stopping once `cap` are found. Nodes: in(v) = 2v,
// out(v) = 2v+1; source = out(s), sink = in(t).
int local_vertex_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::array<std::array<std::uint64_t, 2>, 2 * kMaxVertices> res{};
  auto arc_set = [&](int a, int b) { res[a][b >> 6] |= 1ull << (b & 63); };
  auto arc_has = [&](int a, int b) {
    return (res[a][b >> 6] >> (b & 63)) & 1;
  };
  auto arc_clear = [&](int a, int b) { res[a][b >> 6] &= ~(1ull << (b & 63)); };
  for (int i = 0; i < nodes; ++i) res[i] = {0, 0};
  for (int v = 0; v < n; ++v) {
    arc_set(2 * v, 2 * v + 1);
    LONGCYCLE_FOR_EACH_VERTEX(u, g.neighbors(v)) arc_set(2 * v + 1, 2 * u);
  }
  const int source = 2 * s + 1, sink = 2 * t;

  int flow = 0;
  std::array<std::int16_t, 2 * kMaxVertices> parent;
  std::array<int, 2 * kMaxVertices> queue;
  while (flow < cap) {
    parent.fill(-2);
    parent[source] = -1;
    int qh = 0, qt = 0;
    queue[qt++] = source;
    bool reached = false;
    while (qh < qt && !reached) {
      const int a = queue[qh++];
      for (int w = 0; w < 2 && !reached; ++w) {
        std::uint64_t row = res[a][w];
        while (row) {
          const int b = (w << 6) + std::countr_zero(row);
          row &= row - 1;
          if (parent[b] != -2) continue;
          parent[b] = static_cast<std::int16_t>(a);
          if (b == sink) {
            reached = true;
            break;
          }
          queue[qt++] = b;
        }
      }
    }
    if (!reached) break;
    for (int b = sink; parent[b] != -1; b = parent[b]) {
      const int a = parent[b];
      arc_clear(a, b);
      arc_set(b, a);
    }
    ++flow;
  }
  return flow;
}

bool has_articulation_point(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> disc, low, parent, child_count;
  disc.fill(-1);
  parent.fill(-1);
  child_count.fill(0);
  int timer = 0;
  // iterative DFS from vertex 0 (caller guarantees connectivity)
  std::array<int, kMaxVertices> stack;
  std::array<VertexSet, kMaxVertices> todo;
  int top = 0;
  stack[top] = 0;
  todo[top] = g.neighbors(0);
  disc[0] = low[0] = timer++;
  while (top >= 0) {
    const int u = stack[top];
    if (todo[top]) {
      const int v = first_vertex(todo[top]);
      todo[top] &= todo[top] - 1;
      if (disc[v] == -1) {
        parent[v] = u;
        ++child_count[u];
        disc[v] = low[v] = timer++;
        ++top;
        stack[top] = v;
        todo[top] = g.neighbors(v);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
    } else {
      --top;
      if (top >= 0) {
        const int p = stack[top];
        low[p] = std::min(low[p], low[u]);
        if (parent[p] != -1 && low[u] >= disc[p]) return true;  // p cuts
      }
    }
  }
  return child_count[0] >= 2;  // root articulation rule
}

}  // namespace

bool is_biconnected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return !has_articulation_point(g);
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;  // complete
  int best = g.min_degree();
  for (int u = 0; u < n && best > 0; ++u)
    LONGCYCLE_FOR_EACH_VERTEX(v, ~g.neighbors(u) & g.vertices() &
                                     ~all_vertices(u + 1)) {
      best = std::min(best, local_vertex_connectivity(g, u, v, best));
    }
  return best;
}

bool connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k == 1) return is_connected(g);
  if (k == 2) return is_biconnected(g);
  const int n = g.order();
  if (n <= k) return false;  // kappa <= n - 1 < k unless complete; K_n has n-1
  if (!is_connected(g) || g.min_degree() < k) return false;
  if (g.size() == n * (n - 1) / 2) return true;
  for (int u = 0; u < n; ++u)
    LONGCYCLE_FOR_EACH_VERTEX(v, ~g.neighbors(u) & g.vertices() &
                                     ~all_vertices(u + 1)) {
      if (local_vertex_connectivity(g, u, v, k) < k) return false;
    }
  return true;
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> comps;
  std::array<int, kMaxVertices> disc, low;
  disc.fill(-1);
  int timer = 0;
  std::vector<std::pair<int, int>> edge_stack;

  // recursive lambda; depth <= 64
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        edge_stack.emplace_back(u, v);
        self(self, v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet comp = 0;
          std::pair<int, int> e;
          do {
            e = edge_stack.back();
            edge_stack.pop_back();
            comp |= vbit(e.first) | vbit(e.second);
          } while (e != std::make_pair(u, v));
          comps.push_back(comp);
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int r = 0; r < n; ++r)
    if (disc[r] == -1) dfs(dfs, r, -1);
  std::sort(comps.begin(), comps.end(),
            [](VertexSet a, VertexSet b) { return first_vertex(a) < first_vertex(b); });
  return comps;
}

// ---- girth ------------------------------------------------------------------

namespace {

// Shortest u-v path length avoiding the edge uv itself; -1 if none.
int dist_excluding_edge(const Graph& g, int u, int v) {
  VertexSet layer = vbit(u), seen = vbit(u);
  int d = 0;
  while (layer) {
    ++d;
    VertexSet next = 0;
    LONGCYCLE_FOR_EACH_VERTEX(x, layer) {
      VertexSet nb = g.neighbors(x);
      if (x == u) nb &= ~vbit(v);
      next |= nb;
    }
    if (next & vbit(v)) return d;
    layer = next & ~seen;
    seen |= layer;
  }
  return -1;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  int best = -1;
  for (auto [u, v] : g.edges()) {
    const int d = dist_excluding_edge(g, u, v);
    if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

// ---- longest cycle ----------------------------------------------------------

namespace {

struct CycleMaxSearch {
  const Graph& g;
  Budget* budget;
  bool aborted = false;
  int best = 0;
  std::vector<int> best_path;
  int root = 0;
  VertexSet allowed = 0;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;

  void dfs(int head) {
    if (budget && !budget->spend()) {
      aborted = true;
      return;
    }
    if (depth >= 3 && g.has_edge(head, root) && depth > best) {
      best = depth;
      best_path.assign(path.begin(), path.begin() + depth);
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) <= best) return;
    if (!(reach & g.neighbors(root))) return;  // can never close
    LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
      path[depth] = v;
      visited |= vbit(v);
      ++depth;
      dfs(v);
      --depth;
      visited &= ~vbit(v);
      if (aborted) return;
    }
  }
};

}  // namespace

CycleSearchResult circumference_search(const Graph& g, Budget* budget) {
  CycleSearchResult result;
  CycleMaxSearch search{g, budget};
  for (VertexSet comp : biconnected_components(g)) {
    if (set_size(comp) < 3 || set_size(comp) <= search.best) continue;
    LONGCYCLE_FOR_EACH_VERTEX(r, comp) {
      const VertexSet rest = comp & ~all_vertices(r + 1);
      if (1 + set_size(rest) <= std::max(search.best, 2)) break;
      search.root = r;
      search.allowed = rest;
      search.visited = vbit(r);
      search.path[0] = r;
      search.depth = 1;
      search.dfs(r);
      if (search.aborted) {
        result.timed_out = true;
        return result;
      }
    }
  }
  result.circumference = search.best;
  if (search.best >= 3)
    result.witness = CycleWitness::checked(g, search.best_path);
  return result;
}

int circumference(const Graph& g) { return circumference_search(g).circumference; }

// ---- longest path -----------------------------------------------------------

namespace {

struct PathMaxSearch {
  const Graph& g;
  Budget* budget;
  bool aborted = false;
  int best = 0;
  std::vector<int> best_path;
  VertexSet allowed = 0;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;

  void dfs(int head) {
    if (budget && !budget->spend()) {
      aborted = true;
      return;
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) <= best) return;
    LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
      path[depth] = v;
      visited |= vbit(v);
      ++depth;
      if (depth > best) {
        best = depth;
        best_path.assign(path.begin(), path.begin() + depth);
      }
      dfs(v);
      --depth;
      visited &= ~vbit(v);
      if (aborted) return;
    }
  }
};

}  // namespace

PathSearchResult detour_search(const Graph& g, Budget* budget) {
  PathSearchResult result;
  if (g.order() == 0) return result;
  PathMaxSearch search{g, budget};
  for (VertexSet comp : connected_components(g)) {
    if (set_size(comp) <= search.best) continue;
    search.allowed = comp;
    LONGCYCLE_FOR_EACH_VERTEX(s, comp) {
      if (1 + set_size(reach_set(g, s, comp & ~vbit(s))) <= search.best)
        continue;
      search.visited = vbit(s);
      search.path[0] = s;
      search.depth = 1;
      if (search.best == 0) {
        search.best = 1;
        search.best_path = {s};
      }
      search.dfs(s);
      if (search.aborted) {
        result.timed_out = true;
        return result;
      }
    }
  }
  result.detour_order = search.best;
  result.witness = PathWitness{search.best_path};
  return result;
}

int detour_order(const Graph& g) { return detour_search(g).detour_order; }

// ---- fixed-length membership searches ---------------------------------------

namespace {

// Exists a cycle of length exactly `len` (the circumference) through
// `root`? Failed (visited, head) states are memoised; the failure of a
// state depends only on the state since len and root are fixed.
struct CycleThroughSearch {
  const Graph& g;
  Budget* budget;
  int len;
  int root;
  VertexSet allowed;
  bool aborted = false;
  FailedStates failed;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;
  std::vector<int> found;

  bool dfs(int head) {
    if (depth == len) {
      if (g.has_edge(head, root)) {
        found.assign(path.begin(), path.begin() + depth);
        return true;
      }
      return false;
    }
    if (auto it = failed.find(visited);
        it != failed.end() && ((it->second >> head) & 1))
      return false;
    if (budget && !budget->spend()) {
      aborted = true;
      return false;
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) >= len && (reach & g.neighbors(root))) {
      LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
        path[depth] = v;
        visited |= vbit(v);
        ++depth;
        const bool ok = dfs(v);
        --depth;
        visited &= ~vbit(v);
        if (ok) return true;
        if (aborted) return false;
      }
    }
    failed[visited] |= vbit(head);
    return false;
  }

  bool run() {
    visited = vbit(root);
    path[0] = root;
    depth = 1;
    return dfs(root);
  }
};

// Exists a path with exactly `len` vertices through `target`?
struct PathThroughSearch {
  const Graph& g;
  Budget* budget;
  int len;
  int target;
  VertexSet allowed;  // the component of target
  bool aborted = false;
  FailedStates failed;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;
  std::vector<int> found;

  bool dfs(int head) {
    if (depth == len) {
      if (visited & vbit(target)) {
        found.assign(path.begin(), path.begin() + depth);
        return true;
      }
      return false;
    }
    if (auto it = failed.find(visited);
        it != failed.end() && ((it->second >> head) & 1))
      return false;
    if (budget && !budget->spend()) {
      aborted = true;
      return false;
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) >= len &&
        ((visited & vbit(target)) || (reach & vbit(target)))) {
      LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
        path[depth] = v;
        visited |= vbit(v);
        ++depth;
        const bool ok = dfs(v);
        --depth;
        visited &= ~vbit(v);
        if (ok) return true;
        if (aborted) return false;
      }
    }
    failed[visited] |= vbit(head);
    return false;
  }

  bool run() {
    LONGCYCLE_FOR_EACH_VERTEX(s, allowed) {
      if (1 + set_size(reach_set(g, s, allowed & ~vbit(s))) < len) continue;
      visited = vbit(s);
      path[0] = s;
      depth = 1;
      if (dfs(s)) return true;
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

CoverSetResult cummerbund_cover_set(const Graph& g, Budget* budget) {
  CoverSetResult result;
  const auto comps = biconnected_components(g);
  int c = 0;
  std::vector<int> comp_c(comps.size(), 0);
  for (size_t i = 0; i < comps.size(); ++i) {
    if (set_size(comps[i]) < 3) continue;
    CycleMaxSearch search{g, budget};
    LONGCYCLE_FOR_EACH_VERTEX(r, comps[i]) {
      const VertexSet rest = comps[i] & ~all_vertices(r + 1);
      if (1 + set_size(rest) <= std::max(search.best, 2)) break;
      search.root = r;
      search.allowed = rest;
      search.visited = vbit(r);
      search.path[0] = r;
      search.depth = 1;
      search.dfs(r);
      if (search.aborted) {
        result.timed_out = true;
        return result;
      }
    }
    comp_c[i] = search.best;
    c = std::max(c, search.best);
  }
  if (c < 3) return result;  // acyclic: empty cover
  VertexSet marked = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comp_c[i] != c) continue;
    LONGCYCLE_FOR_EACH_VERTEX(v, comps[i]) {
      if (marked & vbit(v)) continue;
      CycleThroughSearch search{g, budget, c, v, comps[i]};
      if (search.run()) {
        for (int u : search.found) marked |= vbit(u);
      } else if (search.aborted) {
        result.timed_out = true;
        return result;
      }
    }
  }
  result.cover = marked;
  return result;
}

CoverSetResult detour_cover_set(const Graph& g, Budget* budget) {
  CoverSetResult result;
  if (g.order() == 0) return result;
  const auto det = detour_search(g, budget);
  if (det.timed_out) {
    result.timed_out = true;
    return result;
  }
  const int len = det.detour_order;
  if (len <= 1) {
    result.cover = g.vertices();  // edgeless: every vertex is a detour
    return result;
  }
  VertexSet marked = 0;
  for (VertexSet comp : connected_components(g)) {
    if (set_size(comp) < len) continue;
    LONGCYCLE_FOR_EACH_VERTEX(v, comp) {
      if (marked & vbit(v)) continue;
      PathThroughSearch search{g, budget, len, v, comp};
      if (search.run()) {
        for (int u : search.found) marked |= vbit(u);
      } else if (search.aborted) {
        result.timed_out = true;
        return result;
      }
    }
  }
  result.cover = marked;
  return result;
}

int cc(const Graph& g) { return set_size(cummerbund_cover_set(g).cover); }
int dc(const Graph& g) { return set_size(detour_cover_set(g).cover); }

bool is_detour_covered(const Graph& g) { return dc(g) == g.order(); }

bool is_cummerbund_covered(const Graph& g) {
  if (g.order() == 0) return false;
  return cc(g) == g.order();  // nonzero cover implies a cycle exists
}

// ---- exhaustive enumeration of maximum cycles / paths ------------------------

namespace {

struct AllMaxCycles {
  const Graph& g;
  Budget* budget;
  int len;
  const std::function<bool(const CycleWitness&)>& fn;
  bool aborted = false;
  bool stopped = false;
  int root = 0;
  VertexSet allowed = 0;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;

  void dfs(int head) {
    if (depth == len) {
      if (g.has_edge(head, root) && path[1] < head) {
        std::vector<int> seq(path.begin(), path.begin() + depth);
        if (!fn(CycleWitness::checked(g, seq))) stopped = true;
      }
      return;
    }
    if (budget && !budget->spend()) {
      aborted = true;
      return;
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) < len) return;
    if (!(reach & g.neighbors(root))) return;
    LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
      path[depth] = v;
      visited |= vbit(v);
      ++depth;
      dfs(v);
      --depth;
      visited &= ~vbit(v);
      if (aborted || stopped) return;
    }
  }
};

struct AllMaxPaths {
  const Graph& g;
  Budget* budget;
  int len;
  const std::function<bool(const PathWitness&)>& fn;
  bool aborted = false;
  bool stopped = false;
  VertexSet allowed = 0;
  VertexSet visited = 0;
  std::array<int, kMaxVertices> path{};
  int depth = 0;

  void dfs(int head) {
    if (depth == len) {
      if (path[0] < path[len - 1]) {
        std::vector<int> seq(path.begin(), path.begin() + depth);
        if (!fn(PathWitness{std::move(seq)})) stopped = true;
      }
      return;
    }
    if (budget && !budget->spend()) {
      aborted = true;
      return;
    }
    const VertexSet cand = allowed & ~visited;
    const VertexSet reach = reach_set(g, head, cand);
    if (depth + set_size(reach) < len) return;
    LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(head) & cand) {
      path[depth] = v;
      visited |= vbit(v);
      ++depth;
      dfs(v);
      --depth;
      visited &= ~vbit(v);
      if (aborted || stopped) return;
    }
  }
};

}  // namespace

bool for_each_cummerbund(const Graph& g,
                         const std::function<bool(const CycleWitness&)>& fn,
                         Budget* budget) {
  const auto circ = circumference_search(g, budget);
  if (circ.timed_out) return false;
  if (circ.circumference < 3) return true;
  AllMaxCycles search{g, budget, circ.circumference, fn};
  for (VertexSet comp : biconnected_components(g)) {
    if (set_size(comp) < circ.circumference) continue;
    LONGCYCLE_FOR_EACH_VERTEX(r, comp) {
      const VertexSet rest = comp & ~all_vertices(r + 1);
      if (1 + set_size(rest) < circ.circumference) break;
      search.root = r;
      search.allowed = rest;
      search.visited = vbit(r);
      search.path[0] = r;
      search.depth = 1;
      search.dfs(r);
      if (search.aborted) return false;
      if (search.stopped) return true;
    }
  }
  return true;
}

bool for_each_detour(const Graph& g,
                     const std::function<bool(const PathWitness&)>& fn,
                     Budget* budget) {
  if (g.order() == 0) return true;
  const auto det = detour_search(g, budget);
  if (det.timed_out) return false;
  const int len = det.detour_order;
  if (len == 1) {
    for (int v = 0; v < g.order(); ++v)
      if (!fn(PathWitness{{v}})) return true;
    return true;
  }
  AllMaxPaths search{g, budget, len, fn};
  for (VertexSet comp : connected_components(g)) {
    if (set_size(comp) < len) continue;
    search.allowed = comp;
    LONGCYCLE_FOR_EACH_VERTEX(s, comp) {
      if (1 + set_size(reach_set(g, s, comp & ~vbit(s))) < len) continue;
      search.visited = vbit(s);
      search.path[0] = s;
      search.depth = 1;
      search.dfs(s);
      if (search.aborted) return false;
      if (search.stopped) return true;
    }
  }
  return true;
}

std::optional<std::uint64_t> count_cummerbunds(const Graph& g, Budget* budget) {
  std::uint64_t count = 0;
  if (!for_each_cummerbund(
          g,
          [&](const CycleWitness&) {
            ++count;
            return true;
          },
          budget))
    return std::nullopt;
  return count;
}

std::optional<std::uint64_t> count_detours(const Graph& g, Budget* budget) {
  std::uint64_t count = 0;
  if (!for_each_detour(
          g,
          [&](const PathWitness&) {
            ++count;
            return true;
          },
          budget))
    return std::nullopt;
  return count;
}

// ---- domination and remainder ------------------------------------------------

bool is_dominating(const Graph& g, VertexSet s) {
  if (s & ~g.vertices())
    throw Error(Error::Code::InvalidVertex, "vertex set not within graph");
  LONGCYCLE_FOR_EACH_VERTEX(v, g.vertices() & ~s) {
    if (g.neighbors(v) & ~s) return false;
  }
  return true;
}

RemainderStructure complement_structure_after_cummerbund(const Graph& g,
                                                         const CycleWitness& w) {
  CycleWitness checked = CycleWitness::checked(g, w.vertices);  // validates
  if (checked.length() != circumference(g))
    throw Error(Error::Code::NotACummerbund,
                "cycle witness is not maximum length");
  VertexSet on_cycle = 0;
  for (int v : checked.vertices) on_cycle |= vbit(v);
  const VertexSet rest = g.vertices() & ~on_cycle;
  const int p = set_size(rest);
  int edges = 0;
  LONGCYCLE_FOR_EACH_VERTEX(v, rest) edges += set_size(g.neighbors(v) & rest);
  edges /= 2;
  if (edges == 0) return RemainderStructure::Empty;
  if (edges == p * (p - 1) / 2) return RemainderStructure::Complete;
  return RemainderStructure::Mixed;
}

// ---- profile -------------------------------------------------------------------

std::optional<InvariantProfile> profile(const Graph& g, Budget* budget) {
  InvariantProfile p;
  p.order = g.order();
  p.size = g.size();
  p.kappa = connectivity(g);
  p.girth = girth(g);
  const auto circ = circumference_search(g, budget);
  if (circ.timed_out) return std::nullopt;
  p.circumference = circ.circumference;
  const auto det = detour_search(g, budget);
  if (det.timed_out) return std::nullopt;
  p.detour_order = det.detour_order;
  const auto ccs = cummerbund_cover_set(g, budget);
  if (ccs.timed_out) return std::nullopt;
  p.cc = set_size(ccs.cover);
  const auto dcs = detour_cover_set(g, budget);
  if (dcs.timed_out) return std::nullopt;
  p.dc = set_size(dcs.cover);
  p.detour_covered = p.dc == p.order;
  p.cummerbund_covered = p.order > 0 && p.cc == p.order && p.circumference >= 3;
  p.bipartite = is_bipartite(g).bipartite;
  assert(p.dc >= p.detour_order || g.order() == 0);
  assert(p.circumference < 3 || p.cc >= p.circumference);
  return p;
}

}  // namespace longcycle
