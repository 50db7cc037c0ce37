#include "longcycle/graph.hpp"

#include <algorithm>
#include <sstream>

namespace longcycle {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(Error::Code::TooManyVertices,
                "graph order must be between 0 and 64, got " +
                    std::to_string(n));
  adj_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Error::Code::InvalidVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for order " + std::to_string(n));
    if (u == v)
      throw Error(Error::Code::SelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= vbit(v);
    g.adj_[v] |= vbit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  const int n = static_cast<int>(adj.size());
  Graph g(n);
  const VertexSet valid = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~valid)
      throw Error(Error::Code::InvalidVertex, "adjacency bit beyond order");
    if (adj[v] & vbit(v))
      throw Error(Error::Code::SelfLoop,
                  "self-loop at vertex " + std::to_string(v));
  }
  for (int v = 0; v < n; ++v)
    LONGCYCLE_FOR_EACH_VERTEX(u, adj[v]) {
      if (!(adj[u] & vbit(v)))
        throw Error(Error::Code::InvalidParameter,
                    "asymmetric adjacency rows");
    }
  g.adj_ = std::move(adj);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += set_size(row);
  return twice / 2;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (VertexSet row : adj_) d = std::min(d, set_size(row));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexSet row : adj_) d = std::max(d, set_size(row));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    LONGCYCLE_FOR_EACH_VERTEX(v, adj_[u] & ~all_vertices(u + 1)) {
      out.emplace_back(u, v);
    }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) { g_ = g; }

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || u >= g_.n_ || v < 0 || v >= g_.n_)
    throw Error(Error::Code::InvalidVertex, "edge endpoint out of range");
  if (u == v) throw Error(Error::Code::SelfLoop, "self-loop");
  g_.adj_[u] |= vbit(v);
  g_.adj_[v] |= vbit(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  g_.adj_[u] &= ~vbit(v);
  g_.adj_[v] &= ~vbit(u);
}

int GraphBuilder::add_vertex() {
  if (g_.n_ >= kMaxVertices)
    throw Error(Error::Code::TooManyVertices, "graph order would exceed 64");
  g_.adj_.push_back(0);
  return g_.n_++;
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order(), m = h.order();
  if (n + m > kMaxVertices)
    throw Error(Error::Code::TooManyVertices, "join order would exceed 64");
  GraphBuilder b(n + m);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) b.add_edge(u, n + v);
  return std::move(b).freeze();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order(), m = h.order();
  if (n + m > kMaxVertices)
    throw Error(Error::Code::TooManyVertices, "union order would exceed 64");
  GraphBuilder b(n + m);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(n + u, n + v);
  return std::move(b).freeze();
}

Graph duplicate_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error(Error::Code::InvalidVertex,
                "no vertex " + std::to_string(v) + " to duplicate");
  GraphBuilder b(g);
  const int clone = b.add_vertex();
  LONGCYCLE_FOR_EACH_VERTEX(u, g.neighbors(v)) b.add_edge(clone, u);
  return std::move(b).freeze();
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_edge(u, v))
    throw Error(Error::Code::NoSuchEdge,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") to subdivide");
  GraphBuilder b(g);
  b.remove_edge(u, v);
  const int w = b.add_vertex();
  b.add_edge(w, u);
  b.add_edge(w, v);
  return std::move(b).freeze();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s & ~g.vertices())
    throw Error(Error::Code::InvalidVertex, "vertex set not within graph");
  std::vector<int> keep;
  LONGCYCLE_FOR_EACH_VERTEX(v, s) keep.push_back(v);
  GraphBuilder b(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return std::move(b).freeze();
}

VertexSet reach_set(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = g.neighbors(start) & allowed;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    LONGCYCLE_FOR_EACH_VERTEX(v, frontier) next |= g.neighbors(v);
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const VertexSet all = g.vertices();
  return (reach_set(g, 0, all) | vbit(0)) == all;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertices();
  while (left) {
    const int v = first_vertex(left);
    const VertexSet comp = reach_set(g, v, left) | vbit(v);
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

BipartitenessWitness is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartitenessWitness w;
  w.coloring.assign(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (w.coloring[root] != -1) continue;
    w.coloring[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      LONGCYCLE_FOR_EACH_VERTEX(v, g.neighbors(u)) {
        if (w.coloring[v] == -1) {
          w.coloring[v] = 1 - w.coloring[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (w.coloring[v] == w.coloring[u]) {
          // Conflict edge closes an odd cycle through the BFS tree.
          std::vector<int> pu{u}, pv{v};
          int a = u, b = v;
          auto depth = [&](int x) {
            int d = 0;
            while (parent[x] != -1) x = parent[x], ++d;
            return d;
          };
          int da = depth(a), db = depth(b);
          while (da > db) pu.push_back(a = parent[a]), --da;
          while (db > da) pv.push_back(b = parent[b]), --db;
          while (a != b) {
            pu.push_back(a = parent[a]);
            pv.push_back(b = parent[b]);
          }
          w.odd_cycle.assign(pu.begin(), pu.end());
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
            w.odd_cycle.push_back(*it);
          w.bipartite = false;
          w.coloring.clear();
          return w;
        }
      }
    }
  }
  w.bipartite = true;
  return w;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list_text(const std::string& text) {
  std::istringstream is(text);
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0)
    throw FormatError("expected header line \"n m\"", 0);
  if (n > kMaxVertices)
    throw Error(Error::Code::TooManyVertices,
                "edge-list order " + std::to_string(n) + " exceeds 64");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(is >> u >> v))
      throw FormatError("expected " + std::to_string(m) + " edge lines",
                        static_cast<size_t>(is.tellg() == -1
                                                ? text.size()
                                                : std::streamoff(is.tellg())));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace longcycle
