#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace longcycle {

// Hard cap of the engine: every universe handled here fits in one
// machine word per adjacency row.
inline constexpr int kMaxVertices = 64;

// A set of vertices, bit v <=> vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Iterates v over the set bits of `set`, ascending.
#define LONGCYCLE_FOR_EACH_VERTEX(v, set)                                  \
  for (::longcycle::VertexSet lc_iter_ = (set); lc_iter_ != 0;             \
       lc_iter_ &= lc_iter_ - 1)                                           \
    if (const int v = ::longcycle::first_vertex(lc_iter_); true)

class Error : public std::runtime_error {
 public:
  enum class Code {
    InvalidVertex,
    SelfLoop,
    NoSuchEdge,
    InvalidParameter,
    NotSimple,
    FormatError,
    PatternTooLarge,
    NotACummerbund,
    UniverseTooLarge,
    TooManyVertices,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// Parse/decode failure; remembers where in the input it happened.
class FormatError : public Error {
 public:
  FormatError(const std::string& message, std::size_t byte_offset)
      : Error(Code::FormatError,
              message + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Immutable simple graph on labels 0..n-1 with bitset adjacency rows.
/// Symmetric, irreflexive; the null graph (n = 0) is a valid value.
class Graph {
 public:
  Graph() = default;  // null graph

  static Graph empty(int n) { return Graph(n); }

  static Graph from_edge_list(int n,
                              std::span<const std::pair<int, int>> edges);

  // Adjacency rows given directly; validated (symmetry, irreflexivity,
  // no bits >= n).
  static Graph from_adjacency(std::vector<VertexSet> adj);

  int order() const { return n_; }
  int size() const;

  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

  int degree(int v) const { return set_size(adj_[v]); }
  int min_degree() const;  // 0 for the null graph
  int max_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;  // labelled equality

 private:
  explicit Graph(int n);
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Mutable staging area; freeze() validates nothing (edges added through
// add_edge are kept symmetric and loop-free by construction).
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  // Appends an isolated vertex and returns its label.
  int add_vertex();

  Graph freeze() && { return std::move(g_); }

 private:
  Graph g_;
};

// ---- combinators ----------------------------------------------------------

/// G ∨ H: disjoint union plus all cross edges. G keeps labels 0..|G|-1.
Graph join(const Graph& g, const Graph& h);

/// G + H: disjoint union, H relabelled to |G|..|G|+|H|-1.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Adds a clone v' with N(v') = N(v); v' and v end up nonadjacent.
Graph duplicate_vertex(const Graph& g, int v);

/// Removes edge uv and adds a new vertex adjacent to exactly u and v.
Graph subdivide_edge(const Graph& g, int u, int v);

/// Subgraph induced by `s`, relabelled by increasing original label.
Graph induced_subgraph(const Graph& g, VertexSet s);

// ---- basic predicates -----------------------------------------------------

bool is_connected(const Graph& g);  // false for the null graph

// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Vertices reachable from `start` by walking inside `allowed` (start itself
// is not required to be in `allowed` and is not included in the result).
VertexSet reach_set(const Graph& g, int start, VertexSet allowed);

struct BipartitenessWitness {
  bool bipartite = false;
  std::vector<int> coloring;   // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // odd cycle vertex sequence otherwise
};

BipartitenessWitness is_bipartite(const Graph& g);

// ---- edge-list text interchange ------------------------------------------
// First line "n m", then m lines "u v" (0-based).

std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

}  // namespace longcycle
