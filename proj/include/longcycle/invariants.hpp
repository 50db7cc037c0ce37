#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

// Node-expansion budget for the exponential searches. cap == 0 means
// unlimited; an exhausted budget makes the operation report a timeout
// instead of returning a possibly wrong value.
struct Budget {
  std::uint64_t cap = 0;
  std::uint64_t used = 0;

  bool spend() { return cap == 0 || ++used <= cap; }
  bool exhausted() const { return cap != 0 && used > cap; }
};

/// Ordered vertex sequence, pairwise distinct, consecutive pairs adjacent.
/// A single vertex is a valid path of length 0.
struct PathWitness {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  static PathWitness checked(const Graph& g, std::vector<int> vertices);
};

/// Cyclic vertex sequence of length >= 3, stored in canonical rotation and
/// reflection (lexicographically least, starting at the smallest vertex),
/// so two witnesses are equal iff they are the same cycle subgraph.
struct CycleWitness {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  /// d_C(x, y): the smaller of the two arc lengths along the cycle.
  int cycle_distance(int x, int y) const;
  static CycleWitness checked(const Graph& g, std::vector<int> vertices);

  bool operator==(const CycleWitness& other) const = default;
};

struct InvariantProfile {
  int order = 0;
  int size = 0;
  int kappa = 0;
  std::optional<int> girth;  // nullopt <=> acyclic
  int circumference = 0;     // 0 for forests
  int detour_order = 0;
  int dc = 0;
  int cc = 0;
  bool detour_covered = false;
  bool cummerbund_covered = false;
  bool bipartite = false;

  bool operator==(const InvariantProfile& other) const = default;
};

// ---- polynomial invariants -------------------------------------------------

/// Vertex connectivity via Menger (unit-capacity flow over nonadjacent
/// pairs). kappa(K_n) = n-1; 0 for disconnected graphs, K_1 and K_0.
int connectivity(const Graph& g);

/// connectivity(g) >= k, computed with early exit.
bool connectivity_at_least(const Graph& g, int k);

bool is_biconnected(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Vertex sets of the biconnected components (on >= 2 vertices), ordered
/// by smallest member.
std::vector<VertexSet> biconnected_components(const Graph& g);

// ---- exact longest path / cycle machinery ----------------------------------
// Branch-and-bound DFS over bitset masks. Pruning: reachable-set upper
// bound on any extension, and closure reachability for cycles. Children
// are explored in ascending label order so witnesses are reproducible.

struct CycleSearchResult {
  int circumference = 0;
  std::optional<CycleWitness> witness;
  bool timed_out = false;
};

struct PathSearchResult {
  int detour_order = 0;
  std::optional<PathWitness> witness;
  bool timed_out = false;
};

CycleSearchResult circumference_search(const Graph& g, Budget* budget = nullptr);
PathSearchResult detour_search(const Graph& g, Budget* budget = nullptr);

int circumference(const Graph& g);
int detour_order(const Graph& g);

struct CoverSetResult {
  VertexSet cover = 0;
  bool timed_out = false;
};

/// {v : some cycle of length circumference(g) passes through v}.
CoverSetResult cummerbund_cover_set(const Graph& g, Budget* budget = nullptr);
/// {v : some path with detour_order(g) vertices passes through v}.
CoverSetResult detour_cover_set(const Graph& g, Budget* budget = nullptr);

int cc(const Graph& g);
int dc(const Graph& g);

bool is_detour_covered(const Graph& g);
/// Requires a cycle: forests are never cummerbund covered.
bool is_cummerbund_covered(const Graph& g);

/// Visits every maximum-length cycle exactly once (distinct edge sets).
/// The callback returns false to stop early. Returns false on timeout.
bool for_each_cummerbund(const Graph& g,
                         const std::function<bool(const CycleWitness&)>& fn,
                         Budget* budget = nullptr);

/// Visits every maximum-length path exactly once (a path equals its
/// reversal). Returns false on timeout.
bool for_each_detour(const Graph& g,
                     const std::function<bool(const PathWitness&)>& fn,
                     Budget* budget = nullptr);

std::optional<std::uint64_t> count_cummerbunds(const Graph& g,
                                               Budget* budget = nullptr);
std::optional<std::uint64_t> count_detours(const Graph& g,
                                           Budget* budget = nullptr);

// ---- domination and remainder structure ------------------------------------

/// The paper's cycle-domination sense: true iff G - S has no edges.
bool is_dominating(const Graph& g, VertexSet s);

enum class RemainderStructure { Empty, Complete, Mixed };

/// Classifies G - V(W) for a cummerbund W (throws NotACummerbund if W is
/// not a maximum-length cycle of g). A null or edgeless remainder counts
/// as Empty; K_1 counts as Empty as well.
RemainderStructure complement_structure_after_cummerbund(const Graph& g,
                                                         const CycleWitness& w);

// ---- bundled profile --------------------------------------------------------

std::optional<InvariantProfile> profile(const Graph& g, Budget* budget = nullptr);

}  // namespace longcycle
