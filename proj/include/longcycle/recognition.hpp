#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "longcycle/canonical.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// A small graph (order <= 6) used as an induced-subgraph pattern; the
/// subset search is exhaustive, so larger patterns are rejected.
class Pattern {
 public:
  explicit Pattern(Graph g, std::string name = "");

  const Graph& graph() const { return graph_; }
  const Certificate& certificate() const { return certificate_; }
  const std::string& name() const { return name_; }
  int order() const { return graph_.order(); }
  int size() const { return size_; }

  static const Pattern& P4();
  static const Pattern& C4();
  static const Pattern& TwoK2();
  static const Pattern& Claw();  // K_{1,3}
  /// Lookup by "P4", "C4", "2K2" or "K13".
  static const Pattern& by_name(std::string_view name);

 private:
  Graph graph_;
  Certificate certificate_;
  std::string name_;
  int size_ = 0;
};

/// First (lexicographic) vertex subset inducing a copy of the pattern.
std::optional<VertexSet> find_induced(const Graph& g, const Pattern& h);
/// Same, restricted to subsets containing `v`.
std::optional<VertexSet> find_induced_through(const Graph& g, const Pattern& h,
                                              int v);

bool contains_induced(const Graph& g, const Pattern& h);
bool is_induced_free(const Graph& g, std::span<const Pattern> patterns);

/// Elimination-order threshold recognition: repeatedly removing an
/// isolated or universal vertex empties the graph iff it is a threshold
/// graph. The witness carries the order taken plus a weight function and
/// cutoff realizing the adjacency rule f(u) + f(v) > t.
struct ThresholdWitness {
  bool threshold = false;
  std::vector<std::pair<int, char>> elimination;  // (vertex, 'I' or 'U')
  std::vector<int> weights;
  int cutoff = 0;
};

ThresholdWitness is_threshold(const Graph& g);

bool is_claw_free(const Graph& g);

/// Connected with every degree 2 (and order >= 3).
bool is_cycle_graph(const Graph& g);

struct UniformThetaResult {
  bool uniform_theta = false;
  int a = 0;  // common branch length
  int m = 0;  // number of branches
};

/// Exactly two vertices of degree m >= 3 joined by m internally disjoint
/// paths, all of length a.
UniformThetaResult recognize_uniform_theta(const Graph& g);

}  // namespace longcycle
