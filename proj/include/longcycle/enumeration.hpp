#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "longcycle/canonical.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/recognition.hpp"

namespace longcycle {

/// Declarative filter set defining an enumeration stream. Hereditary
/// filters (bipartite, girth lower bound, induced-free, max edges) prune
/// the augmentation tree; connectivity and degree filters apply at the
/// leaves only.
struct UniverseSpec {
  int n = 1;
  bool connected = false;
  int min_connectivity = 0;
  bool bipartite = false;
  int girth_min = 3;  // 3 = unconstrained
  std::vector<Pattern> induced_free;
  int min_degree = 0;
  int max_edges = -1;  // -1 = unconstrained
};

/// Throws UniverseTooLarge for n > 13, and for n > 11 without a girth >= 6
/// or bipartite filter. A verification run must refuse rather than run
/// unbounded.
void validate_universe(const UniverseSpec& spec);

/// Streams exactly one representative per isomorphism class passing all
/// filters, in a deterministic order. The callback returns false to stop.
void enumerate_universe(const UniverseSpec& spec,
                        const std::function<bool(const Graph&)>& emit);

std::uint64_t count_universe(const UniverseSpec& spec);

/// The slice of the stream whose augmentation subtrees hang off frontier
/// roots with index = shard_index (mod shard_count). Shards are disjoint
/// and their union is the full stream.
void enumerate_shard(const UniverseSpec& spec, int shard_index,
                     int shard_count,
                     const std::function<bool(const Graph&)>& emit);

// Exposed for parallel sweeps: the roots of independent subtrees at a
// small frontier order, plus the per-root completion.
struct EnumerationFrontier {
  int root_order = 0;
  std::vector<Graph> roots;
};

EnumerationFrontier make_frontier(const UniverseSpec& spec);

void complete_from(const UniverseSpec& spec, const Graph& root,
                   const std::function<bool(const Graph&)>& emit);

}  // namespace longcycle
