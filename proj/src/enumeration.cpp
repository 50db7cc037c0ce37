#include "longcycle/enumeration.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "longcycle/invariants.hpp"

// Isomorph-free exhaustive generation by canonical augmentation. Children
// of a parent P of order k are P plus one vertex attached to a subset S of
// V(P); subsets are taken one per Aut(P)-orbit, and a child G survives iff
// its added vertex lies in the same Aut(G)-orbit as the vertex occupying
// the last canonical position. Exactly one labelled representative per
// isomorphism class survives, with no global seen-set. Hereditary filters
// restrict the tree: every property here is closed under vertex deletion,
// so the construction path of a filtered graph stays inside the filtered
// family.

namespace longcycle {

namespace {

constexpr int kHardCap = 13;
constexpr int kFrontierOrder = 6;
constexpr int kInfiniteDist = 1000;

struct PairwiseConstraints {
  // dist[u][v] in the parent; kInfiniteDist when disconnected.
  std::array<std::array<int, kHardCap>, kHardCap> dist{};

  void compute(const Graph& g) {
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
      for (int v = 0; v < n; ++v) dist[s][v] = kInfiniteDist;
      dist[s][s] = 0;
      VertexSet layer = vbit(s), seen = vbit(s);
      int d = 0;
      while (layer) {
        ++d;
        VertexSet next = 0;
        LONGCYCLE_FOR_EACH_VERTEX(x, layer) next |= g.neighbors(x);
        next &= ~seen;
        LONGCYCLE_FOR_EACH_VERTEX(x, next) dist[s][x] = d;
        seen |= next;
        layer = next;
      }
    }
  }
};

class Augmenter {
 public:
  Augmenter(const UniverseSpec& spec, int target_order,
            const std::function<bool(const Graph&)>& sink, bool apply_final)
      : spec_(spec),
        target_(target_order),
        sink_(sink),
        apply_final_(apply_final) {}

  // True while the stream should continue.
  bool grow(const Graph& g, const CanonicalInfo& info) {
    if (g.order() == target_) return deliver(g);
    const auto subsets = neighborhood_orbit_reps(g, info);
    const int added = g.order();
    for (VertexSet s : subsets) {
      Graph child = extend(g, s);
      if (!hereditary_ok(child)) continue;
      const CanonicalInfo child_info = canonical_info(child);
      int canonical_last = -1;
      for (int v = 0; v <= added; ++v)
        if (child_info.certificate.relabeling[v] == added) {
          canonical_last = v;
          break;
        }
      if (child_info.orbit[canonical_last] != child_info.orbit[added])
        continue;  // not the canonical construction path
      if (!grow(child, child_info)) return false;
    }
    return true;
  }

 private:
  bool deliver(const Graph& g) {
    if (apply_final_) {
      if (spec_.connected && !is_connected(g)) return true;
      if (spec_.min_degree > 0 && g.min_degree() < spec_.min_degree)
        return true;
      if (spec_.min_connectivity > 0 &&
          !connectivity_at_least(g, spec_.min_connectivity))
        return true;
    }
    return sink_(g);
  }

  static Graph extend(const Graph& g, VertexSet s) {
    GraphBuilder b(g);
    const int w = b.add_vertex();
    LONGCYCLE_FOR_EACH_VERTEX(v, s) b.add_edge(w, v);
    return std::move(b).freeze();
  }

  // Induced patterns are checked on the child through the new vertex; the
  // parent is already pattern-free.
  bool hereditary_ok(const Graph& child) const {
    for (const Pattern& p : spec_.induced_free)
      if (find_induced_through(child, p, child.order() - 1)) return false;
    return true;
  }

  // All candidate neighborhoods compatible with the girth and bipartite
  // filters (pairwise conditions on parent distances), one per orbit of
  // the parent's automorphism group, ascending.
  std::vector<VertexSet> neighborhood_orbit_reps(const Graph& g,
                                                 const CanonicalInfo& info) {
    const int n = g.order();
    std::array<VertexSet, kHardCap> compat;
    PairwiseConstraints pc;
    const bool girth_filter = spec_.girth_min >= 4;
    const bool pairwise = girth_filter || spec_.bipartite;
    if (pairwise) {
      pc.compute(g);
      for (int u = 0; u < n; ++u) {
        VertexSet row = 0;
        for (int v = 0; v < n; ++v) {
          if (v == u) continue;
          const int d = pc.dist[u][v];
          bool ok = true;
          if (girth_filter && d + 2 < spec_.girth_min) ok = false;
          if (spec_.bipartite && d != kInfiniteDist && d % 2 == 1) ok = false;
          if (ok) row |= vbit(v);
        }
        compat[u] = row;
      }
    } else {
      for (int u = 0; u < n; ++u) compat[u] = g.vertices() & ~vbit(u);
    }
    int size_cap = n;
    if (spec_.max_edges >= 0)
      size_cap = std::min(size_cap, spec_.max_edges - g.size());
    if (size_cap < 0) return {};

    std::vector<VertexSet> candidates;
    candidates.reserve(64);
    // Subsets whose members are pairwise compatible, grown ascending.
    auto rec = [&](auto&& self, VertexSet mask, VertexSet pool,
                   int count) -> void {
      candidates.push_back(mask);
      if (count == size_cap) return;
      LONGCYCLE_FOR_EACH_VERTEX(v, pool) {
        self(self, mask | vbit(v), pool & compat[v] & ~all_vertices(v + 1),
             count + 1);
      }
    };
    rec(rec, 0, g.vertices(), 0);
    std::sort(candidates.begin(), candidates.end());

    if (info.generators.empty()) return candidates;

    std::vector<VertexSet> reps;
    reps.reserve(candidates.size());
    std::unordered_set<VertexSet> seen;
    seen.reserve(candidates.size() * 2);
    std::vector<VertexSet> queue;
    for (VertexSet mask : candidates) {
      if (seen.count(mask)) continue;
      reps.push_back(mask);
      queue.assign(1, mask);
      seen.insert(mask);
      while (!queue.empty()) {
        const VertexSet m = queue.back();
        queue.pop_back();
        for (const auto& gen : info.generators) {
          VertexSet image = 0;
          LONGCYCLE_FOR_EACH_VERTEX(v, m) image |= vbit(gen[v]);
          if (seen.insert(image).second) queue.push_back(image);
        }
      }
    }
    return reps;
  }

  const UniverseSpec& spec_;
  int target_;
  const std::function<bool(const Graph&)>& sink_;
  bool apply_final_;
};

bool seed_ok(const UniverseSpec& spec) {
  const Graph k1 = Graph::empty(1);
  for (const Pattern& p : spec.induced_free)
    if (p.order() <= 1 && contains_induced(k1, p)) return false;
  return true;
}

}  // namespace

void validate_universe(const UniverseSpec& spec) {
  if (spec.n < 1 || spec.n > kHardCap)
    throw Error(Error::Code::UniverseTooLarge,
                "enumeration supports 1 <= n <= 13, got " +
                    std::to_string(spec.n));
  if (spec.n > 11 && spec.girth_min < 6 && !spec.bipartite)
    throw Error(Error::Code::UniverseTooLarge,
                "orders above 11 need a girth >= 6 or bipartite filter");
}

void enumerate_universe(const UniverseSpec& spec,
                        const std::function<bool(const Graph&)>& emit) {
  validate_universe(spec);
  if (!seed_ok(spec)) return;
  Augmenter aug(spec, spec.n, emit, /*apply_final=*/true);
  const Graph k1 = Graph::empty(1);
  aug.grow(k1, canonical_info(k1));
}

std::uint64_t count_universe(const UniverseSpec& spec) {
  std::uint64_t count = 0;
  enumerate_universe(spec, [&](const Graph&) {
    ++count;
    return true;
  });
  return count;
}

EnumerationFrontier make_frontier(const UniverseSpec& spec) {
  validate_universe(spec);
  EnumerationFrontier frontier;
  frontier.root_order = std::min(spec.n, kFrontierOrder);
  if (!seed_ok(spec)) return frontier;
  Augmenter aug(
      spec, frontier.root_order,
      [&](const Graph& g) {
        frontier.roots.push_back(g);
        return true;
      },
      /*apply_final=*/false);
  const Graph k1 = Graph::empty(1);
  aug.grow(k1, canonical_info(k1));
  return frontier;
}

void complete_from(const UniverseSpec& spec, const Graph& root,
                   const std::function<bool(const Graph&)>& emit) {
  Augmenter aug(spec, spec.n, emit, /*apply_final=*/true);
  aug.grow(root, canonical_info(root));
}

void enumerate_shard(const UniverseSpec& spec, int shard_index,
                     int shard_count,
                     const std::function<bool(const Graph&)>& emit) {
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw Error(Error::Code::InvalidParameter,
                "shard index must satisfy 0 <= i < m");
  const auto frontier = make_frontier(spec);
  for (size_t i = 0; i < frontier.roots.size(); ++i) {
    if (static_cast<int>(i % static_cast<size_t>(shard_count)) != shard_index)
      continue;
    bool keep_going = true;
    complete_from(spec, frontier.roots[i], [&](const Graph& g) {
      keep_going = emit(g);
      return keep_going;
    });
    if (!keep_going) return;
  }
}

}  // namespace longcycle
