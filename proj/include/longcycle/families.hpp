#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/invariants.hpp"

namespace longcycle {

// ---- basic graphs -----------------------------------------------------------

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);
Graph matching_graph(int q);  // qK_2
Graph empty_graph(int n);

// ---- named constructions ----------------------------------------------------

/// kK_1 v (qK_2 + mK_1). Labels: the k universal vertices first, then the
/// q matching pairs, then the m isolated-side vertices.
Graph mixed_join(int k, int q, int m);

/// Minimum-degree sharpness family for cummerbund coverage (n >= 9):
/// delta = ceil(n/3) - 1, 2-connected, not cummerbund covered.
Graph remark1_family(int n);

/// Minimum-degree sharpness family for detour coverage (n >= 6):
/// delta = ceil((n-2)/3) - 1, connected, not detour covered.
Graph remark3_family(int n);

/// K_2 v (aK_1 + bK_2), a >= 1, b >= 3: induced-{P4, C4}-free yet neither
/// detour nor cummerbund covered.
Graph remark4_family(int a, int b);

/// Two hubs (labels 0 and 1) joined by internally disjoint paths of the
/// given lengths; branch vertices appended branch by branch.
Graph theta_graph(std::span<const int> lengths);

/// theta(a^m); all cycles have length 2a.
Graph uniform_theta(int a, int m);

// Extremal families for the girth-conditioned minimum covering numbers.
Graph thm16_girth4(int n);       // theta(3^2, 2^(n-6)), n >= 8
Graph thm16_girth5_even(int n);  // chord-and-subdivide construction, even n >= 10
Graph thm16_girth5_odd(int n);   // theta(4^2, 3^((n-9)/2), 2), odd n >= 11
Graph thm16_girth6_even(int n);  // theta(4^2, 3^((n-8)/2)), even n >= 12
Graph thm16_girth6_odd(int n);   // theta(5, 4, 3^((n-9)/2)), odd n >= 13

/// G_{i,n}, 1 <= i <= 7, n >= 9: an 8-cycle (labels 0..7) with one of seven
/// 3-chord sets, plus n-8 pairwise nonadjacent vertices each adjacent to
/// exactly {0, 4}. The seven graphs at n = 9 are exactly the 2-connected
/// bipartite graphs of order 9 with cummerbund covering number 8.
Graph bipartite_family(int i, int n);

/// Dispatch by family id for the CLI: "K", "C", "P", "qK2", "empty",
/// "mixed_join", "remark1", "remark3", "remark4", "theta", "uniform_theta",
/// "thm16_girth4", "thm16_girth5_even", ..., "bipartite".
Graph make_family(const std::string& id, std::span<const int> params);
std::vector<std::string> family_ids();

// ---- claimed profiles and certification --------------------------------------

/// Fields a construction is documented to have; unclaimed fields stay null.
struct ClaimedProfile {
  std::optional<int> order, size, kappa, kappa_min, girth, circumference,
      detour_order, dc, cc, min_degree;
  std::optional<bool> detour_covered, cummerbund_covered, bipartite;
  std::vector<std::string> induced_free;  // pattern names, e.g. "P4"
};

struct FamilySpec {
  std::string id;
  std::vector<int> params;
  Graph graph;
  ClaimedProfile claims;
};

FamilySpec t7_extremal_spec(int k, int n);   // k >= 2, n >= k+1
FamilySpec t8_extremal_spec(int k, int n);   // k >= 1, n >= k+1
FamilySpec remark1_spec(int n);
FamilySpec remark3_spec(int n);
FamilySpec remark4_spec(int a, int b);
FamilySpec t16_extremal_spec(const std::string& part, int n);  // g4|g5|g6
FamilySpec bipartite_family_spec(int i, int n);
FamilySpec uniform_theta_spec(int a, int m);

/// Recomputes the profile and checks every claimed field; returns a
/// human-readable description of the first mismatch, or nullopt if the
/// construction certifies.
std::optional<std::string> certify(const FamilySpec& spec);

}  // namespace longcycle
