#pragma once

#include <optional>
#include <string>
#include <vector>

#include "longcycle/enumeration.hpp"
#include "longcycle/families.hpp"
#include "longcycle/report.hpp"

namespace longcycle {

struct CheckOptions {
  int threads = 1;
  int shards = 1;       // frontier partition count
  int only_shard = -1;  // when >= 0, process just that shard slice
  std::string tier = "gating";
  std::optional<int> n;
  std::optional<int> k;
  std::uint64_t seed = 0x10e55eedull;
  std::uint64_t budget = 0;  // per-graph node cap / randomized iterations
};

// Minimum-degree coverage guarantees and their sharpness families.
CheckReport check_t3(const CheckOptions& opt = {});
CheckReport check_t5(const CheckOptions& opt = {});

// Exact minima of the covering numbers over k-connected universes, plus
// certification of the extremal constructions (n <= 16, k <= 4).
CheckReport check_t7(const CheckOptions& opt = {});
CheckReport check_t8(const CheckOptions& opt = {});

// Forbidden-induced-subgraph coverage guarantees, threshold graphs, and
// the single-pattern sharpness family.
CheckReport check_t10_t12_c13(const CheckOptions& opt = {});

// Minimum cummerbund covering number of 2-connected bipartite graphs and
// the exact equality class of seven graphs.
CheckReport check_t14(const CheckOptions& opt = {});

// girth = circumference iff cycle or uniform theta, both directions.
CheckReport check_l15(const CheckOptions& opt = {});

// Exact minima under girth conditions; part is g4, g5, g6even or g6odd.
CheckReport check_t16(const std::string& part, const CheckOptions& opt = {});

// Dominating-cummerbund / dominating-detour lemmas quantified over every
// maximum cycle and path, plus the join duality suite.
CheckReport check_lemma_suite(const CheckOptions& opt = {});

/// Required flags and values over InvariantProfile fields; unset fields
/// are unconstrained.
struct WitnessProfile {
  std::string name;
  int order = 7;
  bool exhaustive = true;
  std::optional<int> min_connectivity;
  std::optional<bool> detour_covered;
  std::optional<bool> cummerbund_covered;
  std::optional<int> circumference;
  std::optional<int> detour_order;
  std::optional<int> dc;
  std::optional<int> cc;
  std::vector<std::string> induced_free;  // pattern names
};

WitnessProfile witness_profile_a();  // order 7, traceable, c = 6
WitnessProfile witness_profile_b();  // order 12, covered cycles, dc < n
WitnessProfile witness_profile_c();  // order 12, {2K2, C4}-free

/// Exhaustive mode finds all matching certificates (order <= 9 only);
/// randomized mode runs a seeded edge-flip local search under the given
/// budget and reports partial when it runs out.
CheckReport witness_search(const WitnessProfile& profile,
                           const CheckOptions& opt = {});

bool profile_matches(const InvariantProfile& p, const Graph& g,
                     const WitnessProfile& profile);

CheckReport run_check(const std::string& id, const CheckOptions& opt = {});
std::vector<std::string> gating_check_ids();

}  // namespace longcycle
