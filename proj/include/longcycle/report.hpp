#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "longcycle/invariants.hpp"

namespace longcycle {

using Json = nlohmann::ordered_json;

enum class Outcome { Pass, Counterexample, Partial };

std::string outcome_name(Outcome o);

struct Counterexample {
  std::string graph6;  // canonical form
  InvariantProfile profile;
  std::string note;

  bool operator<(const Counterexample& other) const {
    return graph6 < other.graph6;
  }
};

/// Outcome of one theorem check. A counterexample payload always
/// re-verifies: decoding the graph6 and recomputing the profile must
/// reproduce the recorded one.
struct CheckReport {
  std::string check_id;
  Json params = Json::object();
  std::uint64_t universe_size = 0;
  Outcome outcome = Outcome::Pass;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // the 20 smallest, sorted
  std::optional<std::uint64_t> seed;
  Json details = Json::object();
  std::int64_t elapsed_ms = 0;
};

Json profile_to_json(const InvariantProfile& p);
InvariantProfile profile_from_json(const Json& j);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// Removes every timing field (elapsed_ms) recursively; used for the
/// determinism comparisons.
Json strip_timing(Json j);

}  // namespace longcycle
