#include "longcycle/report.hpp"

namespace longcycle {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Counterexample:
      return "counterexample";
    case Outcome::Partial:
      return "partial";
  }
  return "?";
}

Json profile_to_json(const InvariantProfile& p) {
  Json j = Json::object();
  j["order"] = p.order;
  j["size"] = p.size;
  j["kappa"] = p.kappa;
  if (p.girth)
    j["girth"] = *p.girth;
  else
    j["girth"] = nullptr;
  j["circumference"] = p.circumference;
  j["detour_order"] = p.detour_order;
  j["dc"] = p.dc;
  j["cc"] = p.cc;
  j["detour_covered"] = p.detour_covered;
  j["cummerbund_covered"] = p.cummerbund_covered;
  j["bipartite"] = p.bipartite;
  return j;
}

InvariantProfile profile_from_json(const Json& j) {
  InvariantProfile p;
  p.order = j.at("order").get<int>();
  p.size = j.at("size").get<int>();
  p.kappa = j.at("kappa").get<int>();
  if (!j.at("girth").is_null()) p.girth = j.at("girth").get<int>();
  p.circumference = j.at("circumference").get<int>();
  p.detour_order = j.at("detour_order").get<int>();
  p.dc = j.at("dc").get<int>();
  p.cc = j.at("cc").get<int>();
  p.detour_covered = j.at("detour_covered").get<bool>();
  p.cummerbund_covered = j.at("cummerbund_covered").get<bool>();
  p.bipartite = j.at("bipartite").get<bool>();
  return p;
}

Json report_to_json(const CheckReport& r) {
  Json j = Json::object();
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["universe_size"] = r.universe_size;
  j["outcome"] = outcome_name(r.outcome);
  j["counterexample_count"] = r.counterexample_count;
  Json list = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json e = Json::object();
    e["graph6"] = ce.graph6;
    e["profile"] = profile_to_json(ce.profile);
    if (!ce.note.empty()) e["note"] = ce.note;
    list.push_back(e);
  }
  j["counterexamples"] = list;
  if (r.seed) j["seed"] = *r.seed;
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.params = j.at("params");
  r.universe_size = j.at("universe_size").get<std::uint64_t>();
  const std::string oc = j.at("outcome").get<std::string>();
  r.outcome = oc == "pass"            ? Outcome::Pass
              : oc == "counterexample" ? Outcome::Counterexample
                                       : Outcome::Partial;
  r.counterexample_count = j.at("counterexample_count").get<std::uint64_t>();
  for (const auto& e : j.at("counterexamples")) {
    Counterexample ce;
    ce.graph6 = e.at("graph6").get<std::string>();
    ce.profile = profile_from_json(e.at("profile"));
    if (e.contains("note")) ce.note = e.at("note").get<std::string>();
    r.counterexamples.push_back(ce);
  }
  if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
  r.details = j.at("details");
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto& [key, value] : j.items()) {
      if (key == "elapsed_ms") continue;
      out[key] = strip_timing(value);
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (auto& value : j) out.push_back(strip_timing(value));
    return out;
  }
  return j;
}

}  // namespace longcycle
