#include "hexad/report.hpp"

namespace hexad {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotExactConfirmed: return "NOT-EXACT-CONFIRMED";
    case Status::NoCounterexample: return "NO-COUNTEREXAMPLE-AT-THIS-DEGREE";
  }
  return "?";
}

void CheckReport::fail(std::string_view what, Json payload) {
  status = Status::Fail;
  if (counterexample) return;
  Json c = Json::object();
  c["violation"] = std::string(what);
  for (auto& [k, v] : payload.items()) c[k] = v;
  counterexample = std::move(c);
}

Json to_json(const CheckReport& r) {
  Json j = Json::object();
  j["name"] = r.name;
  j["status"] = std::string(status_name(r.status));
  j["witness_count"] = r.witness_count;
  j["seed"] = r.seed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace hexad
