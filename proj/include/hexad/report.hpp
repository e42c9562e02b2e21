#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace hexad {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, NotExactConfirmed, NoCounterexample };

/// "PASS", "FAIL", "NOT-EXACT-CONFIRMED", "NO-COUNTEREXAMPLE-AT-THIS-DEGREE"
std::string_view status_name(Status s);

/// Outcome of one verification check. A failing report always carries the
/// first counterexample found, serialized so it can be re-evaluated.
struct CheckReport {
  std::string name;
  Status status = Status::Pass;
  std::size_t witness_count = 0;
  std::uint64_t seed = 0;
  std::optional<Json> counterexample;
  Json details = Json::object();

  CheckReport() = default;
  CheckReport(std::string check_name, std::uint64_t check_seed) : name(std::move(check_name)), seed(check_seed) {}

  bool failed() const noexcept { return status == Status::Fail; }
  void witness(std::size_t n = 1) { witness_count += n; }

  /// Marks the check failed; only the first counterexample is kept.
  void fail(std::string_view what, Json payload = Json::object());

  /// Records a boolean sub-check; returns `ok`.
  bool expect(bool ok, std::string_view what, Json payload = Json::object()) {
    if (!ok) fail(what, std::move(payload));
    return ok;
  }
};

Json to_json(const CheckReport& r);

}  // namespace hexad
