#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hw/field.hpp"

namespace hw {

struct VerifyConfig {
  Field field = Field::f2_rational();
  std::string u_expr = "u";
  int degree = 6;
  int trials = 20;
  std::uint64_t seed = 0;
  bool timings = false;

  /// Evaluates u_expr and insists that u and 1+u are units.
  FieldElem u() const;
};

struct CheckResult {
  std::string id;
  std::string paper_ref;  // where the verified statement lives
  std::string status;     // pass | fail | skipped
  std::string witness;
  std::int64_t ms = 0;
};

struct CheckDef {
  std::string id;
  std::string provenance;
  /// Returns (ok, witness text); thrown errors become failures.
  std::function<std::pair<bool, std::string>(const VerifyConfig&)> run;
};

const std::vector<CheckDef>& check_registry();
std::vector<std::string> check_ids();

struct Report {
  VerifyConfig config;
  std::vector<CheckResult> checks;  // sorted by id
  bool all_passed() const;          // ignores skipped entries
};

/// selector: a check id, "all", or "" (empty report).
Report run_checks(const std::string& selector, const VerifyConfig& config);

/// Byte-stable for fixed config (ms fields emit 0 unless timings is set).
std::string report_json(const Report& report);
/// Fixed-width table with measured timings.
std::string report_text(const Report& report);

}  // namespace hw
