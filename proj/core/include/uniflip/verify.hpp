#pragma once

#include <optional>
#include <string>

#include "uniflip/stabilizer.hpp"

namespace uniflip {

enum class CheckStatus { Pass, Fail, Skipped };

const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  int64_t elapsed_ms = 0;
};

enum class Suite { All, Field, Building, Geometry, Groups, Transitivity };

const char* suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& s);

struct VerificationReport {
  int n = 0;
  int64_t q = 0;
  Suite suite = Suite::All;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  uint64_t count(CheckStatus s) const;
  bool all_ok() const { return count(CheckStatus::Fail) == 0; }
};

/// Run the named suite at (n, q).  Checks whose enumerations exceed the
/// guard report Skipped rather than failing; any other thrown error turns
/// into a Fail with the message as detail.
VerificationReport run_verification(int n, int64_t q, Suite suite, uint64_t seed,
                                    const EnumerationGuard& guard = {});

}  // namespace uniflip
