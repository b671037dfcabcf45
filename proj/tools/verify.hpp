#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oblivis/config.hpp"

namespace oblivis::tools {

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  SessionConfig config = SessionConfig::test_profile();
  /// Flips the sign bit used for the DQ retrieval exponent, so the dq
  /// suite should report failures.
  bool mutate_dq_sign = false;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suite names accepted by run_verify, plus "all".
const std::vector<std::string_view>& verify_suites();

/// Throws PreconditionError for an unknown suite.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace oblivis::tools
