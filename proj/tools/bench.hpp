#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "oblivis/config.hpp"

namespace oblivis::tools {

inline constexpr std::size_t kPhaseCount = 5;

struct BenchOptions {
  std::string protocol = "supersonic";
  /// Invocations per batch.
  std::size_t n = 1;
  std::size_t reps = 50;
  std::size_t warmup = 10;
  std::uint64_t seed = 0;
  SessionConfig config = SessionConfig::test_profile();
  /// Records for the multi-record variants, lanes for the compiled suite.
  std::size_t z = 2;
  /// Splits each batch across this many threads. Timings taken with more
  /// than one thread are for exploration only.
  std::size_t threads = 1;
};

/// Mean wall time per batch, in milliseconds.
struct BenchReport {
  std::string protocol;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::size_t phases_used = 0;
  std::array<double, kPhaseCount> phase_ms{};
  double total_ms = 0;
  std::string environment;

  double phase_sum() const;
};

/// Protocols the benchmark knows how to split into phases.
const std::array<std::string_view, 7>& bench_protocols();

/// Runs `warmup` untimed single invocations, then `reps` timed batches of
/// n invocations, each phase run for the whole batch before the next.
BenchReport run_bench(const BenchOptions& options);

std::string csv_header();
std::string csv_row(const BenchReport& report);

/// Compiler, OS and core count of the running binary.
std::string environment_description();

}  // namespace oblivis::tools
