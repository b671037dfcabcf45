#pragma once

#include <cstdint>

namespace oblivis {

/// Per-thread operation counters used to check cost claims.
struct OpCounters {
  std::uint64_t group_exponentiations = 0;
  std::uint64_t group_multiplications = 0;
  std::uint64_t ahe_operations = 0;

  std::uint64_t public_key_operations() const {
    return group_exponentiations + ahe_operations;
  }

  OpCounters operator-(const OpCounters& rhs) const {
    return {group_exponentiations - rhs.group_exponentiations,
            group_multiplications - rhs.group_multiplications,
            ahe_operations - rhs.ahe_operations};
  }
  OpCounters& operator+=(const OpCounters& rhs) {
    group_exponentiations += rhs.group_exponentiations;
    group_multiplications += rhs.group_multiplications;
    ahe_operations += rhs.ahe_operations;
    return *this;
  }
  bool operator==(const OpCounters&) const = default;
};

namespace counters {

OpCounters snapshot();
void reset();

void count_exponentiation();
void count_multiplication();
void count_ahe_operation();

}  // namespace counters

/// Counts operations performed on the current thread during its lifetime.
class CounterScope {
 public:
  CounterScope() : start_(counters::snapshot()) {}
  OpCounters delta() const { return counters::snapshot() - start_; }

 private:
  OpCounters start_;
};

}  // namespace oblivis
