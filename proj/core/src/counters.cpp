#include "oblivis/counters.hpp"

namespace oblivis::counters {

namespace {
thread_local OpCounters tl_counters;
}

OpCounters snapshot() { return tl_counters; }
void reset() { tl_counters = {}; }
void count_exponentiation() { ++tl_counters.group_exponentiations; }
void count_multiplication() { ++tl_counters.group_multiplications; }
void count_ahe_operation() { ++tl_counters.ahe_operations; }

}  // namespace oblivis::counters
