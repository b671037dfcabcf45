#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "oblivis/errors.hpp"
#include "oblivis/harness/envelope.hpp"

namespace oblivis::harness {

/// Thrown when a log shows traffic a protocol must not produce.
class ConformanceError : public Error {
 public:
  using Error::Error;
};

/// Append-only record of every envelope routed in a session. Entries are
/// kept in seq order, which does not depend on thread scheduling.
class RoutingLog {
 public:
  RoutingLog() = default;
  RoutingLog(const RoutingLog& other);
  RoutingLog& operator=(const RoutingLog& other);

  void append(PartyEnvelope envelope);
  std::vector<PartyEnvelope> entries() const;
  std::size_t size() const;

  /// One JSON object per line with the payload in hex.
  std::string export_ndjson() const;

  std::vector<PartyEnvelope> between(Role from, Role to) const;
  std::vector<PartyEnvelope> of_kind(Kind kind) const;

 private:
  mutable std::mutex mu_;
  std::vector<PartyEnvelope> entries_;
};

/// Header plus payload bytes of every envelope addressed to `role`.
std::size_t bytes_to_role(const RoutingLog& log, Role role);

/// Throws ConformanceError if R ever sent anything to S.
void assert_sender_push(const RoutingLog& log);

}  // namespace oblivis::harness
