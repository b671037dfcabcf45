#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "oblivis/config.hpp"
#include "oblivis/group.hpp"
#include "oblivis/harness/envelope.hpp"
#include "oblivis/harness/party.hpp"
#include "oblivis/harness/routing_log.hpp"
#include "oblivis/supersonic.hpp"

namespace oblivis::harness {

enum class Protocol {
  naor_pinkas,
  one_of_n,
  compiled,
  dq,
  duq,
  dqmr,
  duqmr,
  supersonic,
  /// Negative fixture: S sends all z pairs straight to R.
  strawman_broadcast,
  /// Negative fixture: R tells S the record index.
  strawman_index,
};

std::string_view protocol_name(Protocol protocol);
/// Throws PreconditionError for an unknown name.
Protocol protocol_from_name(std::string_view name);

/// Roles taking part in a protocol.
std::vector<Role> protocol_roles(Protocol protocol);

/// A role's private input; empty fields mean the role has no such input.
struct RoleInput {
  std::vector<Bytes> messages;
  std::vector<std::pair<Bytes, Bytes>> matrix;
  std::optional<std::size_t> choice;
  std::optional<std::size_t> record;
  std::optional<std::size_t> record_count;

  bool empty() const {
    return messages.empty() && matrix.empty() && !choice && !record && !record_count;
  }
};

using SessionInputs = std::map<Role, RoleInput>;

/// Builds inputs in the shape each protocol expects.
namespace inputs {
SessionInputs two_party(const Bytes& m0, const Bytes& m1, bool s);
SessionInputs one_of_n(const std::vector<Bytes>& messages, std::size_t s);
SessionInputs issuer(const Bytes& m0, const Bytes& m1, bool s);
SessionInputs dq_multi(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s);
SessionInputs duq_multi(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s);
SessionInputs strawman(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s);
SessionInputs for_protocol(Protocol protocol, const std::vector<std::pair<Bytes, Bytes>>& matrix,
                           std::size_t v, std::size_t s);
}  // namespace inputs

/// Throws PreconditionError unless the inputs match the protocol's
/// per-role input shape.
void validate_inputs(Protocol protocol, const SessionInputs& inputs);

enum class SchedulerKind {
  /// One thread, FIFO delivery.
  sequential,
  /// One thread per party with blocking inboxes.
  threaded,
  /// One thread per party, each talking to a router over a stream socket.
  socket,
};

struct SessionOptions {
  SessionConfig config = SessionConfig::test_profile();
  Bytes seed = seed_bytes(0);
  SchedulerKind scheduler = SchedulerKind::sequential;
  /// Skips group generation in S.Init when set.
  std::optional<GroupParams> group;
  /// Overrides the seed-derived session id.
  std::optional<SessionId> session_id;
  /// Shared across sessions to reject replayed session ids.
  SessionRegistry* registry = nullptr;
};

struct SessionResult {
  SessionId session{};
  std::map<Role, RoleOutput> outputs;
  RoutingLog log;
  std::vector<StepMetrics> steps;
  std::map<Role, std::vector<PartyEnvelope>> deliveries;

  const Bytes& message_output(Role role) const;
  std::size_t count_output(Role role) const;
};

/// Runs one session. Throws SessionError naming the role that failed.
SessionResult run_session(Protocol protocol, const SessionInputs& inputs,
                          const SessionOptions& options);

/// Session id derived from the master seed.
SessionId derive_session_id(BytesView seed);

}  // namespace oblivis::harness
