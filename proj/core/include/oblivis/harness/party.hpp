#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oblivis/counters.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/harness/envelope.hpp"

namespace oblivis::harness {

/// A role's declared output: a message, or a record count for P1 in the
/// multi-record variants.
using RoleOutput = std::variant<Bytes, std::size_t>;

/// Operation counts for one activation of one party.
struct StepMetrics {
  Role role;
  std::optional<Kind> trigger;  // empty for the initial activation
  std::vector<Kind> emitted;
  OpCounters ops;
};

/// Raised inside a party; the scheduler reports it with the role attached.
class SessionError : public Error {
 public:
  SessionError(Role role, std::optional<Kind> phase, const std::string& what);
  Role role() const { return role_; }
  std::optional<Kind> phase() const { return phase_; }

 private:
  Role role_;
  std::optional<Kind> phase_;
};

class Outbox {
 public:
  virtual ~Outbox() = default;
  virtual void send(PartyEnvelope envelope) = 0;
};

/// Base class for protocol roles. A party reacts to envelopes addressed to
/// it and sends only once every input of a step is present, so its
/// behaviour does not depend on arrival order.
class Party {
 public:
  Party(Role role, SessionId session);
  virtual ~Party() = default;

  Role role() const { return role_; }
  void start(Outbox& out);
  void deliver(const PartyEnvelope& envelope, Outbox& out);

  const std::optional<RoleOutput>& output() const { return output_; }
  const std::vector<StepMetrics>& steps() const { return steps_; }
  const std::vector<PartyEnvelope>& received() const { return received_; }

 protected:
  /// Kinds this party accepts and the sender each must come from.
  virtual std::map<Kind, Role> accepts() const = 0;
  virtual void on_start() {}
  virtual void on_progress() = 0;

  /// True when every listed kind has arrived. The stamp of the next emits
  /// is one past the latest of them.
  bool ready(std::initializer_list<Kind> kinds);
  const Bytes& payload(Kind kind) const;
  void emit(Role to, Kind kind, Bytes payload);
  void set_output(RoleOutput value) { output_ = std::move(value); }
  const SessionId& session() const { return session_; }

 private:
  void run_step(std::optional<Kind> trigger, Outbox& out, void (Party::*fn)());

  Role role_;
  SessionId session_;
  std::map<Kind, PartyEnvelope> inbox_;
  std::vector<PartyEnvelope> received_;
  std::vector<StepMetrics> steps_;
  std::optional<RoleOutput> output_;
  std::uint64_t clock_ = 0;
  std::uint8_t sent_ = 0;
  Outbox* out_ = nullptr;
  StepMetrics* current_ = nullptr;
};

}  // namespace oblivis::harness
