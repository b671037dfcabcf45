#include "oblivis/harness/party.hpp"

#include <algorithm>
#include <string>

namespace oblivis::harness {

namespace {
std::string describe(Role role, std::optional<Kind> phase, const std::string& what) {
  std::string out = "party ";
  out += role_name(role);
  if (phase) {
    out += " handling ";
    out += kind_name(*phase);
  } else {
    out += " at start";
  }
  out += ": " + what;
  return out;
}
}  // namespace

SessionError::SessionError(Role role, std::optional<Kind> phase, const std::string& what)
    : Error(describe(role, phase, what)), role_(role), phase_(phase) {}

Party::Party(Role role, SessionId session) : role_(role), session_(session) {}

void Party::run_step(std::optional<Kind> trigger, Outbox& out, void (Party::*fn)()) {
  steps_.push_back(StepMetrics{role_, trigger, {}, {}});
  current_ = &steps_.back();
  out_ = &out;
  const CounterScope scope;
  try {
    (this->*fn)();
  } catch (const SessionError&) {
    throw;
  } catch (const std::exception& e) {
    out_ = nullptr;
    current_ = nullptr;
    throw SessionError(role_, trigger, e.what());
  }
  steps_.back().ops = scope.delta();
  out_ = nullptr;
  current_ = nullptr;
}

void Party::start(Outbox& out) { run_step(std::nullopt, out, &Party::on_start); }

void Party::deliver(const PartyEnvelope& envelope, Outbox& out) {
  if (envelope.to != role_) {
    throw SessionError(role_, envelope.kind, "envelope addressed to another role");
  }
  if (envelope.session != session_) {
    throw SessionError(role_, envelope.kind, "envelope from another session");
  }
  const auto allowed = accepts();
  const auto it = allowed.find(envelope.kind);
  if (it == allowed.end() || it->second != envelope.from) {
    throw SessionError(role_, envelope.kind,
                       "unexpected envelope from " + std::string(role_name(envelope.from)));
  }
  if (inbox_.count(envelope.kind) != 0) {
    throw SessionError(role_, envelope.kind, "duplicate envelope");
  }
  inbox_.emplace(envelope.kind, envelope);
  received_.push_back(envelope);
  run_step(envelope.kind, out, &Party::on_progress);
}

bool Party::ready(std::initializer_list<Kind> kinds) {
  std::uint64_t latest = 0;
  for (Kind k : kinds) {
    const auto it = inbox_.find(k);
    if (it == inbox_.end()) return false;
    latest = std::max(latest, it->second.stamp());
  }
  clock_ = std::max(clock_, latest);
  return true;
}

const Bytes& Party::payload(Kind kind) const {
  const auto it = inbox_.find(kind);
  if (it == inbox_.end()) throw PreconditionError("payload requested before arrival");
  return it->second.payload;
}

void Party::emit(Role to, Kind kind, Bytes payload) {
  if (out_ == nullptr) throw PreconditionError("emit outside an activation");
  if (sent_ == 0xff) throw PreconditionError("too many envelopes from one party");
  PartyEnvelope env;
  env.session = session_;
  env.from = role_;
  env.to = to;
  env.kind = kind;
  env.seq = make_seq(clock_ + 1, role_, sent_++);
  env.payload = std::move(payload);
  if (current_ != nullptr) current_->emitted.push_back(kind);
  out_->send(std::move(env));
}

}  // namespace oblivis::harness
