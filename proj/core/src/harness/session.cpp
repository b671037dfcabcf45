#include "oblivis/harness/session.hpp"

#include <algorithm>
#include <array>

#include "oblivis/hash.hpp"
#include "protocols.hpp"
#include "schedulers.hpp"

namespace oblivis::harness {

namespace {

constexpr std::array<std::pair<Protocol, std::string_view>, 10> kProtocolNames{{
    {Protocol::naor_pinkas, "naor-pinkas"},
    {Protocol::one_of_n, "one-of-n"},
    {Protocol::compiled, "compiled"},
    {Protocol::dq, "dq"},
    {Protocol::duq, "duq"},
    {Protocol::dqmr, "dqmr"},
    {Protocol::duqmr, "duqmr"},
    {Protocol::supersonic, "supersonic"},
    {Protocol::strawman_broadcast, "strawman-broadcast"},
    {Protocol::strawman_index, "strawman-index"},
}};

/// The fields each role must provide; anything else must be empty.
struct Shape {
  bool pair = false;
  bool list = false;
  bool matrix = false;
  bool choice = false;
  bool record = false;
  bool record_count = false;
};

std::map<Role, Shape> shapes(Protocol protocol) {
  switch (protocol) {
    case Protocol::naor_pinkas:
    case Protocol::dq:
    case Protocol::supersonic: {
      std::map<Role, Shape> out{{Role::S, {.pair = true}}, {Role::R, {.choice = true}}};
      if (protocol == Protocol::dq) out[Role::P1] = out[Role::P2] = {};
      if (protocol == Protocol::supersonic) out[Role::P] = {};
      return out;
    }
    case Protocol::one_of_n:
    case Protocol::compiled:
      return {{Role::S, {.list = true}}, {Role::R, {.choice = true}}};
    case Protocol::duq:
      return {{Role::S, {.pair = true}}, {Role::T, {.choice = true}}, {Role::R, {}},
              {Role::P1, {}}, {Role::P2, {}}};
    case Protocol::dqmr:
      return {{Role::S, {.matrix = true}}, {Role::R, {.choice = true}},
              {Role::P1, {.record = true}}, {Role::P2, {}}};
    case Protocol::duqmr:
      return {{Role::S, {.matrix = true}},
              {Role::T, {.choice = true, .record = true, .record_count = true}},
              {Role::R, {}}, {Role::P1, {}}, {Role::P2, {}}};
    case Protocol::strawman_broadcast:
    case Protocol::strawman_index:
      return {{Role::S, {.matrix = true}}, {Role::R, {.choice = true, .record = true}}};
  }
  return {};
}

[[noreturn]] void reject(Role role, const std::string& what) {
  throw PreconditionError("input of " + std::string(role_name(role)) + ": " + what);
}

void check_field(Role role, bool expected, bool present, const char* name) {
  if (expected && !present) reject(role, std::string("missing ") + name);
  if (!expected && present) reject(role, std::string("unexpected ") + name);
}

}  // namespace

std::string_view protocol_name(Protocol protocol) {
  for (const auto& [p, name] : kProtocolNames) {
    if (p == protocol) return name;
  }
  return "?";
}

Protocol protocol_from_name(std::string_view name) {
  for (const auto& [p, n] : kProtocolNames) {
    if (n == name) return p;
  }
  throw PreconditionError("unknown protocol '" + std::string(name) + "'");
}

std::vector<Role> protocol_roles(Protocol protocol) {
  std::vector<Role> out;
  for (const auto& [role, shape] : shapes(protocol)) out.push_back(role);
  return out;
}

void validate_inputs(Protocol protocol, const SessionInputs& inputs) {
  const auto expected = shapes(protocol);
  for (const auto& [role, in] : inputs) {
    if (expected.count(role) == 0 && !in.empty()) {
      reject(role, "role does not take part in " + std::string(protocol_name(protocol)));
    }
  }
  for (const auto& [role, shape] : expected) {
    static const RoleInput kEmpty;
    const auto it = inputs.find(role);
    const RoleInput& in = it == inputs.end() ? kEmpty : it->second;
    const bool has_list = !in.messages.empty();
    if (shape.pair) {
      if (in.messages.size() != 2) reject(role, "expected exactly two messages");
    } else if (shape.list) {
      if (in.messages.size() < 2) reject(role, "expected at least two messages");
    } else {
      check_field(role, false, has_list, "messages");
    }
    check_field(role, shape.matrix, !in.matrix.empty(), "message matrix");
    check_field(role, shape.choice, in.choice.has_value(), "choice");
    check_field(role, shape.record, in.record.has_value(), "record index");
    check_field(role, shape.record_count, in.record_count.has_value(), "record count");
    const bool indexed_choice = protocol == Protocol::one_of_n || protocol == Protocol::compiled;
    if (shape.choice && !indexed_choice && *in.choice > 1) reject(role, "choice must be 0 or 1");
  }
  if (protocol == Protocol::one_of_n || protocol == Protocol::compiled) {
    if (inputs.at(Role::R).choice >= inputs.at(Role::S).messages.size()) {
      reject(Role::R, "choice out of range");
    }
  }
  if (protocol == Protocol::duqmr) {
    const auto& t = inputs.at(Role::T);
    if (*t.record_count == 0 || *t.record >= *t.record_count) reject(Role::T, "need v < z");
  }
  if (protocol == Protocol::dqmr) {
    if (*inputs.at(Role::P1).record >= inputs.at(Role::S).matrix.size()) {
      reject(Role::P1, "record index out of range");
    }
  }
  if (protocol == Protocol::strawman_broadcast || protocol == Protocol::strawman_index) {
    if (*inputs.at(Role::R).record >= inputs.at(Role::S).matrix.size()) {
      reject(Role::R, "record index out of range");
    }
  }
}

namespace inputs {

SessionInputs two_party(const Bytes& m0, const Bytes& m1, bool s) {
  SessionInputs in;
  in[Role::S].messages = {m0, m1};
  in[Role::R].choice = s ? 1 : 0;
  return in;
}

SessionInputs one_of_n(const std::vector<Bytes>& messages, std::size_t s) {
  SessionInputs in;
  in[Role::S].messages = messages;
  in[Role::R].choice = s;
  return in;
}

SessionInputs issuer(const Bytes& m0, const Bytes& m1, bool s) {
  SessionInputs in;
  in[Role::S].messages = {m0, m1};
  in[Role::T].choice = s ? 1 : 0;
  return in;
}

SessionInputs dq_multi(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s) {
  SessionInputs in;
  in[Role::S].matrix = matrix;
  in[Role::P1].record = v;
  in[Role::R].choice = s ? 1 : 0;
  return in;
}

SessionInputs duq_multi(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s) {
  SessionInputs in;
  in[Role::S].matrix = matrix;
  in[Role::T].choice = s ? 1 : 0;
  in[Role::T].record = v;
  in[Role::T].record_count = matrix.size();
  return in;
}

SessionInputs strawman(const std::vector<std::pair<Bytes, Bytes>>& matrix, std::size_t v, bool s) {
  SessionInputs in;
  in[Role::S].matrix = matrix;
  in[Role::R].choice = s ? 1 : 0;
  in[Role::R].record = v;
  return in;
}

SessionInputs for_protocol(Protocol protocol, const std::vector<std::pair<Bytes, Bytes>>& matrix,
                           std::size_t v, std::size_t s) {
  const bool bit = s != 0;
  switch (protocol) {
    case Protocol::naor_pinkas:
    case Protocol::dq:
    case Protocol::supersonic:
      return two_party(matrix.at(v).first, matrix.at(v).second, bit);
    case Protocol::duq:
      return issuer(matrix.at(v).first, matrix.at(v).second, bit);
    case Protocol::one_of_n:
    case Protocol::compiled: {
      std::vector<Bytes> list;
      for (const auto& [a, b] : matrix) {
        list.push_back(a);
        list.push_back(b);
      }
      return one_of_n(list, 2 * v + s);
    }
    case Protocol::dqmr:
      return dq_multi(matrix, v, bit);
    case Protocol::duqmr:
      return duq_multi(matrix, v, bit);
    case Protocol::strawman_broadcast:
    case Protocol::strawman_index:
      return strawman(matrix, v, bit);
  }
  return {};
}

}  // namespace inputs

SessionId derive_session_id(BytesView seed) {
  const Bytes digest = shake256(0x53, seed, 16);
  SessionId id{};
  std::copy(digest.begin(), digest.end(), id.begin());
  return id;
}

const Bytes& SessionResult::message_output(Role role) const {
  const auto it = outputs.find(role);
  if (it == outputs.end() || !std::holds_alternative<Bytes>(it->second)) {
    throw PreconditionError("role " + std::string(role_name(role)) + " has no message output");
  }
  return std::get<Bytes>(it->second);
}

std::size_t SessionResult::count_output(Role role) const {
  const auto it = outputs.find(role);
  if (it == outputs.end() || !std::holds_alternative<std::size_t>(it->second)) {
    throw PreconditionError("role " + std::string(role_name(role)) + " has no count output");
  }
  return std::get<std::size_t>(it->second);
}

SessionResult run_session(Protocol protocol, const SessionInputs& inputs,
                          const SessionOptions& options) {
  options.config.validate();
  validate_inputs(protocol, inputs);

  SessionResult result;
  result.session = options.session_id.value_or(derive_session_id(options.seed));
  auto parties = detail::make_parties(protocol, inputs, options, result.session);
  detail::schedule(options.scheduler, parties, result.log);

  for (auto& p : parties) {
    if (p->output()) result.outputs.emplace(p->role(), *p->output());
    result.steps.insert(result.steps.end(), p->steps().begin(), p->steps().end());
    result.deliveries[p->role()] = p->received();
  }
  if (result.outputs.count(Role::R) == 0) {
    throw SessionError(Role::R, std::nullopt, "session ended without a receiver output");
  }
  const bool p1_counts = protocol == Protocol::dqmr || protocol == Protocol::duqmr;
  if (p1_counts && result.outputs.count(Role::P1) == 0) {
    throw SessionError(Role::P1, std::nullopt, "session ended without the record count");
  }
  return result;
}

}  // namespace oblivis::harness
