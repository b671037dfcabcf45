#include "oblivis/harness/envelope.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "oblivis/codec.hpp"
#include "oblivis/errors.hpp"

namespace oblivis::harness {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 6> kRoleNames{{
    {Role::S, "S"}, {Role::R, "R"}, {Role::T, "T"},
    {Role::P, "P"}, {Role::P1, "P1"}, {Role::P2, "P2"},
}};

constexpr std::array<std::pair<Kind, std::string_view>, 24> kKindNames{{
    {Kind::PUBLIC_PARAMS, "PUBLIC_PARAMS"},
    {Kind::AHE_PUBLIC_KEY, "AHE_PUBLIC_KEY"},
    {Kind::NP_QUERY, "NP_QUERY"},
    {Kind::REQUEST, "REQUEST"},
    {Kind::PARTIAL_QUERY, "PARTIAL_QUERY"},
    {Kind::FINAL_QUERY, "FINAL_QUERY"},
    {Kind::RESPONSE, "RESPONSE"},
    {Kind::ISSUER_SHARE, "ISSUER_SHARE"},
    {Kind::ISSUER_TAG_S, "ISSUER_TAG_S"},
    {Kind::ISSUER_TAG_R, "ISSUER_TAG_R"},
    {Kind::TAGGED_RESPONSE, "TAGGED_RESPONSE"},
    {Kind::MATRIX_RESPONSE, "MATRIX_RESPONSE"},
    {Kind::ONE_HOT_VECTOR, "ONE_HOT_VECTOR"},
    {Kind::FILTERED_RESPONSE, "FILTERED_RESPONSE"},
    {Kind::GENERIC_QUERY, "GENERIC_QUERY"},
    {Kind::GENERIC_RESPONSE, "GENERIC_RESPONSE"},
    {Kind::COMPILED_QUERY, "COMPILED_QUERY"},
    {Kind::COMPILED_RESPONSE, "COMPILED_RESPONSE"},
    {Kind::SS_KEYS, "SS_KEYS"},
    {Kind::SS_SHARE_S, "SS_SHARE_S"},
    {Kind::SS_SHARE_P, "SS_SHARE_P"},
    {Kind::SS_PAIR, "SS_PAIR"},
    {Kind::SS_FINAL, "SS_FINAL"},
    {Kind::INDEXED_QUERY, "INDEXED_QUERY"},
}};

}  // namespace

std::string_view role_name(Role role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

std::string_view kind_name(Kind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

Role role_from_name(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  throw DecodeError("unknown role '" + std::string(name) + "'");
}

Role role_from_code(std::uint8_t code) {
  if (code > static_cast<std::uint8_t>(Role::P2)) throw DecodeError("unknown role code");
  return static_cast<Role>(code);
}

Kind kind_from_code(std::uint16_t code) {
  for (const auto& [k, name] : kKindNames) {
    if (static_cast<std::uint16_t>(k) == code) return k;
  }
  throw DecodeError("unknown envelope kind " + std::to_string(code));
}

std::uint64_t make_seq(std::uint64_t stamp, Role from, std::uint8_t index) {
  return (stamp << 16) | (std::uint64_t{static_cast<std::uint8_t>(from)} << 8) | index;
}

Bytes encode_envelope(const PartyEnvelope& envelope) {
  ByteWriter w;
  w.raw(envelope.session)
      .u8(static_cast<std::uint8_t>(envelope.from))
      .u8(static_cast<std::uint8_t>(envelope.to))
      .u16(static_cast<std::uint16_t>(envelope.kind))
      .u64(envelope.seq)
      .blob(envelope.payload);
  return std::move(w).bytes();
}

PartyEnvelope decode_envelope(BytesView data) {
  ByteReader r(data);
  PartyEnvelope env;
  const Bytes sid = r.raw(env.session.size());
  std::copy(sid.begin(), sid.end(), env.session.begin());
  env.from = role_from_code(r.u8());
  env.to = role_from_code(r.u8());
  env.kind = kind_from_code(r.u16());
  env.seq = r.u64();
  env.payload = r.blob();
  r.expect_end();
  return env;
}

}  // namespace oblivis::harness
