#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "oblivis/bytes.hpp"
#include "oblivis/supersonic.hpp"

namespace oblivis::harness {

enum class Role : std::uint8_t { S = 0, R = 1, T = 2, P = 3, P1 = 4, P2 = 5 };

inline constexpr Role kAllRoles[] = {Role::S, Role::R, Role::T, Role::P, Role::P1, Role::P2};

enum class Kind : std::uint16_t {
  PUBLIC_PARAMS = 1,
  AHE_PUBLIC_KEY = 2,
  NP_QUERY = 3,
  REQUEST = 10,
  PARTIAL_QUERY = 11,
  FINAL_QUERY = 12,
  RESPONSE = 13,
  ISSUER_SHARE = 20,
  ISSUER_TAG_S = 21,
  ISSUER_TAG_R = 22,
  TAGGED_RESPONSE = 23,
  MATRIX_RESPONSE = 30,
  ONE_HOT_VECTOR = 31,
  FILTERED_RESPONSE = 32,
  GENERIC_QUERY = 40,
  GENERIC_RESPONSE = 41,
  COMPILED_QUERY = 42,
  COMPILED_RESPONSE = 43,
  SS_KEYS = 50,
  SS_SHARE_S = 51,
  SS_SHARE_P = 52,
  SS_PAIR = 53,
  SS_FINAL = 54,
  INDEXED_QUERY = 60,
};

std::string_view role_name(Role role);
std::string_view kind_name(Kind kind);
/// Throws DecodeError for an unknown name or code.
Role role_from_name(std::string_view name);
Role role_from_code(std::uint8_t code);
Kind kind_from_code(std::uint16_t code);

/// Wire format: 16-byte session id, 1-byte from, 1-byte to, 2-byte kind,
/// 8-byte sequence number, 4-byte big-endian payload length, payload.
struct PartyEnvelope {
  static constexpr std::size_t kHeaderBytes = 16 + 1 + 1 + 2 + 8 + 4;

  SessionId session{};
  Role from = Role::S;
  Role to = Role::R;
  Kind kind = Kind::PUBLIC_PARAMS;
  std::uint64_t seq = 0;
  Bytes payload;

  /// Causal depth carried in the upper bits of seq.
  std::uint64_t stamp() const { return seq >> 16; }
  std::size_t wire_size() const { return kHeaderBytes + payload.size(); }
  bool operator==(const PartyEnvelope&) const = default;
};

/// seq = stamp * 2^16 + from * 2^8 + index, where index counts the
/// sender's envelopes. Unique in a session and increasing per sender.
std::uint64_t make_seq(std::uint64_t stamp, Role from, std::uint8_t index);

Bytes encode_envelope(const PartyEnvelope& envelope);
PartyEnvelope decode_envelope(BytesView data);

}  // namespace oblivis::harness
