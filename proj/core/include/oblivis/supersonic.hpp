#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>

#include "oblivis/bytes.hpp"
#include "oblivis/config.hpp"
#include "oblivis/message.hpp"
#include "oblivis/rng.hpp"
#include "oblivis/sharing.hpp"

namespace oblivis {

using SessionId = std::array<std::uint8_t, 16>;

/// Single-use one-time-pad keys chosen by R and bound to one session.
struct PadKeys {
  Bytes k0;
  Bytes k1;
  SessionId session{};
};

/// (m_0 xor k_0, m_1 xor k_1), swapped when s1 = 1.
struct SwappedPair {
  std::array<Bytes, 2> c;
  bool operator==(const SwappedPair&) const = default;
};

/// R.Setup: two uniform sigma-bit keys.
PadKeys ss_setup(const SessionConfig& config, Rng& rng, const SessionId& session = {});

/// R.GenQuery: XOR shares of s; s1 goes to S and s2 to the helper P.
BitShares ss_gen_query(bool s, Rng& rng);

/// S.GenRes. Uses no public-key operation.
SwappedPair ss_gen_res(const Message& m0, const Message& m1, const PadKeys& keys, bool s1);

/// P.OblFilter: the first element of swap(s2, e').
Bytes ss_obl_filter(const SwappedPair& res, bool s2);

/// R.Retrieve: e'' xor k_s, unpadded.
Bytes ss_retrieve(BytesView ct, const PadKeys& keys, bool s);

/// Remembers which session ids a sender has already served.
class SessionRegistry {
 public:
  /// Returns false if the id was claimed before.
  bool claim(const SessionId& id);

 private:
  std::mutex mu_;
  std::set<SessionId> seen_;
};

/// Sender-side state for one transfer. Keys are accepted once, for the
/// session they were issued for, and used for exactly one response.
class SupersonicSender {
 public:
  explicit SupersonicSender(SessionId session, SessionRegistry* registry = nullptr);

  void accept_keys(PadKeys keys);
  SwappedPair respond(const Message& m0, const Message& m1, bool s1);

  const SessionId& session() const { return session_; }

 private:
  SessionId session_;
  SessionRegistry* registry_;
  std::optional<PadKeys> keys_;
  bool used_ = false;
};

}  // namespace oblivis
