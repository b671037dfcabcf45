#include "oblivis/supersonic.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

PadKeys ss_setup(const SessionConfig& config, Rng& rng, const SessionId& session) {
  config.validate();
  PadKeys keys;
  keys.k0 = rng.bytes(config.message_bytes());
  keys.k1 = rng.bytes(config.message_bytes());
  keys.session = session;
  return keys;
}

BitShares ss_gen_query(bool s, Rng& rng) { return share_bit(s, rng); }

SwappedPair ss_gen_res(const Message& m0, const Message& m1, const PadKeys& keys, bool s1) {
  auto pair = swap_pair(s1, std::make_pair(xor_bytes(m0.padded(), keys.k0),
                                           xor_bytes(m1.padded(), keys.k1)));
  return SwappedPair{{std::move(pair.first), std::move(pair.second)}};
}

Bytes ss_obl_filter(const SwappedPair& res, bool s2) { return res.c[s2 ? 1 : 0]; }

Bytes ss_retrieve(BytesView ct, const PadKeys& keys, bool s) {
  return Message::unpad(xor_bytes(ct, s ? keys.k1 : keys.k0));
}

bool SessionRegistry::claim(const SessionId& id) {
  std::lock_guard lock(mu_);
  return seen_.insert(id).second;
}

SupersonicSender::SupersonicSender(SessionId session, SessionRegistry* registry)
    : session_(session), registry_(registry) {}

void SupersonicSender::accept_keys(PadKeys keys) {
  if (keys_) throw SessionStateError("pad keys already delivered for this session");
  if (keys.session != session_) throw SessionStateError("pad keys belong to another session");
  if (registry_ != nullptr && !registry_->claim(session_)) {
    throw SessionStateError("session id replayed");
  }
  keys_ = std::move(keys);
}

SwappedPair SupersonicSender::respond(const Message& m0, const Message& m1, bool s1) {
  if (!keys_) throw SessionStateError("no pad keys for this session");
  if (used_) throw SessionStateError("pad keys are single use");
  used_ = true;
  return ss_gen_res(m0, m1, *keys_, s1);
}

}  // namespace oblivis
