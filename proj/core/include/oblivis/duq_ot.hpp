#pragma once

#include <array>

#include "oblivis/config.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/sharing.hpp"

namespace oblivis {

/// R.Request when R does not know s: two blinding exponents, r1 for P1
/// and r2 for P2.
struct DuqBlinds {
  BigInt r1;
  BigInt r2;
};

/// sp_R: what the issuer T gives R so it can find its slot.
struct ReceiverTag {
  bool s2 = false;
  Bytes r3;
  bool operator==(const ReceiverTag&) const = default;
};

/// Output of T.Request: shares for the proxies, sp_S for S, sp_R for R.
struct IssuerRequest {
  bool share_p1 = false;
  bool share_p2 = false;
  Bytes sender_tag;
  ReceiverTag receiver_tag;
};

DuqBlinds duq_r_request(const GroupParams& pk, Rng& rng);

/// T.Request: shares s and picks a lambda-bit tag r3.
IssuerRequest duq_t_request(const SessionConfig& config, bool s, Rng& rng);
IssuerRequest duq_t_request_with(bool s, bool s1, Bytes r3);

PartialQuery duq_p2_gen_query(const BigInt& r2, bool s2, const GroupParams& pk);
FinalQuery duq_p1_gen_query(const BigInt& r1, bool s1, const PartialQuery& q2,
                            const GroupParams& pk);

/// S.GenRes: checks the query, masks m_i || r3 with G, then permutes.
TaggedResponsePair duq_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                               const FinalQuery& q1, BytesView r3, const SessionConfig& config,
                               Rng& rng);

/// Deterministic core of duq_gen_res with explicit exponents and swap bit.
TaggedResponsePair duq_respond(const Message& m0, const Message& m1, const GroupParams& pk,
                               const FinalQuery& q1, BytesView r3, const SessionConfig& config,
                               const BigInt& y0, const BigInt& y1, bool swap);

/// Decrypts both slots with x and splits each into (message, tag).
std::array<ParsedValue, 2> duq_trial_decrypt(const TaggedResponsePair& res, const BigInt& x,
                                             const GroupParams& pk, const SessionConfig& config);

/// R.Retrieve: returns the unpadded message of the one slot whose tag is
/// r3. Throws RetrievalError when no slot matches and AmbiguityError when
/// both do.
Bytes duq_retrieve(const TaggedResponsePair& res, const DuqBlinds& blinds,
                   const ReceiverTag& sp_r, const GroupParams& pk, const SessionConfig& config);

}  // namespace oblivis
