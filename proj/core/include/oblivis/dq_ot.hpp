#pragma once

#include "oblivis/bytes.hpp"
#include "oblivis/group.hpp"
#include "oblivis/message.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/rng.hpp"
#include "oblivis/sharing.hpp"

namespace oblivis {

/// What R hands to one proxy: a share of s and a blinding exponent.
struct DelegationRequest {
  bool share = false;
  BigInt blind;
};

/// P2's output (delta_0, delta_1).
struct PartialQuery {
  BigInt delta0;
  BigInt delta1;
  bool operator==(const PartialQuery&) const = default;
};

/// P1's output (beta_0, beta_1); both values travel to S.
struct FinalQuery {
  BigInt beta0;
  BigInt beta1;
  bool operator==(const FinalQuery&) const = default;
};

struct DqReceiverState {
  bool s = false;
  BitShares shares{};
  BigInt r1;
  BigInt r2;
};

struct DqRequest {
  DelegationRequest to_p1;
  DelegationRequest to_p2;
  DqReceiverState state;
};

/// R.Request. Samples only; performs no group operation.
DqRequest dq_request(const GroupParams& pk, bool s, Rng& rng);
DqRequest dq_request_with(bool s, bool s1, const BigInt& r1, const BigInt& r2);

/// P2.GenQuery: delta_{s2} = g^{r2}, delta_{1-s2} = C / g^{r2}.
PartialQuery dq_p2_gen_query(const DelegationRequest& req2, const GroupParams& pk);

/// P1.GenQuery: beta_{s1} = delta_0 g^{r1}, beta_{1-s1} = delta_1 / g^{r1}.
FinalQuery dq_p1_gen_query(const DelegationRequest& req1, const PartialQuery& q2,
                           const GroupParams& pk);

/// Throws AbortError unless beta_0 * beta_1 = C.
void dq_check_query(const GroupParams& pk, const FinalQuery& q1);

/// S.GenRes: checks the query, then responds as in the base protocol.
ResponsePair dq_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                        const FinalQuery& q1, Rng& rng);

/// x = r2 + r1 * (-1)^{s2} mod q.
BigInt retrieval_exponent(const GroupParams& pk, const BigInt& r1, const BigInt& r2, bool s2);

/// R.Retrieve: H(e_{s,0}^x) xor e_{s,1}, unpadded.
Bytes dq_retrieve(const ResponsePair& res, const DqReceiverState& state, const GroupParams& pk);

}  // namespace oblivis
