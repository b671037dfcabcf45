#include "oblivis/dq_ot.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

DqRequest dq_request_with(bool s, bool s1, const BigInt& r1, const BigInt& r2) {
  DqRequest out;
  out.state.s = s;
  out.state.shares = {s1, s1 != s};
  out.state.r1 = r1;
  out.state.r2 = r2;
  out.to_p1 = {out.state.shares.s1, r1};
  out.to_p2 = {out.state.shares.s2, r2};
  return out;
}

DqRequest dq_request(const GroupParams& pk, bool s, Rng& rng) {
  const BitShares shares = share_bit(s, rng);
  const BigInt r1 = random_nonzero_exponent(pk, rng);
  const BigInt r2 = random_nonzero_exponent(pk, rng);
  return dq_request_with(s, shares.s1, r1, r2);
}

PartialQuery dq_p2_gen_query(const DelegationRequest& req2, const GroupParams& pk) {
  const BigInt g_r2 = group_pow_g(pk, req2.blind);
  const BigInt other = group_div_g(pk, pk.C, req2.blind);
  return req2.share ? PartialQuery{other, g_r2} : PartialQuery{g_r2, other};
}

FinalQuery dq_p1_gen_query(const DelegationRequest& req1, const PartialQuery& q2,
                           const GroupParams& pk) {
  require_member(pk, q2.delta0);
  require_member(pk, q2.delta1);
  const BigInt up = group_mul(pk, q2.delta0, group_pow_g(pk, req1.blind));
  const BigInt down = group_div_g(pk, q2.delta1, req1.blind);
  return req1.share ? FinalQuery{down, up} : FinalQuery{up, down};
}

void dq_check_query(const GroupParams& pk, const FinalQuery& q1) {
  require_member(pk, q1.beta0);
  require_member(pk, q1.beta1);
  if (group_mul(pk, q1.beta0, q1.beta1) != pk.C) {
    throw AbortError("final query rejected: beta_0 * beta_1 != C");
  }
}

ResponsePair dq_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                        const FinalQuery& q1, Rng& rng) {
  dq_check_query(pk, q1);
  return respond_pair(pk, q1.beta0, q1.beta1, m0, m1, rng);
}

BigInt retrieval_exponent(const GroupParams& pk, const BigInt& r1, const BigInt& r2, bool s2) {
  BigInt x = s2 ? BigInt(r2 - r1) : BigInt(r2 + r1);
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pk.q.get_mpz_t());
  return x;
}

Bytes dq_retrieve(const ResponsePair& res, const DqReceiverState& state, const GroupParams& pk) {
  if (res.e[0].masked.size() != res.e[1].masked.size()) {
    throw DecodeError("response slots differ in length");
  }
  const BigInt x = retrieval_exponent(pk, state.r1, state.r2, state.shares.s2);
  const auto& slot = res.e[state.s ? 1 : 0];
  SessionConfig cfg;
  cfg.sigma_bits = slot.masked.size() * 8;
  return Message::unpad(unmask_element(pk, slot, x, cfg, false));
}

}  // namespace oblivis
