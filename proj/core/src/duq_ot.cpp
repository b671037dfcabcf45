#include "oblivis/duq_ot.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

DuqBlinds duq_r_request(const GroupParams& pk, Rng& rng) {
  DuqBlinds out;
  out.r1 = random_nonzero_exponent(pk, rng);
  out.r2 = random_nonzero_exponent(pk, rng);
  return out;
}

IssuerRequest duq_t_request_with(bool s, bool s1, Bytes r3) {
  IssuerRequest out;
  out.share_p1 = s1;
  out.share_p2 = s1 != s;
  out.sender_tag = r3;
  out.receiver_tag = {out.share_p2, std::move(r3)};
  return out;
}

IssuerRequest duq_t_request(const SessionConfig& config, bool s, Rng& rng) {
  config.validate();
  const BitShares shares = share_bit(s, rng);
  return duq_t_request_with(s, shares.s1, rng.bytes(config.tag_bytes()));
}

PartialQuery duq_p2_gen_query(const BigInt& r2, bool s2, const GroupParams& pk) {
  return dq_p2_gen_query(DelegationRequest{s2, r2}, pk);
}

FinalQuery duq_p1_gen_query(const BigInt& r1, bool s1, const PartialQuery& q2,
                            const GroupParams& pk) {
  return dq_p1_gen_query(DelegationRequest{s1, r1}, q2, pk);
}

TaggedResponsePair duq_respond(const Message& m0, const Message& m1, const GroupParams& pk,
                               const FinalQuery& q1, BytesView r3, const SessionConfig& config,
                               const BigInt& y0, const BigInt& y1, bool swap) {
  if (r3.size() != config.tag_bytes()) throw PreconditionError("duq: tag must be lambda bits");
  if (m0.size() != config.message_bytes() || m1.size() != config.message_bytes()) {
    throw PreconditionError("duq: messages must be sigma bits");
  }
  dq_check_query(pk, q1);
  auto pair = std::make_pair(
      mask_element(pk, q1.beta0, y0, concat(m0.padded(), r3), config, true),
      mask_element(pk, q1.beta1, y1, concat(m1.padded(), r3), config, true));
  pair = swap_pair(swap, std::move(pair));
  return TaggedResponsePair{{std::move(pair.first), std::move(pair.second)}};
}

TaggedResponsePair duq_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                               const FinalQuery& q1, BytesView r3, const SessionConfig& config,
                               Rng& rng) {
  const BigInt y0 = random_nonzero_exponent(pk, rng);
  const BigInt y1 = random_nonzero_exponent(pk, rng);
  const bool swap = rng.bit();
  return duq_respond(m0, m1, pk, q1, r3, config, y0, y1, swap);
}

std::array<ParsedValue, 2> duq_trial_decrypt(const TaggedResponsePair& res, const BigInt& x,
                                             const GroupParams& pk, const SessionConfig& config) {
  return {parse(config.lambda_bits, unmask_element(pk, res.e[0], x, config, true)),
          parse(config.lambda_bits, unmask_element(pk, res.e[1], x, config, true))};
}

Bytes duq_retrieve(const TaggedResponsePair& res, const DuqBlinds& blinds,
                   const ReceiverTag& sp_r, const GroupParams& pk, const SessionConfig& config) {
  const BigInt x = retrieval_exponent(pk, blinds.r1, blinds.r2, sp_r.s2);
  const auto slots = duq_trial_decrypt(res, x, pk, config);
  const bool hit0 = slots[0].tail == sp_r.r3;
  const bool hit1 = slots[1].tail == sp_r.r3;
  if (hit0 && hit1) throw AmbiguityError("both response slots carry the receiver tag");
  if (!hit0 && !hit1) throw RetrievalError("no response slot carries the receiver tag");
  return Message::unpad(slots[hit0 ? 0 : 1].head);
}

}  // namespace oblivis
