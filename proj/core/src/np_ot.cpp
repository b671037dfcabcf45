#include "oblivis/np_ot.hpp"

#include "oblivis/errors.hpp"
#include "oblivis/hash.hpp"

namespace oblivis {

namespace {

SessionConfig sigma_only(std::size_t sigma_bits) {
  SessionConfig cfg;
  cfg.sigma_bits = sigma_bits;
  return cfg;
}

Bytes mask_for(const GroupParams& pk, const BigInt& key, const SessionConfig& config,
               bool tagged) {
  const Bytes encoded = encode_element(pk, key);
  return tagged ? hash_G(encoded, config.sigma_bits, config.lambda_bits)
                : hash_H(encoded, config.sigma_bits);
}

}  // namespace

GroupParams np_init(const SessionConfig& config, Rng& rng) { return init_group(config, rng); }

NpQueryResult np_gen_query_with(const GroupParams& pk, bool s, const BigInt& r) {
  const BigInt g_r = group_pow_g(pk, r);
  const BigInt beta0 = s ? group_div_g(pk, pk.C, r) : g_r;
  return {NpQuery{beta0}, NpSecret{r, s}};
}

NpQueryResult np_gen_query(const GroupParams& pk, bool s, Rng& rng) {
  return np_gen_query_with(pk, s, random_nonzero_exponent(pk, rng));
}

BigInt np_complete_query(const GroupParams& pk, const BigInt& beta0) {
  return group_div(pk, pk.C, beta0);
}

ResponseElement mask_element(const GroupParams& pk, const BigInt& beta, const BigInt& y,
                             BytesView payload, const SessionConfig& config, bool tagged) {
  const BigInt key = group_exp(pk, beta, y);
  const Bytes mask = mask_for(pk, key, config, tagged);
  if (payload.size() != mask.size()) {
    throw PreconditionError("mask_element: payload must be " + std::to_string(mask.size()) +
                            " bytes");
  }
  return {group_pow_g(pk, y), xor_bytes(mask, payload)};
}

Bytes unmask_element(const GroupParams& pk, const ResponseElement& element, const BigInt& x,
                     const SessionConfig& config, bool tagged) {
  const BigInt key = group_exp(pk, element.head, x);
  const Bytes mask = mask_for(pk, key, config, tagged);
  if (element.masked.size() != mask.size()) throw DecodeError("response slot has wrong length");
  return xor_bytes(mask, element.masked);
}

ResponsePair respond_pair(const GroupParams& pk, const BigInt& beta0, const BigInt& beta1,
                          const Message& m0, const Message& m1, const BigInt& y0,
                          const BigInt& y1) {
  if (m0.size() != m1.size()) throw PreconditionError("respond_pair: message sizes differ");
  const SessionConfig cfg = sigma_only(m0.size() * 8);
  return ResponsePair{{mask_element(pk, beta0, y0, m0.padded(), cfg, false),
                       mask_element(pk, beta1, y1, m1.padded(), cfg, false)}};
}

ResponsePair respond_pair(const GroupParams& pk, const BigInt& beta0, const BigInt& beta1,
                          const Message& m0, const Message& m1, Rng& rng) {
  const BigInt y0 = random_nonzero_exponent(pk, rng);
  const BigInt y1 = random_nonzero_exponent(pk, rng);
  return respond_pair(pk, beta0, beta1, m0, m1, y0, y1);
}

ResponsePair np_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                        const NpQuery& q, Rng& rng) {
  require_member(pk, q.beta0);
  const BigInt beta1 = np_complete_query(pk, q.beta0);
  return respond_pair(pk, q.beta0, beta1, m0, m1, rng);
}

Bytes np_retrieve(const ResponsePair& res, const NpSecret& sp, const GroupParams& pk) {
  if (res.e[0].masked.size() != res.e[1].masked.size()) {
    throw DecodeError("response slots differ in length");
  }
  const auto& slot = res.e[sp.s ? 1 : 0];
  return Message::unpad(unmask_element(pk, slot, sp.r, sigma_only(slot.masked.size() * 8), false));
}

}  // namespace oblivis
