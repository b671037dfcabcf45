#pragma once

#include <array>
#include <cstddef>

#include "oblivis/bytes.hpp"
#include "oblivis/config.hpp"
#include "oblivis/group.hpp"
#include "oblivis/message.hpp"
#include "oblivis/rng.hpp"

namespace oblivis {

/// One response slot: (g^y, mask(beta^y) xor payload).
struct ResponseElement {
  BigInt head;
  Bytes masked;
  bool operator==(const ResponseElement&) const = default;
};

/// Untagged response (e_0, e_1) masked with H.
struct ResponsePair {
  std::array<ResponseElement, 2> e;
  bool operator==(const ResponsePair&) const = default;
};

/// Tagged response masked with G, carrying m_i || r3 in a random order.
struct TaggedResponsePair {
  std::array<ResponseElement, 2> e;
  bool operator==(const TaggedResponsePair&) const = default;
};

struct NpQuery {
  BigInt beta0;
};

struct NpSecret {
  BigInt r;
  bool s = false;
};

struct NpQueryResult {
  NpQuery query;
  NpSecret secret;
};

/// S.Init.
GroupParams np_init(const SessionConfig& config, Rng& rng);

/// R.GenQuery: beta_s = g^r and beta_{1-s} = C / g^r; only beta_0 is sent.
NpQueryResult np_gen_query(const GroupParams& pk, bool s, Rng& rng);
NpQueryResult np_gen_query_with(const GroupParams& pk, bool s, const BigInt& r);

/// beta_1 = C / beta_0.
BigInt np_complete_query(const GroupParams& pk, const BigInt& beta0);

/// S.GenRes on a query carrying only beta_0.
ResponsePair np_gen_res(const Message& m0, const Message& m1, const GroupParams& pk,
                        const NpQuery& q, Rng& rng);

/// R.Retrieve: H(e_{s,0}^r) xor e_{s,1}, unpadded.
Bytes np_retrieve(const ResponsePair& res, const NpSecret& sp, const GroupParams& pk);

/// Sender response on a complete query (beta_0, beta_1) with explicit
/// exponents. Shared by the two-party and delegated variants.
ResponsePair respond_pair(const GroupParams& pk, const BigInt& beta0, const BigInt& beta1,
                          const Message& m0, const Message& m1, const BigInt& y0,
                          const BigInt& y1);

/// Same as respond_pair with fresh y_0, y_1.
ResponsePair respond_pair(const GroupParams& pk, const BigInt& beta0, const BigInt& beta1,
                          const Message& m0, const Message& m1, Rng& rng);

/// Masks `payload` for the slot whose key is beta, using H when
/// `tagged` is false and G otherwise.
ResponseElement mask_element(const GroupParams& pk, const BigInt& beta, const BigInt& y,
                             BytesView payload, const SessionConfig& config, bool tagged);

/// Recovers the masked payload of `element` using the exponent x.
Bytes unmask_element(const GroupParams& pk, const ResponseElement& element, const BigInt& x,
                     const SessionConfig& config, bool tagged);

}  // namespace oblivis
