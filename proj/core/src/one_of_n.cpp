#include "oblivis/one_of_n.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

NpOneOfN::NpOneOfN(std::size_t n, SessionConfig config, std::optional<GroupParams> group)
    : n_(n), config_(config), group_(std::move(group)) {
  if (n_ < 2 || n_ > 1024) throw PreconditionError("NpOneOfN: n must be in [2, 1024]");
  config_.validate();
}

NpOneOfN::PublicKey NpOneOfN::init(Rng& rng) const {
  if (group_) return *group_;
  return init_group(config_, rng);
}

std::pair<NpOneOfN::Query, NpOneOfN::Secret> NpOneOfN::gen_query(const PublicKey& pk,
                                                                 std::size_t s,
                                                                 Rng& rng) const {
  if (s >= n_) throw RangeError("choice index out of range");
  const BigInt r = random_nonzero_exponent(pk, rng);
  const BigInt beta0 = s == 0 ? group_pow_g(pk, r) : group_div_g(pk, lane_constant(pk, s), r);
  return {Query{beta0}, Secret{r, s}};
}

NpOneOfN::Response NpOneOfN::gen_res(std::span<const Message> messages, const PublicKey& pk,
                                     const Query& q, Rng& rng) const {
  if (messages.size() != n_) throw PreconditionError("NpOneOfN: expected n messages");
  require_member(pk, q.beta0);
  const BigInt inverse = group_exp(pk, q.beta0, pk.q - 1);
  Response res;
  res.elements.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const BigInt beta = i == 0 ? q.beta0 : group_mul(pk, lane_constant(pk, i), inverse);
    const BigInt y = random_nonzero_exponent(pk, rng);
    res.elements.push_back(mask_element(pk, beta, y, messages[i].padded(), config_, false));
  }
  return res;
}

Bytes NpOneOfN::retrieve(const Response& res, const Query& q, const Secret& sp,
                         const PublicKey& pk, std::size_t s) const {
  return retrieve_element(element(res, s), q, sp, pk, s);
}

const NpOneOfN::Element& NpOneOfN::element(const Response& res, std::size_t i) const {
  if (i >= res.elements.size()) throw RangeError("response element index out of range");
  return res.elements[i];
}

std::vector<BigInt> NpOneOfN::encode_element(const Element& element) const {
  return {element.head, bigint_from_bytes(element.masked)};
}

NpOneOfN::Element NpOneOfN::decode_element(std::span<const BigInt> ints,
                                           const PublicKey& pk) const {
  if (ints.size() != width()) throw DecodeError("element has wrong number of components");
  if (!in_subgroup(pk, ints[0])) throw DecodeError("element head is not a group element");
  try {
    return {ints[0], bigint_to_bytes(ints[1], config_.message_bytes())};
  } catch (const RangeError&) {
    throw DecodeError("element payload exceeds sigma bits");
  }
}

Bytes NpOneOfN::retrieve_element(const Element& element, const Query&, const Secret& sp,
                                 const PublicKey& pk, std::size_t s) const {
  if (s != sp.s) throw PreconditionError("retrieve: choice differs from the query secret");
  return Message::unpad(unmask_element(pk, element, sp.r, config_, false));
}

}  // namespace oblivis
