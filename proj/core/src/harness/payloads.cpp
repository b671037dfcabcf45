#include "oblivis/harness/payloads.hpp"

#include <algorithm>

#include "oblivis/codec.hpp"
#include "oblivis/errors.hpp"

namespace oblivis::harness::payload {

namespace {

void write_element(ByteWriter& w, const GroupParams& pk, const ResponseElement& e) {
  w.bigint(e.head, pk.element_bytes()).blob(e.masked);
}

ResponseElement read_element(ByteReader& r) {
  ResponseElement e;
  e.head = r.bigint();
  e.masked = r.blob();
  return e;
}

void write_ciphertexts(ByteWriter& w, const AhePublicKey& pk, std::span<const AheCiphertext> cts) {
  w.u32(static_cast<std::uint32_t>(cts.size()));
  for (const auto& c : cts) w.blob(serialize_ciphertext(pk, c));
}

std::vector<AheCiphertext> read_ciphertexts(ByteReader& r) {
  const std::uint32_t count = r.u32();
  if (count > r.remaining()) throw DecodeError("ciphertext count exceeds payload");
  std::vector<AheCiphertext> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(deserialize_ciphertext(r.blob()));
  return out;
}

}  // namespace

Bytes encode_request(const GroupParams& pk, const DelegationRequest& req, bool with_share) {
  ByteWriter w;
  w.u8(with_share ? 1 : 0).u8(with_share && req.share ? 1 : 0).bigint(req.blind, byte_length(pk.q));
  return std::move(w).bytes();
}

DecodedRequest decode_request(BytesView data) {
  ByteReader r(data);
  DecodedRequest out;
  const bool has_share = r.boolean();
  const bool share = r.boolean();
  if (has_share) out.share = share;
  out.blind = r.bigint();
  r.expect_end();
  return out;
}

Bytes encode_bit(bool bit) { return Bytes{static_cast<std::uint8_t>(bit ? 1 : 0)}; }

bool decode_bit(BytesView data) {
  ByteReader r(data);
  const bool b = r.boolean();
  r.expect_end();
  return b;
}

Bytes encode_element_query(const GroupParams& pk, const BigInt& beta0) {
  ByteWriter w;
  w.bigint(beta0, pk.element_bytes());
  return std::move(w).bytes();
}

BigInt decode_element_query(BytesView data) {
  ByteReader r(data);
  BigInt v = r.bigint();
  r.expect_end();
  return v;
}

Bytes encode_indexed_query(const GroupParams& pk, const BigInt& beta0, std::size_t v) {
  ByteWriter w;
  w.bigint(beta0, pk.element_bytes()).u32(static_cast<std::uint32_t>(v));
  return std::move(w).bytes();
}

std::pair<BigInt, std::size_t> decode_indexed_query(BytesView data) {
  ByteReader r(data);
  BigInt beta0 = r.bigint();
  const std::size_t v = r.u32();
  r.expect_end();
  return {std::move(beta0), v};
}

Bytes encode_partial(const GroupParams& pk, const PartialQuery& q) {
  ByteWriter w;
  w.bigint(q.delta0, pk.element_bytes()).bigint(q.delta1, pk.element_bytes());
  return std::move(w).bytes();
}

PartialQuery decode_partial(BytesView data) {
  ByteReader r(data);
  PartialQuery q;
  q.delta0 = r.bigint();
  q.delta1 = r.bigint();
  r.expect_end();
  return q;
}

Bytes encode_final(const GroupParams& pk, const FinalQuery& q) {
  ByteWriter w;
  w.bigint(q.beta0, pk.element_bytes()).bigint(q.beta1, pk.element_bytes());
  return std::move(w).bytes();
}

FinalQuery decode_final(BytesView data) {
  ByteReader r(data);
  FinalQuery q;
  q.beta0 = r.bigint();
  q.beta1 = r.bigint();
  r.expect_end();
  return q;
}

Bytes encode_tag(BytesView r3) { return encode_blob(r3); }
Bytes decode_tag(BytesView data) { return decode_blob(data); }

Bytes encode_receiver_tag(const ReceiverTag& tag) {
  ByteWriter w;
  w.u8(tag.s2 ? 1 : 0).blob(tag.r3);
  return std::move(w).bytes();
}

ReceiverTag decode_receiver_tag(BytesView data) {
  ByteReader r(data);
  ReceiverTag tag;
  tag.s2 = r.boolean();
  tag.r3 = r.blob();
  r.expect_end();
  return tag;
}

Bytes encode_pair(const GroupParams& pk, const std::array<ResponseElement, 2>& e) {
  ByteWriter w;
  write_element(w, pk, e[0]);
  write_element(w, pk, e[1]);
  return std::move(w).bytes();
}

std::array<ResponseElement, 2> decode_pair(BytesView data) {
  ByteReader r(data);
  std::array<ResponseElement, 2> out{read_element(r), read_element(r)};
  r.expect_end();
  return out;
}

Bytes encode_pairs(const GroupParams& pk, const std::vector<std::array<ResponseElement, 2>>& pairs) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(pairs.size()));
  for (const auto& p : pairs) {
    write_element(w, pk, p[0]);
    write_element(w, pk, p[1]);
  }
  return std::move(w).bytes();
}

std::vector<std::array<ResponseElement, 2>> decode_pairs(BytesView data) {
  ByteReader r(data);
  const std::uint32_t count = r.u32();
  if (count > r.remaining()) throw DecodeError("pair count exceeds payload");
  std::vector<std::array<ResponseElement, 2>> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::array<ResponseElement, 2> p{read_element(r), read_element(r)};
    out.push_back(std::move(p));
  }
  r.expect_end();
  return out;
}

Bytes encode_ciphertexts(const AhePublicKey& pk, std::span<const AheCiphertext> cts) {
  ByteWriter w;
  write_ciphertexts(w, pk, cts);
  return std::move(w).bytes();
}

std::vector<AheCiphertext> decode_ciphertexts(BytesView data) {
  ByteReader r(data);
  auto out = read_ciphertexts(r);
  r.expect_end();
  return out;
}

Bytes encode_filtered(const AhePublicKey& pk, const FilteredResponse& res) {
  const std::vector<AheCiphertext> flat{res.o[0][0], res.o[0][1], res.o[1][0], res.o[1][1]};
  return encode_ciphertexts(pk, flat);
}

FilteredResponse decode_filtered(BytesView data) {
  const auto flat = decode_ciphertexts(data);
  if (flat.size() != 4) throw DecodeError("filtered response must hold four ciphertexts");
  FilteredResponse out;
  out.o[0] = {flat[0], flat[1]};
  out.o[1] = {flat[2], flat[3]};
  return out;
}

Bytes encode_generic_response(const GroupParams& pk, const NpOneOfN::Response& res) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(res.elements.size()));
  for (const auto& e : res.elements) write_element(w, pk, e);
  return std::move(w).bytes();
}

NpOneOfN::Response decode_generic_response(BytesView data) {
  ByteReader r(data);
  const std::uint32_t count = r.u32();
  if (count > r.remaining()) throw DecodeError("element count exceeds payload");
  NpOneOfN::Response res;
  res.elements.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) res.elements.push_back(read_element(r));
  r.expect_end();
  return res;
}

Bytes encode_compiled_query(const GroupParams& pk, const Compiled<NpOneOfN>::Query& q) {
  ByteWriter w;
  w.blob(encode_element_query(pk, q.inner.beta0));
  write_ciphertexts(w, q.receiver_key, q.selector);
  return std::move(w).bytes();
}

Compiled<NpOneOfN>::Query decode_compiled_query(BytesView data, const AhePublicKey& receiver_key) {
  ByteReader r(data);
  Compiled<NpOneOfN>::Query q;
  q.inner.beta0 = decode_element_query(r.blob());
  q.selector = read_ciphertexts(r);
  r.expect_end();
  q.receiver_key = receiver_key;
  return q;
}

Bytes encode_pad_keys(const PadKeys& keys) {
  ByteWriter w;
  w.raw(keys.session).blob(keys.k0).blob(keys.k1);
  return std::move(w).bytes();
}

PadKeys decode_pad_keys(BytesView data) {
  ByteReader r(data);
  PadKeys keys;
  const Bytes sid = r.raw(keys.session.size());
  std::copy(sid.begin(), sid.end(), keys.session.begin());
  keys.k0 = r.blob();
  keys.k1 = r.blob();
  r.expect_end();
  return keys;
}

Bytes encode_swapped(const SwappedPair& pair) {
  ByteWriter w;
  w.blob(pair.c[0]).blob(pair.c[1]);
  return std::move(w).bytes();
}

SwappedPair decode_swapped(BytesView data) {
  ByteReader r(data);
  SwappedPair out;
  out.c[0] = r.blob();
  out.c[1] = r.blob();
  r.expect_end();
  return out;
}

Bytes encode_blob(BytesView data) {
  ByteWriter w;
  w.blob(data);
  return std::move(w).bytes();
}

Bytes decode_blob(BytesView data) {
  ByteReader r(data);
  Bytes out = r.blob();
  r.expect_end();
  return out;
}

}  // namespace oblivis::harness::payload
