#include "oblivis/mr_ot.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

namespace {

void require_rows(const MessageMatrix& matrix) {
  if (matrix.empty()) throw PreconditionError("message matrix must have at least one row");
}

/// Per-row streams so rows can be produced in any order with the same result.
Rng row_stream(BytesView base, std::size_t t) { return Rng(base).derive("mr-row", t); }

}  // namespace

std::vector<ResponsePair> dqmr_gen_res(const MessageMatrix& matrix, const GroupParams& pk,
                                       const FinalQuery& q1, Rng& rng) {
  require_rows(matrix);
  dq_check_query(pk, q1);
  const Bytes base = rng.bytes(32);
  std::vector<ResponsePair> out;
  out.reserve(matrix.size());
  for (std::size_t t = 0; t < matrix.size(); ++t) {
    Rng row = row_stream(base, t);
    out.push_back(respond_pair(pk, q1.beta0, q1.beta1, matrix[t].first, matrix[t].second, row));
  }
  return out;
}

ResponsePair dqmr_obl_filter(std::span<const ResponsePair> res, std::size_t v) {
  if (v >= res.size()) throw RangeError("record index out of range");
  return res[v];
}

Bytes dqmr_retrieve(const ResponsePair& res, const DqReceiverState& state, const GroupParams& pk) {
  return dq_retrieve(res, state, pk);
}

AheKeyPair duqmr_r_setup(const SessionConfig& config, Rng& rng) {
  config.validate();
  return ahe_kgen(config.required_plaintext_bits(), rng);
}

std::vector<AheCiphertext> duqmr_t_setup(const AhePublicKey& pk_j, std::size_t z, std::size_t v,
                                         Rng& rng) {
  if (z == 0) throw PreconditionError("z must be positive");
  return ahe_encrypt_one_hot(pk_j, z, v, rng);
}

std::vector<TaggedResponsePair> duqmr_gen_res(const MessageMatrix& matrix, const GroupParams& pk,
                                              const FinalQuery& q1, BytesView r3,
                                              const SessionConfig& config, Rng& rng) {
  require_rows(matrix);
  dq_check_query(pk, q1);
  const Bytes base = rng.bytes(32);
  std::vector<TaggedResponsePair> out;
  out.reserve(matrix.size());
  for (std::size_t t = 0; t < matrix.size(); ++t) {
    Rng row = row_stream(base, t);
    out.push_back(duq_gen_res(matrix[t].first, matrix[t].second, pk, q1, r3, config, row));
  }
  return out;
}

std::array<BigInt, 2> encode_components(const ResponseElement& element) {
  return {element.head, bigint_from_bytes(element.masked)};
}

ResponseElement decode_components(const BigInt& head, const BigInt& masked,
                                  std::size_t masked_bytes) {
  try {
    return {head, bigint_to_bytes(masked, masked_bytes)};
  } catch (const RangeError&) {
    throw DecodeError("decrypted payload exceeds its width");
  }
}

FilteredResponse duqmr_obl_filter(const AhePublicKey& pk_j,
                                  std::span<const TaggedResponsePair> res,
                                  std::span<const AheCiphertext> w) {
  if (res.empty() || res.size() != w.size()) {
    throw PreconditionError("filter: response and selector lengths differ");
  }
  FilteredResponse out;
  std::vector<BigInt> column(res.size());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t t = 0; t < res.size(); ++t) column[t] = encode_components(res[t].e[i])[j];
      out.o[i][j] = ahe_select(pk_j, w, column);
    }
  }
  return out;
}

TaggedResponsePair duqmr_decrypt_filtered(const FilteredResponse& res, const AheKeyPair& keys_j,
                                          const GroupParams& pk, const SessionConfig& config) {
  TaggedResponsePair out;
  for (std::size_t i = 0; i < 2; ++i) {
    const BigInt head = ahe_dec(keys_j, res.o[i][0]);
    const BigInt masked = ahe_dec(keys_j, res.o[i][1]);
    if (!in_subgroup(pk, head)) throw DecodeError("decrypted head is not a group element");
    out.e[i] = decode_components(head, masked, config.tagged_bytes());
  }
  return out;
}

Bytes duqmr_retrieve(const FilteredResponse& res, const DuqBlinds& blinds,
                     const AheKeyPair& keys_j, const ReceiverTag& sp_r, const GroupParams& pk,
                     const SessionConfig& config) {
  return duq_retrieve(duqmr_decrypt_filtered(res, keys_j, pk, config), blinds, sp_r, pk, config);
}

}  // namespace oblivis
