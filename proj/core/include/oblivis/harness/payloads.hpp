#pragma once

#include <cstddef>
#include <vector>

#include "oblivis/ahe.hpp"
#include "oblivis/compiler.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/mr_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/one_of_n.hpp"
#include "oblivis/supersonic.hpp"

/// Payload encodings for each envelope kind. Group elements and
/// ciphertexts are written at the fixed width of their modulus so that
/// payload sizes never depend on the values carried.
namespace oblivis::harness::payload {

Bytes encode_request(const GroupParams& pk, const DelegationRequest& req, bool with_share);
struct DecodedRequest {
  std::optional<bool> share;
  BigInt blind;
};
DecodedRequest decode_request(BytesView data);

Bytes encode_bit(bool bit);
bool decode_bit(BytesView data);

Bytes encode_element_query(const GroupParams& pk, const BigInt& beta0);
BigInt decode_element_query(BytesView data);

Bytes encode_indexed_query(const GroupParams& pk, const BigInt& beta0, std::size_t v);
std::pair<BigInt, std::size_t> decode_indexed_query(BytesView data);

Bytes encode_partial(const GroupParams& pk, const PartialQuery& q);
PartialQuery decode_partial(BytesView data);

Bytes encode_final(const GroupParams& pk, const FinalQuery& q);
FinalQuery decode_final(BytesView data);

Bytes encode_tag(BytesView r3);
Bytes decode_tag(BytesView data);

Bytes encode_receiver_tag(const ReceiverTag& tag);
ReceiverTag decode_receiver_tag(BytesView data);

Bytes encode_pair(const GroupParams& pk, const std::array<ResponseElement, 2>& e);
std::array<ResponseElement, 2> decode_pair(BytesView data);

/// Count-prefixed list of pairs.
Bytes encode_pairs(const GroupParams& pk, const std::vector<std::array<ResponseElement, 2>>& pairs);
std::vector<std::array<ResponseElement, 2>> decode_pairs(BytesView data);

Bytes encode_ciphertexts(const AhePublicKey& pk, std::span<const AheCiphertext> cts);
std::vector<AheCiphertext> decode_ciphertexts(BytesView data);

Bytes encode_filtered(const AhePublicKey& pk, const FilteredResponse& res);
FilteredResponse decode_filtered(BytesView data);

Bytes encode_generic_response(const GroupParams& pk, const NpOneOfN::Response& res);
NpOneOfN::Response decode_generic_response(BytesView data);

Bytes encode_compiled_query(const GroupParams& pk, const Compiled<NpOneOfN>::Query& q);
/// Rebuilds the query; the receiver key travels separately.
Compiled<NpOneOfN>::Query decode_compiled_query(BytesView data, const AhePublicKey& receiver_key);

Bytes encode_pad_keys(const PadKeys& keys);
PadKeys decode_pad_keys(BytesView data);

Bytes encode_swapped(const SwappedPair& pair);
SwappedPair decode_swapped(BytesView data);

Bytes encode_blob(BytesView data);
Bytes decode_blob(BytesView data);

}  // namespace oblivis::harness::payload
