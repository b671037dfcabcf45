#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "oblivis/ahe.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"

namespace oblivis {

/// S's z message pairs; R ends up with m_{s,v} = matrix[v] component s.
using MessageMatrix = std::vector<std::pair<Message, Message>>;

/// S.GenRes over every row: z untagged pairs for the same final query.
std::vector<ResponsePair> dqmr_gen_res(const MessageMatrix& matrix, const GroupParams& pk,
                                       const FinalQuery& q1, Rng& rng);

/// P1.OblFilter: forwards pair v only.
ResponsePair dqmr_obl_filter(std::span<const ResponsePair> res, std::size_t v);

Bytes dqmr_retrieve(const ResponsePair& res, const DqReceiverState& state, const GroupParams& pk);

/// Four ciphertexts o[i][j]: component j of slot i of the selected pair.
struct FilteredResponse {
  std::array<std::array<AheCiphertext, 2>, 2> o;
  bool operator==(const FilteredResponse&) const = default;
};

/// R.Setup: an AHE key sized for group elements and sigma + lambda bit payloads.
AheKeyPair duqmr_r_setup(const SessionConfig& config, Rng& rng);

/// T.Setup: encrypted one-hot vector of length z selecting row v.
std::vector<AheCiphertext> duqmr_t_setup(const AhePublicKey& pk_j, std::size_t z, std::size_t v,
                                         Rng& rng);

/// S.GenRes over every row: z tagged pairs, each permuted independently.
std::vector<TaggedResponsePair> duqmr_gen_res(const MessageMatrix& matrix, const GroupParams& pk,
                                              const FinalQuery& q1, BytesView r3,
                                              const SessionConfig& config, Rng& rng);

/// P1.OblFilter: o[i][j] = sum_t e[t].slot(i).component(j) * w[t] under AHE.
FilteredResponse duqmr_obl_filter(const AhePublicKey& pk_j,
                                  std::span<const TaggedResponsePair> res,
                                  std::span<const AheCiphertext> w);

/// Decrypts the filtered ciphertexts back into a tagged pair.
TaggedResponsePair duqmr_decrypt_filtered(const FilteredResponse& res, const AheKeyPair& keys_j,
                                          const GroupParams& pk, const SessionConfig& config);

Bytes duqmr_retrieve(const FilteredResponse& res, const DuqBlinds& blinds,
                     const AheKeyPair& keys_j, const ReceiverTag& sp_r, const GroupParams& pk,
                     const SessionConfig& config);

/// Integer encoding of a response slot: (head, masked read big-endian).
std::array<BigInt, 2> encode_components(const ResponseElement& element);
ResponseElement decode_components(const BigInt& head, const BigInt& masked,
                                  std::size_t masked_bytes);

}  // namespace oblivis
