#pragma once

#include <cstddef>
#include <string_view>

#include "oblivis/bytes.hpp"
#include "oblivis/config.hpp"
#include "oblivis/rng.hpp"

namespace oblivis {

/// Safe-prime group p = 2q + 1. Elements live in the subgroup of
/// quadratic residues, which has prime order q; exponents are taken mod q.
/// C is a subgroup element whose discrete log is unknown to everyone.
struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt g;
  BigInt C;

  std::size_t element_bytes() const { return byte_length(p); }
  bool operator==(const GroupParams& other) const;
};

/// Deterministically generates a group from a seed. group_bits is the bit
/// length of p and must be at least 256.
GroupParams gen_group(std::size_t group_bits, BytesView seed);

/// Builds a group around a known safe prime; C is derived by hashing.
GroupParams group_from_safe_prime(const BigInt& p, const BigInt& g);

/// The 2048-bit MODP safe prime with generator 4.
GroupParams standard_group_2048();

/// S.Init: picks the standard group or generates one from the stream.
GroupParams init_group(const SessionConfig& config, Rng& rng);

/// Throws PreconditionError unless p is a safe prime, q = (p - 1) / 2,
/// and g, C are non-identity subgroup elements.
void validate_group(const GroupParams& params);

/// Maps a label onto a subgroup element by hashing into Z_p and squaring.
BigInt hash_to_subgroup(const BigInt& p, const BigInt& g, BytesView label);

/// Public constant for lane i of the 1-of-n construction; lane 1 is C.
BigInt lane_constant(const GroupParams& params, std::size_t lane);

bool in_subgroup(const GroupParams& params, const BigInt& x);
void require_member(const GroupParams& params, const BigInt& x);

/// base^exponent mod p with the exponent reduced mod q. Counts one
/// exponentiation. Throws MembershipError for a base outside the subgroup.
BigInt group_exp(const GroupParams& params, const BigInt& base, const BigInt& exponent);

/// g^exponent.
BigInt group_pow_g(const GroupParams& params, const BigInt& exponent);

BigInt group_mul(const GroupParams& params, const BigInt& a, const BigInt& b);

/// a / b computed as a * b^(q-1).
BigInt group_div(const GroupParams& params, const BigInt& a, const BigInt& b);

/// a / g^r computed as a * g^(q-r).
BigInt group_div_g(const GroupParams& params, const BigInt& a, const BigInt& r);

BigInt random_exponent(const GroupParams& params, Rng& rng);
BigInt random_nonzero_exponent(const GroupParams& params, Rng& rng);

/// Fixed-width big-endian encoding used as random-oracle input.
Bytes encode_element(const GroupParams& params, const BigInt& x);

Bytes serialize_group(const GroupParams& params);
GroupParams deserialize_group(BytesView data);

}  // namespace oblivis
