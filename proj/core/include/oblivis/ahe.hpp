#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oblivis/bytes.hpp"
#include "oblivis/rng.hpp"

namespace oblivis {

using KeyFingerprint = std::array<std::uint8_t, 8>;

/// Paillier public key with generator N + 1.
struct AhePublicKey {
  BigInt n;
  BigInt n_squared;
  KeyFingerprint fingerprint{};

  static AhePublicKey from_modulus(const BigInt& n);
  /// Every integer below 2^plaintext_bits() is a valid plaintext.
  std::size_t plaintext_bits() const { return bit_length(n) - 1; }
  std::size_t ciphertext_bytes() const { return byte_length(n_squared); }
  bool operator==(const AhePublicKey& other) const { return n == other.n; }
};

struct AheSecretKey {
  BigInt lambda;
  BigInt mu;
  KeyFingerprint fingerprint{};
};

struct AheKeyPair {
  AhePublicKey pk;
  AheSecretKey sk;
};

struct AheCiphertext {
  BigInt value;
  KeyFingerprint fingerprint{};

  bool operator==(const AheCiphertext& other) const {
    return value == other.value && fingerprint == other.fingerprint;
  }
};

/// Generates a key whose plaintext space holds every integer below
/// 2^plaintext_bits.
AheKeyPair ahe_kgen(std::size_t plaintext_bits, Rng& rng);

/// Throws RangeError unless 0 <= m < N.
AheCiphertext ahe_enc(const AhePublicKey& pk, const BigInt& m, Rng& rng);

/// Encryption with caller-chosen randomness r in Z*_N.
AheCiphertext ahe_enc_with(const AhePublicKey& pk, const BigInt& m, const BigInt& r);

BigInt ahe_dec(const AheKeyPair& keys, const AheCiphertext& c);

/// Dec(hom_add(c1, c2)) = m1 + m2 mod N.
AheCiphertext ahe_hom_add(const AhePublicKey& pk, const AheCiphertext& c1,
                          const AheCiphertext& c2);

/// Dec(hom_scale(c, k)) = k * m mod N.
AheCiphertext ahe_hom_scale(const AhePublicKey& pk, const AheCiphertext& c, const BigInt& k);

/// Encryption of 0 with randomness 1, the neutral element for hom_add.
AheCiphertext ahe_zero(const AhePublicKey& pk);

/// Encrypted one-hot vector: slot `index` holds 1, every other slot 0.
std::vector<AheCiphertext> ahe_encrypt_one_hot(const AhePublicKey& pk, std::size_t size,
                                               std::size_t index, Rng& rng);

/// Sum over t of plaintexts[t] * selector[t], computed homomorphically.
/// With a one-hot selector this encrypts plaintexts[index].
AheCiphertext ahe_select(const AhePublicKey& pk, std::span<const AheCiphertext> selector,
                         std::span<const BigInt> plaintexts);

/// Throws CapacityError unless 0 <= m < N.
void ahe_require_plaintext(const AhePublicKey& pk, const BigInt& m);

Bytes serialize_public_key(const AhePublicKey& pk);
AhePublicKey deserialize_public_key(BytesView data);

/// Fixed-width length-prefixed integer followed by the key fingerprint.
Bytes serialize_ciphertext(const AhePublicKey& pk, const AheCiphertext& c);
AheCiphertext deserialize_ciphertext(BytesView data);

}  // namespace oblivis
