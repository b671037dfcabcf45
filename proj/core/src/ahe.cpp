#include "oblivis/ahe.hpp"

#include <cstring>

#include "oblivis/codec.hpp"
#include "oblivis/counters.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/hash.hpp"

namespace oblivis {

namespace {

constexpr std::uint8_t kFingerprintDomain = 0x4b;

KeyFingerprint fingerprint_of(const BigInt& n) {
  const Bytes digest = shake256(kFingerprintDomain, bigint_to_bytes(n), 8);
  KeyFingerprint fp{};
  std::memcpy(fp.data(), digest.data(), fp.size());
  return fp;
}

void require_key(const AhePublicKey& pk, const AheCiphertext& c) {
  if (c.fingerprint != pk.fingerprint) throw KeyMismatchError("ciphertext under a different key");
}

/// Random prime with exactly `bits` bits and its top two bits set, so the
/// product of two such primes has exactly 2 * bits bits.
BigInt random_prime(std::size_t bits, Rng& rng) {
  for (;;) {
    BigInt candidate = rng.uniform_bits(bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), bits - 2);
    mpz_setbit(candidate.get_mpz_t(), 0);
    BigInt prime;
    mpz_nextprime(prime.get_mpz_t(), candidate.get_mpz_t());
    if (bit_length(prime) == bits) return prime;
  }
}

}  // namespace

AhePublicKey AhePublicKey::from_modulus(const BigInt& n) {
  if (n < 15 || mpz_even_p(n.get_mpz_t())) throw PreconditionError("AHE modulus is malformed");
  AhePublicKey pk;
  pk.n = n;
  pk.n_squared = n * n;
  pk.fingerprint = fingerprint_of(n);
  return pk;
}

AheKeyPair ahe_kgen(std::size_t plaintext_bits, Rng& rng) {
  if (plaintext_bits < 64) throw PreconditionError("ahe_kgen: plaintext_bits must be at least 64");
  // N needs plaintext_bits + 1 bits so that every value below 2^plaintext_bits is below N.
  const std::size_t prime_bits = (plaintext_bits + 2) / 2;
  for (;;) {
    const BigInt p = random_prime(prime_bits, rng);
    const BigInt q = random_prime(prime_bits, rng);
    if (p == q) continue;
    const BigInt n = p * q;
    const BigInt p1 = p - 1;
    const BigInt q1 = q - 1;
    BigInt phi = p1 * q1;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());
    if (g != 1) continue;
    AheKeyPair keys;
    keys.pk = AhePublicKey::from_modulus(n);
    mpz_lcm(keys.sk.lambda.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
    if (mpz_invert(keys.sk.mu.get_mpz_t(), keys.sk.lambda.get_mpz_t(), n.get_mpz_t()) == 0) {
      continue;
    }
    keys.sk.fingerprint = keys.pk.fingerprint;
    return keys;
  }
}

void ahe_require_plaintext(const AhePublicKey& pk, const BigInt& m) {
  if (m < 0 || m >= pk.n) throw CapacityError("plaintext outside Z_N");
}

AheCiphertext ahe_enc_with(const AhePublicKey& pk, const BigInt& m, const BigInt& r) {
  if (m < 0 || m >= pk.n) throw RangeError("ahe_enc: plaintext outside Z_N");
  // (1 + N)^m = 1 + mN mod N^2.
  BigInt rn;
  mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t(), pk.n_squared.get_mpz_t());
  AheCiphertext c;
  c.value = ((1 + m * pk.n) * rn) % pk.n_squared;
  c.fingerprint = pk.fingerprint;
  counters::count_ahe_operation();
  return c;
}

AheCiphertext ahe_enc(const AhePublicKey& pk, const BigInt& m, Rng& rng) {
  BigInt r;
  BigInt g;
  do {
    r = rng.uniform_below(pk.n);
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
  } while (r == 0 || g != 1);
  return ahe_enc_with(pk, m, r);
}

BigInt ahe_dec(const AheKeyPair& keys, const AheCiphertext& c) {
  require_key(keys.pk, c);
  if (c.value <= 0 || c.value >= keys.pk.n_squared) throw DecodeError("ciphertext out of range");
  BigInt u;
  mpz_powm(u.get_mpz_t(), c.value.get_mpz_t(), keys.sk.lambda.get_mpz_t(),
           keys.pk.n_squared.get_mpz_t());
  const BigInt l = (u - 1) / keys.pk.n;
  counters::count_ahe_operation();
  return (l * keys.sk.mu) % keys.pk.n;
}

AheCiphertext ahe_hom_add(const AhePublicKey& pk, const AheCiphertext& c1,
                          const AheCiphertext& c2) {
  require_key(pk, c1);
  require_key(pk, c2);
  counters::count_ahe_operation();
  return {(c1.value * c2.value) % pk.n_squared, pk.fingerprint};
}

AheCiphertext ahe_hom_scale(const AhePublicKey& pk, const AheCiphertext& c, const BigInt& k) {
  require_key(pk, c);
  BigInt e;
  mpz_mod(e.get_mpz_t(), k.get_mpz_t(), pk.n.get_mpz_t());
  AheCiphertext out;
  mpz_powm(out.value.get_mpz_t(), c.value.get_mpz_t(), e.get_mpz_t(), pk.n_squared.get_mpz_t());
  out.fingerprint = pk.fingerprint;
  counters::count_ahe_operation();
  return out;
}

AheCiphertext ahe_zero(const AhePublicKey& pk) { return {BigInt(1), pk.fingerprint}; }

std::vector<AheCiphertext> ahe_encrypt_one_hot(const AhePublicKey& pk, std::size_t size,
                                               std::size_t index, Rng& rng) {
  if (index >= size) throw RangeError("one-hot index out of range");
  std::vector<AheCiphertext> out;
  out.reserve(size);
  for (std::size_t t = 0; t < size; ++t) out.push_back(ahe_enc(pk, t == index ? 1 : 0, rng));
  return out;
}

AheCiphertext ahe_select(const AhePublicKey& pk, std::span<const AheCiphertext> selector,
                         std::span<const BigInt> plaintexts) {
  if (selector.size() != plaintexts.size()) {
    throw PreconditionError("ahe_select: selector and plaintext counts differ");
  }
  AheCiphertext acc = ahe_zero(pk);
  for (std::size_t t = 0; t < selector.size(); ++t) {
    ahe_require_plaintext(pk, plaintexts[t]);
    acc = ahe_hom_add(pk, acc, ahe_hom_scale(pk, selector[t], plaintexts[t]));
  }
  return acc;
}

Bytes serialize_public_key(const AhePublicKey& pk) {
  ByteWriter w;
  w.bigint(pk.n);
  return std::move(w).bytes();
}

AhePublicKey deserialize_public_key(BytesView data) {
  ByteReader r(data);
  BigInt n = r.bigint();
  r.expect_end();
  try {
    return AhePublicKey::from_modulus(n);
  } catch (const PreconditionError& e) {
    throw DecodeError(e.what());
  }
}

Bytes serialize_ciphertext(const AhePublicKey& pk, const AheCiphertext& c) {
  require_key(pk, c);
  ByteWriter w;
  w.bigint(c.value, pk.ciphertext_bytes()).raw(c.fingerprint);
  return std::move(w).bytes();
}

AheCiphertext deserialize_ciphertext(BytesView data) {
  ByteReader r(data);
  AheCiphertext c;
  c.value = r.bigint();
  const Bytes fp = r.raw(8);
  r.expect_end();
  std::memcpy(c.fingerprint.data(), fp.data(), fp.size());
  return c;
}

}  // namespace oblivis
