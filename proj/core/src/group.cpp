#include "oblivis/group.hpp"

#include <openssl/bn.h>

#include <mutex>
#include <vector>

#include "oblivis/codec.hpp"
#include "oblivis/counters.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/hash.hpp"

namespace oblivis {

namespace {

constexpr int kPrimalityReps = 32;
constexpr std::size_t kSearchWindow = 1u << 16;
constexpr int kMaxRestarts = 256;
constexpr std::uint8_t kHashToGroupDomain = 0x43;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1u << 15;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 3; i < kLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool probably_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityReps) > 0;
}

Bytes label_bytes(std::string_view label) { return Bytes(label.begin(), label.end()); }

const Bytes& c_label() {
  static const Bytes label = label_bytes("oblivis-C");
  return label;
}

}  // namespace

bool GroupParams::operator==(const GroupParams& other) const {
  return p == other.p && q == other.q && g == other.g && C == other.C;
}

GroupParams gen_group(std::size_t group_bits, BytesView seed) {
  if (group_bits < 256) throw PreconditionError("gen_group: group_bits must be at least 256");
  Rng rng = Rng(seed).derive("safe-prime");
  const auto& primes = small_primes();
  std::vector<unsigned long> residues(primes.size());
  const std::size_t q_bits = group_bits - 1;

  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    BigInt q = rng.uniform_bits(q_bits);
    mpz_setbit(q.get_mpz_t(), q_bits - 1);
    mpz_setbit(q.get_mpz_t(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      residues[i] = mpz_fdiv_ui(q.get_mpz_t(), primes[i]);
    }
    for (std::size_t step = 0; step < kSearchWindow; ++step) {
      const unsigned long offset = 2 * step;
      bool sieved = true;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const unsigned long r = primes[i];
        const unsigned long rq = (residues[i] + offset) % r;
        // q' = 0 mod r, or p' = 2q' + 1 = 0 mod r.
        if (rq == 0 || rq == (r - 1) / 2) {
          sieved = false;
          break;
        }
      }
      if (!sieved) continue;
      BigInt candidate = q + offset;
      if (bit_length(candidate) != q_bits) break;
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 1) == 0) continue;
      BigInt p = 2 * candidate + 1;
      if (mpz_probab_prime_p(p.get_mpz_t(), 1) == 0) continue;
      if (!probably_prime(candidate) || !probably_prime(p)) continue;
      return group_from_safe_prime(p, 4);
    }
  }
  throw GenerationError("gen_group: no safe prime found within the search budget");
}

BigInt hash_to_subgroup(const BigInt& p, const BigInt& g, BytesView label) {
  const std::size_t width = byte_length(p);
  for (std::uint32_t counter = 0;; ++counter) {
    ByteWriter w;
    w.blob(label).bigint(p, width).bigint(g, width).u32(counter);
    const Bytes digest = shake256(kHashToGroupDomain, w.bytes(), width + 16);
    BigInt x = bigint_from_bytes(digest) % p;
    BigInt c = (x * x) % p;
    if (c != 0 && c != 1) return c;
  }
}

GroupParams group_from_safe_prime(const BigInt& p, const BigInt& g) {
  GroupParams params;
  params.p = p;
  params.q = (p - 1) / 2;
  params.g = g;
  params.C = hash_to_subgroup(p, g, c_label());
  validate_group(params);
  return params;
}

GroupParams standard_group_2048() {
  static std::once_flag once;
  static GroupParams params;
  std::call_once(once, [] {
    BIGNUM* bn = BN_get_rfc3526_prime_2048(nullptr);
    if (bn == nullptr) throw GenerationError("standard_group_2048: prime unavailable");
    Bytes raw(static_cast<std::size_t>(BN_num_bytes(bn)));
    BN_bn2bin(bn, raw.data());
    BN_free(bn);
    params = group_from_safe_prime(bigint_from_bytes(raw), 4);
  });
  return params;
}

GroupParams init_group(const SessionConfig& config, Rng& rng) {
  config.validate();
  if (config.standard_group) return standard_group_2048();
  const Bytes seed = rng.bytes(32);
  return gen_group(config.group_bits, seed);
}

void validate_group(const GroupParams& params) {
  if (params.p <= 5 || params.p != 2 * params.q + 1) {
    throw PreconditionError("group: p must equal 2q + 1");
  }
  if (!probably_prime(params.q) || !probably_prime(params.p)) {
    throw PreconditionError("group: p is not a safe prime");
  }
  if (!in_subgroup(params, params.g) || params.g == 1) {
    throw PreconditionError("group: g is not a generator of the order-q subgroup");
  }
  if (!in_subgroup(params, params.C) || params.C == 1) {
    throw PreconditionError("group: C is not a non-identity subgroup element");
  }
}

BigInt lane_constant(const GroupParams& params, std::size_t lane) {
  if (lane == 0) throw PreconditionError("lane_constant: lanes start at 1");
  if (lane == 1) return params.C;
  ByteWriter w;
  w.raw(c_label()).u64(lane);
  return hash_to_subgroup(params.p, params.g, w.bytes());
}

bool in_subgroup(const GroupParams& params, const BigInt& x) {
  if (x <= 0 || x >= params.p) return false;
  // For a safe prime the quadratic residues are exactly the order-q subgroup.
  return mpz_jacobi(x.get_mpz_t(), params.p.get_mpz_t()) == 1;
}

void require_member(const GroupParams& params, const BigInt& x) {
  if (!in_subgroup(params, x)) throw MembershipError("value is not a subgroup element");
}

BigInt group_exp(const GroupParams& params, const BigInt& base, const BigInt& exponent) {
  require_member(params, base);
  BigInt e;
  mpz_mod(e.get_mpz_t(), exponent.get_mpz_t(), params.q.get_mpz_t());
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), params.p.get_mpz_t());
  counters::count_exponentiation();
  return out;
}

BigInt group_pow_g(const GroupParams& params, const BigInt& exponent) {
  return group_exp(params, params.g, exponent);
}

BigInt group_mul(const GroupParams& params, const BigInt& a, const BigInt& b) {
  counters::count_multiplication();
  return (a * b) % params.p;
}

BigInt group_div(const GroupParams& params, const BigInt& a, const BigInt& b) {
  return group_mul(params, a, group_exp(params, b, params.q - 1));
}

BigInt group_div_g(const GroupParams& params, const BigInt& a, const BigInt& r) {
  BigInt e;
  mpz_mod(e.get_mpz_t(), r.get_mpz_t(), params.q.get_mpz_t());
  return group_mul(params, a, group_pow_g(params, params.q - e));
}

BigInt random_exponent(const GroupParams& params, Rng& rng) {
  return rng.uniform_below(params.q);
}

BigInt random_nonzero_exponent(const GroupParams& params, Rng& rng) {
  return rng.uniform_below(params.q - 1) + 1;
}

Bytes encode_element(const GroupParams& params, const BigInt& x) {
  return bigint_to_bytes(x, params.element_bytes());
}

Bytes serialize_group(const GroupParams& params) {
  ByteWriter w;
  w.bigint(params.p).bigint(params.q).bigint(params.g).bigint(params.C);
  return std::move(w).bytes();
}

GroupParams deserialize_group(BytesView data) {
  ByteReader r(data);
  GroupParams params;
  params.p = r.bigint();
  params.q = r.bigint();
  params.g = r.bigint();
  params.C = r.bigint();
  r.expect_end();
  // Structural checks only; primality is the job of validate_group.
  if (params.p <= 5 || params.p != 2 * params.q + 1 || !in_subgroup(params, params.g) ||
      params.g == 1 || !in_subgroup(params, params.C) || params.C == 1) {
    throw DecodeError("group parameters are malformed");
  }
  return params;
}

}  // namespace oblivis
