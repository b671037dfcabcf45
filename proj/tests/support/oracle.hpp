#pragma once

// Straight-line reference computations for tests. Everything here uses the
// GMP C interface and OpenSSL EVP directly so expected values never pass
// through the library under test.

#include <gmp.h>
#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Bytes = std::vector<std::uint8_t>;

/// Owning wrapper over mpz_t with just enough surface for the oracles.
class Z {
 public:
  Z() { mpz_init(v_); }
  explicit Z(unsigned long x) { mpz_init_set_ui(v_, x); }
  explicit Z(const char* dec) {
    if (mpz_init_set_str(v_, dec, 10) != 0) throw std::invalid_argument("bad integer literal");
  }
  explicit Z(const mpz_t x) { mpz_init_set(v_, x); }
  Z(const Z& o) { mpz_init_set(v_, o.v_); }
  Z& operator=(const Z& o) {
    mpz_set(v_, o.v_);
    return *this;
  }
  ~Z() { mpz_clear(v_); }

  mpz_ptr get() { return v_; }
  mpz_srcptr get() const { return v_; }
  bool operator==(const Z& o) const { return mpz_cmp(v_, o.v_) == 0; }
  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

 private:
  mpz_t v_;
};

inline Z powm(const Z& b, const Z& e, const Z& m) {
  Z out;
  mpz_powm(out.get(), b.get(), e.get(), m.get());
  return out;
}

inline Z mulm(const Z& a, const Z& b, const Z& m) {
  Z out;
  mpz_mul(out.get(), a.get(), b.get());
  mpz_mod(out.get(), out.get(), m.get());
  return out;
}

inline Z invm(const Z& a, const Z& m) {
  Z out;
  if (mpz_invert(out.get(), a.get(), m.get()) == 0) throw std::domain_error("not invertible");
  return out;
}

/// a*x + b*y mod m for small signed coefficients.
inline Z lin(long a, const Z& x, long b, const Z& y, const Z& m) {
  Z out;
  Z t;
  mpz_mul_si(out.get(), x.get(), a);
  mpz_mul_si(t.get(), y.get(), b);
  mpz_add(out.get(), out.get(), t.get());
  mpz_mod(out.get(), out.get(), m.get());
  return out;
}

inline std::size_t nbytes(const Z& x) { return (mpz_sizeinbase(x.get(), 2) + 7) / 8; }

/// Unsigned big-endian, left-padded with zeros to `width` bytes.
inline Bytes be(const Z& x, std::size_t width) {
  Bytes out(width, 0);
  std::size_t count = 0;
  std::vector<std::uint8_t> tmp(nbytes(x) + 1);
  mpz_export(tmp.data(), &count, 1, 1, 1, 0, x.get());
  if (count > width) throw std::length_error("value wider than field");
  for (std::size_t i = 0; i < count; ++i) out[width - count + i] = tmp[i];
  return out;
}

inline Z from_be(const Bytes& b) {
  Z out;
  if (!b.empty()) mpz_import(out.get(), b.size(), 1, 1, 1, 0, b.data());
  return out;
}

inline Bytes shake256(std::uint8_t domain, const Bytes& input, std::size_t out_bytes) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  Bytes out(out_bytes);
  const bool ok = ctx != nullptr && EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, &domain, 1) == 1 &&
                  EVP_DigestUpdate(ctx, input.data(), input.size()) == 1 &&
                  EVP_DigestFinalXOF(ctx, out.data(), out.size()) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("EVP failure");
  return out;
}

inline Bytes xor_of(const Bytes& a, const Bytes& b) {
  if (a.size() != b.size()) throw std::length_error("xor length mismatch");
  Bytes out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline void put_u32(Bytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

/// 4-byte big-endian length, payload, zero fill to sigma/8 bytes.
inline Bytes pad(const Bytes& payload, std::size_t sigma_bits) {
  Bytes out;
  put_u32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  out.resize(sigma_bits / 8, 0);
  return out;
}

struct Group {
  Z p, q, g, C;
  std::size_t width() const { return nbytes(p); }
};

/// The constant C: square a SHAKE256 output over (label, p, g, counter),
/// retrying while the square is 0 or 1.
inline Z derive_C(const Z& p, const Z& g) {
  const std::string label = "oblivis-C";
  const std::size_t w = nbytes(p);
  for (std::uint32_t counter = 0;; ++counter) {
    Bytes in;
    put_u32(in, static_cast<std::uint32_t>(label.size()));
    in.insert(in.end(), label.begin(), label.end());
    put_u32(in, static_cast<std::uint32_t>(w));
    const Bytes pb = be(p, w);
    in.insert(in.end(), pb.begin(), pb.end());
    put_u32(in, static_cast<std::uint32_t>(w));
    const Bytes gb = be(g, w);
    in.insert(in.end(), gb.begin(), gb.end());
    put_u32(in, counter);
    Z x = from_be(shake256(0x43, in, w + 16));
    mpz_mod(x.get(), x.get(), p.get());
    Z c = mulm(x, x, p);
    if (mpz_cmp_ui(c.get(), 1) > 0) return c;
  }
}

inline Group group(const Z& p, unsigned long g) {
  Group out;
  out.p = p;
  mpz_sub_ui(out.q.get(), p.get(), 1);
  mpz_fdiv_q_2exp(out.q.get(), out.q.get(), 1);
  out.g = Z(g);
  out.C = derive_C(out.p, out.g);
  return out;
}

inline Z g_pow(const Group& G, const Z& e) { return powm(G.g, e, G.p); }

/// C^c * g^e with c in {0, 1}, computed with an explicit inverse rather
/// than exponent negation.
inline Z c_times_g(const Group& G, int c, long r2_coef, const Z& r2, long r1_coef, const Z& r1) {
  Z e;
  Z t;
  mpz_mul_si(e.get(), r2.get(), r2_coef);
  mpz_mul_si(t.get(), r1.get(), r1_coef);
  mpz_add(e.get(), e.get(), t.get());
  Z out;
  if (mpz_sgn(e.get()) < 0) {
    mpz_neg(e.get(), e.get());
    out = invm(powm(G.g, e, G.p), G.p);
  } else {
    out = powm(G.g, e, G.p);
  }
  return c == 1 ? mulm(out, G.C, G.p) : out;
}

/// One entry of the symbolic exponent table: g^{c*a + r2c*r2 + r1c*r1}
/// where g^a = C.
struct Term {
  int c;
  long r2c;
  long r1c;
};

struct TableRow {
  int s1;
  int s2;
  Term delta0, delta1, beta0, beta1;
};

/// Partial and final queries for each pair of shares, written out by hand.
inline const std::array<TableRow, 4>& exponent_table() {
  static const std::array<TableRow, 4> rows{{
      {0, 0, {0, 1, 0}, {1, -1, 0}, {0, 1, 1}, {1, -1, -1}},
      {0, 1, {1, -1, 0}, {0, 1, 0}, {1, -1, 1}, {0, 1, -1}},
      {1, 0, {0, 1, 0}, {1, -1, 0}, {1, -1, -1}, {0, 1, 1}},
      {1, 1, {1, -1, 0}, {0, 1, 0}, {0, 1, -1}, {1, -1, 1}},
  }};
  return rows;
}

inline Z eval(const Group& G, const Term& t, const Z& r1, const Z& r2) {
  return c_times_g(G, t.c, t.r2c, r2, t.r1c, r1);
}

/// One masked slot: (g^y, SHAKE256(domain || beta^y) xor padded).
struct Slot {
  Z head;
  Bytes masked;
};

inline Slot mask_slot(const Group& G, const Z& beta, const Z& y, const Bytes& padded, std::uint8_t domain) {
  const Z key = powm(beta, y, G.p);
  const Bytes mask = shake256(domain, be(key, G.width()), padded.size());
  return {g_pow(G, y), xor_of(mask, padded)};
}

/// Row of the swap table: shares, the secret, and the index of the
/// message that survives both swaps.
struct SwapRow {
  int s1;
  int s2;
  int s;
  int survivor;
};

inline const std::array<SwapRow, 4>& swap_table() {
  static const std::array<SwapRow, 4> rows{{{0, 0, 0, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 0}}};
  return rows;
}

/// Paillier with generator N+1: (1 + mN) r^N mod N^2.
inline Z paillier_enc(const Z& n, const Z& m, const Z& r) {
  Z n2;
  mpz_mul(n2.get(), n.get(), n.get());
  Z a;
  mpz_mul(a.get(), m.get(), n.get());
  mpz_add_ui(a.get(), a.get(), 1);
  return mulm(a, powm(r, n, n2), n2);
}

/// Deterministic trial-division primality for small integers.
inline bool small_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline unsigned long small_powm(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long out = 1;
  for (unsigned long i = 0; i < e; ++i) out = out * b % m;
  return out;
}

}  // namespace oracle
