#include "oblivis/rng.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <cstring>

#include "oblivis/errors.hpp"
#include "oblivis/hash.hpp"

namespace oblivis {

namespace {
constexpr std::size_t kBufferBytes = 4096;

std::array<std::uint8_t, Rng::kKeyBytes> key_from(BytesView material) {
  const Bytes digest = shake256(0x52, material, Rng::kKeyBytes);
  std::array<std::uint8_t, Rng::kKeyBytes> key{};
  std::memcpy(key.data(), digest.data(), key.size());
  return key;
}
}  // namespace

struct Rng::Stream {
  EVP_CIPHER_CTX* ctx = nullptr;
  std::array<std::uint8_t, kBufferBytes> buffer{};
  std::size_t pos = kBufferBytes;

  ~Stream() { EVP_CIPHER_CTX_free(ctx); }
};

Rng::Rng(BytesView seed) : Rng(key_from(seed)) {}

Rng::Rng(const std::array<std::uint8_t, kKeyBytes>& key) : key_(key), stream_(new Stream) {
  stream_->ctx = EVP_CIPHER_CTX_new();
  // The 16-byte IV is a 32-bit block counter followed by a 96-bit nonce.
  std::array<std::uint8_t, 16> iv{};
  if (stream_->ctx == nullptr ||
      EVP_EncryptInit_ex(stream_->ctx, EVP_chacha20(), nullptr, key_.data(), iv.data()) != 1) {
    throw Error("Rng: ChaCha20 initialisation failed");
  }
}

Rng Rng::from_u64(std::uint64_t seed) { return Rng(seed_bytes(seed)); }

Rng Rng::from_entropy() {
  std::array<std::uint8_t, kKeyBytes> seed{};
  if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1) {
    throw Error("Rng: system entropy unavailable");
  }
  return Rng(seed);
}

Rng::Rng(Rng&&) noexcept = default;
Rng& Rng::operator=(Rng&&) noexcept = default;
Rng::~Rng() = default;

Rng Rng::derive(std::string_view label) const {
  Bytes material(key_.begin(), key_.end());
  material.push_back(0x00);
  material.insert(material.end(), label.begin(), label.end());
  return Rng(key_from(material));
}

Rng Rng::derive(std::string_view label, std::uint64_t index) const {
  Bytes material(key_.begin(), key_.end());
  material.push_back(0x01);
  const Bytes idx = seed_bytes(index);
  material.insert(material.end(), idx.begin(), idx.end());
  material.insert(material.end(), label.begin(), label.end());
  return Rng(key_from(material));
}

void Rng::refill() {
  static const std::array<std::uint8_t, kBufferBytes> zeros{};
  int out_len = 0;
  if (EVP_EncryptUpdate(stream_->ctx, stream_->buffer.data(), &out_len, zeros.data(),
                        static_cast<int>(zeros.size())) != 1 ||
      out_len != static_cast<int>(kBufferBytes)) {
    throw Error("Rng: keystream generation failed");
  }
  stream_->pos = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (stream_->pos == kBufferBytes) refill();
    const std::size_t n = std::min(out.size() - done, kBufferBytes - stream_->pos);
    std::memcpy(out.data() + done, stream_->buffer.data() + stream_->pos, n);
    stream_->pos += n;
    done += n;
  }
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

bool Rng::bit() {
  std::uint8_t b = 0;
  fill({&b, 1});
  return (b & 1) != 0;
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> buf{};
  fill(buf);
  std::uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

BigInt Rng::uniform_bits(std::size_t bits) {
  if (bits == 0) return 0;
  Bytes buf = bytes((bits + 7) / 8);
  const std::size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<std::uint8_t>(0xff >> excess);
  return bigint_from_bytes(buf);
}

BigInt Rng::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw PreconditionError("uniform_below: bound must be positive");
  const std::size_t bits = bit_length(bound);
  for (;;) {
    BigInt candidate = uniform_bits(bits);
    if (candidate < bound) return candidate;
  }
}

Bytes seed_bytes(std::uint64_t seed) {
  Bytes out(8);
  for (int i = 7; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seed & 0xff);
    seed >>= 8;
  }
  return out;
}

}  // namespace oblivis
