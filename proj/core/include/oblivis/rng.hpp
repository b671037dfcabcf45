#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "oblivis/bytes.hpp"

namespace oblivis {

/// Seedable cryptographic generator backed by a ChaCha20 keystream.
///
/// Two generators built from the same seed produce the same stream.
/// derive() depends only on the key and the label, never on how much
/// of the parent stream has been consumed, so per-role and per-phase
/// streams stay stable under any interleaving.
class Rng {
 public:
  static constexpr std::size_t kKeyBytes = 32;

  explicit Rng(BytesView seed);
  static Rng from_u64(std::uint64_t seed);
  static Rng from_entropy();

  Rng(Rng&&) noexcept;
  Rng& operator=(Rng&&) noexcept;
  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  ~Rng();

  Rng derive(std::string_view label) const;
  Rng derive(std::string_view label, std::uint64_t index) const;

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t n);
  bool bit();
  std::uint64_t next_u64();

  /// Uniform in [0, bound) by rejection sampling.
  BigInt uniform_below(const BigInt& bound);

  /// Uniform integer with at most `bits` bits.
  BigInt uniform_bits(std::size_t bits);

 private:
  struct Stream;
  explicit Rng(const std::array<std::uint8_t, kKeyBytes>& key);
  void refill();

  std::array<std::uint8_t, kKeyBytes> key_{};
  std::unique_ptr<Stream> stream_;
};

/// Serializes a 64-bit seed as 8 big-endian bytes.
Bytes seed_bytes(std::uint64_t seed);

}  // namespace oblivis
