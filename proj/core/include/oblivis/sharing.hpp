#pragma once

#include <cstddef>
#include <utility>

#include "oblivis/bytes.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/rng.hpp"

namespace oblivis {

struct BitShares {
  bool s1;
  bool s2;
};

/// XOR-shares a bit: s1 is uniform and s2 = s1 xor s.
BitShares share_bit(bool s, Rng& rng);

inline bool reconstruct(const BitShares& shares) { return shares.s1 != shares.s2; }

/// Returns the pair unchanged when s is 0 and swapped when s is 1.
template <class T>
std::pair<T, T> swap_pair(bool s, std::pair<T, T> pair) {
  if (s) std::swap(pair.first, pair.second);
  return pair;
}

/// Applies swap_pair with a fresh uniform bit and reports the bit used.
template <class T>
std::pair<T, T> permute_pair(std::pair<T, T> pair, Rng& rng, bool* swapped = nullptr) {
  const bool b = rng.bit();
  if (swapped != nullptr) *swapped = b;
  return swap_pair(b, std::move(pair));
}

struct ParsedValue {
  Bytes head;
  Bytes tail;
};

/// Splits y into its first |y| - lambda bits and its last lambda bits.
/// lambda must be a multiple of 8 no larger than |y|; 0 leaves y whole.
ParsedValue parse(std::size_t lambda_bits, BytesView y);

}  // namespace oblivis
