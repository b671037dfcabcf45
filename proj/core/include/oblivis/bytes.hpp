#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace oblivis {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;
using BigInt = mpz_class;

/// Byte-wise XOR of two equal-length strings.
Bytes xor_bytes(BytesView a, BytesView b);

Bytes concat(BytesView a, BytesView b);

Bytes to_bytes(std::string_view text);

std::string to_hex(BytesView data);
Bytes from_hex(std::string_view hex);

/// Minimal big-endian encoding; zero encodes as an empty string.
Bytes bigint_to_bytes(const BigInt& value);

/// Big-endian encoding left-padded to exactly `width` bytes.
/// Throws RangeError if the value is negative or does not fit.
Bytes bigint_to_bytes(const BigInt& value, std::size_t width);

BigInt bigint_from_bytes(BytesView data);

std::size_t byte_length(const BigInt& value);
std::size_t bit_length(const BigInt& value);

}  // namespace oblivis
