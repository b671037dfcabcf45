#include "oblivis/bytes.hpp"

#include <algorithm>

#include "oblivis/errors.hpp"

namespace oblivis {

Bytes xor_bytes(BytesView a, BytesView b) {
  if (a.size() != b.size()) {
    throw PreconditionError("xor_bytes: length mismatch (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
  Bytes out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

Bytes concat(BytesView a, BytesView b) {
  Bytes out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Bytes to_bytes(std::string_view text) { return Bytes(text.begin(), text.end()); }

std::string to_hex(BytesView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DecodeError("from_hex: odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw DecodeError("from_hex: invalid digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::size_t byte_length(const BigInt& value) { return (bit_length(value) + 7) / 8; }

Bytes bigint_to_bytes(const BigInt& value) { return bigint_to_bytes(value, byte_length(value)); }

Bytes bigint_to_bytes(const BigInt& value, std::size_t width) {
  if (value < 0) throw RangeError("bigint_to_bytes: negative value");
  const std::size_t len = byte_length(value);
  if (len > width) {
    throw RangeError("bigint_to_bytes: value needs " + std::to_string(len) +
                     " bytes, width is " + std::to_string(width));
  }
  Bytes out(width, 0);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (width - len), &written, 1, 1, 1, 0, value.get_mpz_t());
  }
  return out;
}

BigInt bigint_from_bytes(BytesView data) {
  BigInt out;
  if (!data.empty()) mpz_import(out.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return out;
}

}  // namespace oblivis
