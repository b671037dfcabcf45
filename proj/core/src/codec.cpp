#include "oblivis/codec.hpp"

#include "oblivis/errors.hpp"

namespace oblivis {

ByteWriter& ByteWriter::u8(std::uint8_t v) {
  out_.push_back(v);
  return *this;
}

ByteWriter& ByteWriter::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
  return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  return *this;
}

ByteWriter& ByteWriter::raw(BytesView data) {
  out_.insert(out_.end(), data.begin(), data.end());
  return *this;
}

ByteWriter& ByteWriter::blob(BytesView data) {
  if (data.size() > 0xffffffffu) throw RangeError("blob too large");
  u32(static_cast<std::uint32_t>(data.size()));
  return raw(data);
}

ByteWriter& ByteWriter::bigint(const BigInt& value, std::size_t width) {
  return blob(width == 0 ? bigint_to_bytes(value) : bigint_to_bytes(value, width));
}

BytesView ByteReader::take(std::size_t n) {
  if (n > remaining()) throw DecodeError("payload truncated");
  BytesView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::u8() { return take(1)[0]; }

std::uint16_t ByteReader::u16() {
  auto b = take(2);
  return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
}

std::uint32_t ByteReader::u32() {
  auto b = take(4);
  std::uint32_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

std::uint64_t ByteReader::u64() {
  auto b = take(8);
  std::uint64_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

Bytes ByteReader::raw(std::size_t n) {
  auto b = take(n);
  return Bytes(b.begin(), b.end());
}

Bytes ByteReader::blob() { return raw(u32()); }

BigInt ByteReader::bigint() { return bigint_from_bytes(blob()); }

bool ByteReader::boolean() {
  const auto v = u8();
  if (v > 1) throw DecodeError("boolean field out of range");
  return v == 1;
}

void ByteReader::expect_end() const {
  if (remaining() != 0) throw DecodeError("trailing bytes in payload");
}

}  // namespace oblivis
