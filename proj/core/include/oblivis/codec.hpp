#pragma once

#include <cstddef>
#include <cstdint>

#include "oblivis/bytes.hpp"

namespace oblivis {

/// Big-endian writer for wire payloads.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u16(std::uint16_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& raw(BytesView data);
  /// 4-byte length prefix followed by the bytes.
  ByteWriter& blob(BytesView data);
  /// Length-prefixed integer padded to `width` bytes; 0 means minimal.
  ByteWriter& bigint(const BigInt& value, std::size_t width = 0);

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

/// Reader matching ByteWriter. Every read throws DecodeError on truncation.
class ByteReader {
 public:
  explicit ByteReader(BytesView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  Bytes raw(std::size_t n);
  Bytes blob();
  BigInt bigint();
  bool boolean();

  std::size_t remaining() const { return data_.size() - pos_; }
  /// Throws DecodeError if unread bytes remain.
  void expect_end() const;

 private:
  BytesView take(std::size_t n);
  BytesView data_;
  std::size_t pos_ = 0;
};

}  // namespace oblivis
