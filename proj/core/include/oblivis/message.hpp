#pragma once

#include <cstddef>

#include "oblivis/bytes.hpp"
#include "oblivis/config.hpp"

namespace oblivis {

/// A payload padded to exactly sigma/8 bytes: a 4-byte big-endian length,
/// the payload, then zero fill.
class Message {
 public:
  static constexpr std::size_t kLengthPrefix = 4;

  Message() = default;

  static Message pad(BytesView payload, std::size_t sigma_bits);
  static Message pad(BytesView payload, const SessionConfig& config) {
    return pad(payload, config.sigma_bits);
  }

  /// Wraps an already padded block without checking its framing.
  static Message from_padded(Bytes padded);

  /// Strips the framing. Throws DecodeError on a malformed block.
  Bytes unpad() const;
  static Bytes unpad(BytesView padded);

  const Bytes& padded() const { return padded_; }
  std::size_t size() const { return padded_.size(); }
  bool operator==(const Message&) const = default;

 private:
  explicit Message(Bytes padded) : padded_(std::move(padded)) {}
  Bytes padded_;
};

}  // namespace oblivis
