#include "oblivis/message.hpp"

#include <algorithm>

#include "oblivis/errors.hpp"

namespace oblivis {

Message Message::pad(BytesView payload, std::size_t sigma_bits) {
  if (sigma_bits % 8 != 0 || sigma_bits / 8 < kLengthPrefix) {
    throw PreconditionError("Message::pad: sigma must be a multiple of 8 covering the prefix");
  }
  const std::size_t total = sigma_bits / 8;
  if (payload.size() > total - kLengthPrefix) {
    throw PreconditionError("Message::pad: payload of " + std::to_string(payload.size()) +
                            " bytes exceeds capacity " + std::to_string(total - kLengthPrefix));
  }
  Bytes padded(total, 0);
  const auto len = static_cast<std::uint32_t>(payload.size());
  padded[0] = static_cast<std::uint8_t>(len >> 24);
  padded[1] = static_cast<std::uint8_t>(len >> 16);
  padded[2] = static_cast<std::uint8_t>(len >> 8);
  padded[3] = static_cast<std::uint8_t>(len);
  std::copy(payload.begin(), payload.end(), padded.begin() + kLengthPrefix);
  return Message(std::move(padded));
}

Message Message::from_padded(Bytes padded) { return Message(std::move(padded)); }

Bytes Message::unpad() const { return unpad(padded_); }

Bytes Message::unpad(BytesView padded) {
  if (padded.size() < kLengthPrefix) throw DecodeError("message shorter than its length prefix");
  const std::uint32_t len = (std::uint32_t{padded[0]} << 24) | (std::uint32_t{padded[1]} << 16) |
                            (std::uint32_t{padded[2]} << 8) | std::uint32_t{padded[3]};
  if (len > padded.size() - kLengthPrefix) throw DecodeError("message length prefix out of range");
  const auto body = padded.begin() + kLengthPrefix;
  if (!std::all_of(body + len, padded.end(), [](std::uint8_t b) { return b == 0; })) {
    throw DecodeError("message padding is not zero");
  }
  return Bytes(body, body + len);
}

}  // namespace oblivis
