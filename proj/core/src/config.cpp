#include "oblivis/config.hpp"

#include <algorithm>

#include "oblivis/errors.hpp"
#include "oblivis/message.hpp"

namespace oblivis {

SessionConfig SessionConfig::test_profile() { return SessionConfig{32, 256, 512, false}; }

SessionConfig SessionConfig::production_profile() { return SessionConfig{128, 256, 2048, true}; }

SessionConfig SessionConfig::profile(std::string_view name) {
  if (name == "test") return test_profile();
  if (name == "production") return production_profile();
  throw PreconditionError("unknown profile '" + std::string(name) + "'");
}

void SessionConfig::validate() const {
  if (lambda_bits == 0 || lambda_bits % 8 != 0) {
    throw PreconditionError("lambda must be a positive multiple of 8");
  }
  if (sigma_bits % 8 != 0 || sigma_bits / 8 <= Message::kLengthPrefix) {
    throw PreconditionError("sigma must be a multiple of 8 above the length prefix");
  }
  if (standard_group ? group_bits != 2048 : group_bits < 256) {
    throw PreconditionError("group_bits must be at least 256 (2048 for the standard group)");
  }
}

std::size_t SessionConfig::max_payload_bytes() const {
  return message_bytes() - Message::kLengthPrefix;
}

std::size_t SessionConfig::required_plaintext_bits() const {
  return std::max(group_bits, sigma_bits + lambda_bits) + 8;
}

}  // namespace oblivis
