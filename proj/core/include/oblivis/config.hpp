#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace oblivis {

/// Security parameters shared by all parties of a session.
struct SessionConfig {
  std::size_t lambda_bits = 32;
  std::size_t sigma_bits = 256;
  std::size_t group_bits = 512;
  /// Use the fixed 2048-bit MODP safe prime instead of generating one.
  bool standard_group = false;

  static SessionConfig test_profile();
  static SessionConfig production_profile();
  static SessionConfig profile(std::string_view name);

  /// Throws PreconditionError when a parameter is unusable.
  void validate() const;

  std::size_t message_bytes() const { return sigma_bits / 8; }
  std::size_t tag_bytes() const { return lambda_bits / 8; }
  std::size_t tagged_bytes() const { return (sigma_bits + lambda_bits) / 8; }
  /// Largest payload that fits a padded message.
  std::size_t max_payload_bytes() const;
  /// Minimum homomorphic plaintext size needed to carry response components.
  std::size_t required_plaintext_bits() const;

  bool operator==(const SessionConfig&) const = default;
};

}  // namespace oblivis
