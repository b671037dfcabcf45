#pragma once

#include <cstddef>

#include "oblivis/bytes.hpp"

namespace oblivis {

/// SHAKE256 of `input`, squeezed to `out_bytes` bytes.
Bytes shake256(BytesView input, std::size_t out_bytes);

/// SHAKE256 of `domain || input`.
Bytes shake256(std::uint8_t domain, BytesView input, std::size_t out_bytes);

/// Random-oracle mask for untagged responses: sigma bits of output.
Bytes hash_H(BytesView input, std::size_t sigma_bits);

/// Random-oracle mask for tagged responses: sigma + lambda bits of output.
Bytes hash_G(BytesView input, std::size_t sigma_bits, std::size_t lambda_bits);

}  // namespace oblivis
