#include "oblivis/sharing.hpp"

namespace oblivis {

BitShares share_bit(bool s, Rng& rng) {
  const bool s1 = rng.bit();
  return {s1, s1 != s};
}

ParsedValue parse(std::size_t lambda_bits, BytesView y) {
  if (lambda_bits % 8 != 0) throw PreconditionError("parse: lambda must be a multiple of 8");
  const std::size_t tail = lambda_bits / 8;
  if (tail > y.size()) throw PreconditionError("parse: lambda exceeds |y|");
  const auto split = y.begin() + static_cast<std::ptrdiff_t>(y.size() - tail);
  return {Bytes(y.begin(), split), Bytes(split, y.end())};
}

}  // namespace oblivis
