#include "oblivis/hash.hpp"

#include <openssl/evp.h>

#include <memory>

#include "oblivis/errors.hpp"

namespace oblivis {

namespace {
struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

Bytes squeeze(std::uint8_t const* prefix, BytesView input, std::size_t out_bytes) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  Bytes out(out_bytes);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      (prefix != nullptr && EVP_DigestUpdate(ctx.get(), prefix, 1) != 1) ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      (out_bytes > 0 && EVP_DigestFinalXOF(ctx.get(), out.data(), out_bytes) != 1)) {
    throw Error("shake256: digest failed");
  }
  return out;
}

void require_bits(std::size_t bits, const char* what) {
  if (bits == 0 || bits % 8 != 0) {
    throw PreconditionError(std::string(what) + " must be a positive multiple of 8");
  }
}
}  // namespace

Bytes shake256(BytesView input, std::size_t out_bytes) {
  return squeeze(nullptr, input, out_bytes);
}

Bytes shake256(std::uint8_t domain, BytesView input, std::size_t out_bytes) {
  return squeeze(&domain, input, out_bytes);
}

Bytes hash_H(BytesView input, std::size_t sigma_bits) {
  require_bits(sigma_bits, "sigma");
  return shake256(0x48, input, sigma_bits / 8);
}

Bytes hash_G(BytesView input, std::size_t sigma_bits, std::size_t lambda_bits) {
  require_bits(sigma_bits, "sigma");
  require_bits(lambda_bits, "lambda");
  return shake256(0x47, input, (sigma_bits + lambda_bits) / 8);
}

}  // namespace oblivis
