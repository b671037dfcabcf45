#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oblivis/ahe.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/one_of_n.hpp"

namespace oblivis {

/// R.Setup for a compiled suite: a fresh AHE key large enough for the
/// inner suite's response components.
template <CompilableOt Inner>
AheKeyPair compiled_setup(const Inner& inner, Rng& rng) {
  return ahe_kgen(inner.required_plaintext_bits(), rng);
}

/// Wraps a 1-of-n OT so that R downloads w ciphertexts instead of n
/// response elements. R adds an encrypted one-hot selector to its query,
/// and S folds the response vector through it component by component.
template <CompilableOt Inner>
class Compiled {
 public:
  using PublicKey = typename Inner::PublicKey;
  struct Query {
    typename Inner::Query inner;
    AhePublicKey receiver_key;
    std::vector<AheCiphertext> selector;
  };
  struct Secret {
    typename Inner::Secret inner;
    AheKeyPair receiver_keys;
  };
  struct Response {
    std::vector<AheCiphertext> components;
  };

  /// Sender-side view: enough for init and gen_res.
  explicit Compiled(Inner inner) : inner_(std::move(inner)) {}

  /// Receiver-side view holding the key pair from compiled_setup.
  Compiled(Inner inner, AheKeyPair receiver_keys)
      : inner_(std::move(inner)), keys_(std::move(receiver_keys)) {
    if (keys_->pk.plaintext_bits() < inner_.required_plaintext_bits()) {
      throw CapacityError("receiver AHE key is too small for the inner suite");
    }
  }

  const Inner& inner() const { return inner_; }
  std::size_t n() const { return inner_.n(); }
  std::size_t width() const { return inner_.width(); }

  PublicKey init(Rng& rng) const { return inner_.init(rng); }

  std::pair<Query, Secret> gen_query(const PublicKey& pk, std::size_t s, Rng& rng) const {
    if (!keys_) throw PreconditionError("gen_query needs the receiver key pair");
    auto [q, sp] = inner_.gen_query(pk, s, rng);
    Query query{std::move(q), keys_->pk, ahe_encrypt_one_hot(keys_->pk, inner_.n(), s, rng)};
    return {std::move(query), Secret{std::move(sp), *keys_}};
  }

  Response gen_res(std::span<const Message> messages, const PublicKey& pk, const Query& q,
                   Rng& rng) const {
    if (q.selector.size() != inner_.n()) {
      throw PreconditionError("compiled query selector must have n entries");
    }
    const auto res = inner_.gen_res(messages, pk, q.inner, rng);
    const std::size_t w = inner_.width();
    std::vector<std::vector<BigInt>> columns(w, std::vector<BigInt>(inner_.n()));
    for (std::size_t i = 0; i < inner_.n(); ++i) {
      const auto ints = inner_.encode_element(inner_.element(res, i));
      for (std::size_t j = 0; j < w; ++j) columns[j][i] = ints[j];
    }
    Response out;
    out.components.reserve(w);
    for (std::size_t j = 0; j < w; ++j) {
      out.components.push_back(ahe_select(q.receiver_key, q.selector, columns[j]));
    }
    return out;
  }

  Bytes retrieve(const Response& res, const Query& q, const Secret& sp, const PublicKey& pk,
                 std::size_t s) const {
    if (res.components.size() != inner_.width()) {
      throw DecodeError("compiled response has the wrong number of components");
    }
    std::vector<BigInt> ints;
    ints.reserve(res.components.size());
    for (const auto& c : res.components) ints.push_back(ahe_dec(sp.receiver_keys, c));
    const auto element = inner_.decode_element(ints, pk);
    return inner_.retrieve_element(element, q.inner, sp.inner, pk, s);
  }

 private:
  Inner inner_;
  std::optional<AheKeyPair> keys_;
};

template <CompilableOt Inner>
Compiled<Inner> compile(Inner inner, AheKeyPair receiver_keys) {
  return Compiled<Inner>(std::move(inner), std::move(receiver_keys));
}

static_assert(OneOfNOt<Compiled<NpOneOfN>>);

}  // namespace oblivis
