#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oblivis/config.hpp"
#include "oblivis/group.hpp"
#include "oblivis/message.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/rng.hpp"

namespace oblivis {

/// A 1-of-n OT in the four-algorithm shape Init / GenQuery / GenRes / Retrieve.
template <class S>
concept OneOfNOt = requires(const S& suite, Rng& rng, const typename S::PublicKey& pk,
                            const typename S::Query& q, const typename S::Secret& sp,
                            const typename S::Response& res, std::span<const Message> messages,
                            std::size_t s) {
  { suite.n() } -> std::convertible_to<std::size_t>;
  { suite.init(rng) } -> std::same_as<typename S::PublicKey>;
  { suite.gen_query(pk, s, rng) } -> std::same_as<std::pair<typename S::Query, typename S::Secret>>;
  { suite.gen_res(messages, pk, q, rng) } -> std::same_as<typename S::Response>;
  { suite.retrieve(res, q, sp, pk, s) } -> std::same_as<Bytes>;
};

/// A suite whose response elements are tuples of w integers, which is what
/// the homomorphic selection needs.
template <class S>
concept CompilableOt =
    OneOfNOt<S> && requires(const S& suite, const typename S::Response& res,
                            const typename S::Element& element, std::span<const BigInt> ints,
                            const typename S::PublicKey& pk, const typename S::Query& q,
                            const typename S::Secret& sp, std::size_t i) {
      { suite.width() } -> std::convertible_to<std::size_t>;
      { suite.required_plaintext_bits() } -> std::convertible_to<std::size_t>;
      { suite.element(res, i) } -> std::convertible_to<const typename S::Element&>;
      { suite.encode_element(element) } -> std::same_as<std::vector<BigInt>>;
      { suite.decode_element(ints, pk) } -> std::same_as<typename S::Element>;
      { suite.retrieve_element(element, q, sp, pk, i) } -> std::same_as<Bytes>;
    };

/// Naive 1-of-n OT with n parallel lanes. R sends beta_0 only; lane i > 0
/// uses beta_i = C_i / beta_0 with C_1 = C, so n = 2 is the two-message
/// base protocol.
class NpOneOfN {
 public:
  using PublicKey = GroupParams;
  using Element = ResponseElement;
  struct Query {
    BigInt beta0;
    bool operator==(const Query&) const = default;
  };
  struct Secret {
    BigInt r;
    std::size_t s = 0;
  };
  struct Response {
    std::vector<ResponseElement> elements;
    bool operator==(const Response&) const = default;
  };

  /// A fixed group skips generation in init().
  NpOneOfN(std::size_t n, SessionConfig config, std::optional<GroupParams> group = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t width() const { return 2; }
  const SessionConfig& config() const { return config_; }
  std::size_t required_plaintext_bits() const { return config_.required_plaintext_bits(); }

  PublicKey init(Rng& rng) const;
  std::pair<Query, Secret> gen_query(const PublicKey& pk, std::size_t s, Rng& rng) const;
  Response gen_res(std::span<const Message> messages, const PublicKey& pk, const Query& q,
                   Rng& rng) const;
  Bytes retrieve(const Response& res, const Query& q, const Secret& sp, const PublicKey& pk,
                 std::size_t s) const;

  const Element& element(const Response& res, std::size_t i) const;
  std::vector<BigInt> encode_element(const Element& element) const;
  Element decode_element(std::span<const BigInt> ints, const PublicKey& pk) const;
  Bytes retrieve_element(const Element& element, const Query& q, const Secret& sp,
                         const PublicKey& pk, std::size_t s) const;

 private:
  std::size_t n_;
  SessionConfig config_;
  std::optional<GroupParams> group_;
};

static_assert(CompilableOt<NpOneOfN>);

}  // namespace oblivis
