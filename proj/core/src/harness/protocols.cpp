#include "protocols.hpp"

#include <string>

#include "oblivis/compiler.hpp"
#include "oblivis/harness/payloads.hpp"

namespace oblivis::harness::detail {

namespace {

struct Context {
  SessionConfig config;
  SessionId session{};
  std::optional<GroupParams> group;
  SessionRegistry* registry = nullptr;
  Bytes seed;
};

/// Shared plumbing: per-role stream, public parameters, padding.
class ProtocolParty : public Party {
 protected:
  ProtocolParty(Role role, const Context& ctx)
      : Party(role, ctx.session),
        config_(ctx.config),
        rng_(Rng(ctx.seed).derive("role/" + std::string(role_name(role)))),
        preset_group_(ctx.group) {}

  /// S.Init, followed by publication to each listed role.
  void publish_group(std::initializer_list<Role> to) {
    group_ = preset_group_ ? *preset_group_ : init_group(config_, rng_);
    const Bytes encoded = serialize_group(*group_);
    for (Role r : to) emit(r, Kind::PUBLIC_PARAMS, encoded);
  }

  const GroupParams& group() {
    if (!group_) group_ = deserialize_group(payload(Kind::PUBLIC_PARAMS));
    return *group_;
  }

  Message pad(const Bytes& payload) const { return Message::pad(payload, config_); }

  SessionConfig config_;
  Rng rng_;
  std::optional<GroupParams> preset_group_;
  std::optional<GroupParams> group_;
};

using Matrix = std::vector<std::pair<Bytes, Bytes>>;

MessageMatrix pad_matrix(const Matrix& rows, const SessionConfig& config) {
  MessageMatrix out;
  out.reserve(rows.size());
  for (const auto& [a, b] : rows) out.emplace_back(Message::pad(a, config), Message::pad(b, config));
  return out;
}

template <class Pair>
std::vector<std::array<ResponseElement, 2>> flatten(const std::vector<Pair>& pairs) {
  std::vector<std::array<ResponseElement, 2>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.e);
  return out;
}

// Two-party base protocol and the index-leaking strawman.

class NpSender final : public ProtocolParty {
 public:
  NpSender(const Context& ctx, Matrix rows, bool broadcast, bool indexed)
      : ProtocolParty(Role::S, ctx), rows_(std::move(rows)), broadcast_(broadcast),
        indexed_(indexed) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    return {{indexed_ ? Kind::INDEXED_QUERY : Kind::NP_QUERY, Role::R}};
  }
  void on_start() override { publish_group({Role::R}); }
  void on_progress() override {
    if (done_) return;
    if (indexed_) {
      if (!ready({Kind::INDEXED_QUERY})) return;
      const auto [beta0, v] = payload::decode_indexed_query(payload(Kind::INDEXED_QUERY));
      if (v >= rows_.size()) throw RangeError("record index out of range");
      const auto res = respond(beta0, rows_[v]);
      emit(Role::R, Kind::RESPONSE, payload::encode_pair(group(), res.e));
    } else {
      if (!ready({Kind::NP_QUERY})) return;
      const BigInt beta0 = payload::decode_element_query(payload(Kind::NP_QUERY));
      if (broadcast_) {
        std::vector<ResponsePair> all;
        for (const auto& row : rows_) all.push_back(respond(beta0, row));
        emit(Role::R, Kind::MATRIX_RESPONSE, payload::encode_pairs(group(), flatten(all)));
      } else {
        emit(Role::R, Kind::RESPONSE, payload::encode_pair(group(), respond(beta0, rows_[0]).e));
      }
    }
    done_ = true;
  }

 private:
  ResponsePair respond(const BigInt& beta0, const std::pair<Bytes, Bytes>& row) {
    return np_gen_res(pad(row.first), pad(row.second), group(), NpQuery{beta0}, rng_);
  }

  Matrix rows_;
  bool broadcast_;
  bool indexed_;
  bool done_ = false;
};

class NpReceiver final : public ProtocolParty {
 public:
  NpReceiver(const Context& ctx, bool s, std::optional<std::size_t> v, bool broadcast, bool indexed)
      : ProtocolParty(Role::R, ctx), s_(s), v_(v), broadcast_(broadcast), indexed_(indexed) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    return {{Kind::PUBLIC_PARAMS, Role::S},
            {broadcast_ ? Kind::MATRIX_RESPONSE : Kind::RESPONSE, Role::S}};
  }
  void on_progress() override {
    if (!secret_ && ready({Kind::PUBLIC_PARAMS})) {
      auto [q, sp] = np_gen_query(group(), s_, rng_);
      secret_ = sp;
      if (indexed_) {
        emit(Role::S, Kind::INDEXED_QUERY, payload::encode_indexed_query(group(), q.beta0, *v_));
      } else {
        emit(Role::S, Kind::NP_QUERY, payload::encode_element_query(group(), q.beta0));
      }
    }
    if (broadcast_ && !output() && ready({Kind::MATRIX_RESPONSE})) {
      const auto all = payload::decode_pairs(payload(Kind::MATRIX_RESPONSE));
      if (*v_ >= all.size()) throw RangeError("record index out of range");
      set_output(np_retrieve(ResponsePair{all[*v_]}, *secret_, group()));
    } else if (!broadcast_ && !output() && ready({Kind::RESPONSE})) {
      const ResponsePair res{payload::decode_pair(payload(Kind::RESPONSE))};
      set_output(np_retrieve(res, *secret_, group()));
    }
  }

 private:
  bool s_;
  std::optional<std::size_t> v_;
  bool broadcast_;
  bool indexed_;
  std::optional<NpSecret> secret_;
};

// 1-of-n, plain and compiled.

class OneOfNSender final : public ProtocolParty {
 public:
  OneOfNSender(const Context& ctx, std::vector<Bytes> messages, bool compiled)
      : ProtocolParty(Role::S, ctx), messages_(std::move(messages)), compiled_(compiled),
        suite_(messages_.size(), ctx.config, ctx.group) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    if (compiled_) return {{Kind::AHE_PUBLIC_KEY, Role::R}, {Kind::COMPILED_QUERY, Role::R}};
    return {{Kind::GENERIC_QUERY, Role::R}};
  }
  void on_start() override {
    group_ = suite_.init(rng_);
    emit(Role::R, Kind::PUBLIC_PARAMS, serialize_group(*group_));
  }
  void on_progress() override {
    if (done_) return;
    std::vector<Message> padded;
    for (const auto& m : messages_) padded.push_back(pad(m));
    if (compiled_) {
      if (!ready({Kind::AHE_PUBLIC_KEY, Kind::COMPILED_QUERY})) return;
      const auto pk_r = deserialize_public_key(payload(Kind::AHE_PUBLIC_KEY));
      const auto q = payload::decode_compiled_query(payload(Kind::COMPILED_QUERY), pk_r);
      if (q.selector.size() != suite_.n()) throw DecodeError("selector must have n entries");
      const auto res = Compiled<NpOneOfN>(suite_).gen_res(padded, *group_, q, rng_);
      emit(Role::R, Kind::COMPILED_RESPONSE, payload::encode_ciphertexts(pk_r, res.components));
    } else {
      if (!ready({Kind::GENERIC_QUERY})) return;
      const NpOneOfN::Query q{payload::decode_element_query(payload(Kind::GENERIC_QUERY))};
      const auto res = suite_.gen_res(padded, *group_, q, rng_);
      emit(Role::R, Kind::GENERIC_RESPONSE, payload::encode_generic_response(*group_, res));
    }
    done_ = true;
  }

 private:
  std::vector<Bytes> messages_;
  bool compiled_;
  NpOneOfN suite_;
  bool done_ = false;
};

class OneOfNReceiver final : public ProtocolParty {
 public:
  OneOfNReceiver(const Context& ctx, std::size_t n, std::size_t s, bool compiled)
      : ProtocolParty(Role::R, ctx), n_(n), s_(s), compiled_(compiled), suite_(n, ctx.config) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    return {{Kind::PUBLIC_PARAMS, Role::S},
            {compiled_ ? Kind::COMPILED_RESPONSE : Kind::GENERIC_RESPONSE, Role::S}};
  }
  void on_start() override {
    if (!compiled_) return;
    keys_ = compiled_setup(suite_, rng_);
    emit(Role::S, Kind::AHE_PUBLIC_KEY, serialize_public_key(keys_->pk));
  }
  void on_progress() override {
    if (!queried_ && ready({Kind::PUBLIC_PARAMS})) {
      queried_ = true;
      if (compiled_) {
        const auto compiled = compile(suite_, *keys_);
        auto [q, sp] = compiled.gen_query(group(), s_, rng_);
        emit(Role::S, Kind::COMPILED_QUERY, payload::encode_compiled_query(group(), q));
        cquery_ = std::move(q);
        csecret_ = std::move(sp);
      } else {
        auto [q, sp] = suite_.gen_query(group(), s_, rng_);
        emit(Role::S, Kind::GENERIC_QUERY, payload::encode_element_query(group(), q.beta0));
        query_ = q;
        secret_ = sp;
      }
    }
    if (output()) return;
    if (compiled_ && ready({Kind::COMPILED_RESPONSE})) {
      Compiled<NpOneOfN>::Response res{payload::decode_ciphertexts(payload(Kind::COMPILED_RESPONSE))};
      set_output(compile(suite_, *keys_).retrieve(res, *cquery_, *csecret_, group(), s_));
    } else if (!compiled_ && ready({Kind::GENERIC_RESPONSE})) {
      const auto res = payload::decode_generic_response(payload(Kind::GENERIC_RESPONSE));
      if (res.elements.size() != n_) throw DecodeError("response must have n elements");
      set_output(suite_.retrieve(res, *query_, *secret_, group(), s_));
    }
  }

 private:
  std::size_t n_;
  std::size_t s_;
  bool compiled_;
  NpOneOfN suite_;
  bool queried_ = false;
  std::optional<AheKeyPair> keys_;
  std::optional<NpOneOfN::Query> query_;
  std::optional<NpOneOfN::Secret> secret_;
  std::optional<Compiled<NpOneOfN>::Query> cquery_;
  std::optional<Compiled<NpOneOfN>::Secret> csecret_;
};

// Delegated-query family: DQ, DUQ and their multi-record forms.

enum class Variant { dq, duq, dqmr, duqmr };

bool issuer_driven(Variant v) { return v == Variant::duq || v == Variant::duqmr; }
bool multi_record(Variant v) { return v == Variant::dqmr || v == Variant::duqmr; }

class DelegatedSender final : public ProtocolParty {
 public:
  DelegatedSender(const Context& ctx, Variant variant, Matrix rows)
      : ProtocolParty(Role::S, ctx), variant_(variant), rows_(std::move(rows)) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    std::map<Kind, Role> out{{Kind::FINAL_QUERY, Role::P1}};
    if (issuer_driven(variant_)) out.emplace(Kind::ISSUER_TAG_S, Role::T);
    return out;
  }
  void on_start() override { publish_group({Role::R, Role::P1, Role::P2}); }
  void on_progress() override {
    if (done_) return;
    if (issuer_driven(variant_) ? !ready({Kind::FINAL_QUERY, Kind::ISSUER_TAG_S})
                                : !ready({Kind::FINAL_QUERY})) {
      return;
    }
    done_ = true;
    const FinalQuery q1 = payload::decode_final(payload(Kind::FINAL_QUERY));
    const GroupParams& pk = group();
    switch (variant_) {
      case Variant::dq: {
        const auto res = dq_gen_res(pad(rows_[0].first), pad(rows_[0].second), pk, q1, rng_);
        emit(Role::R, Kind::RESPONSE, payload::encode_pair(pk, res.e));
        break;
      }
      case Variant::duq: {
        const Bytes r3 = payload::decode_tag(payload(Kind::ISSUER_TAG_S));
        const auto res =
            duq_gen_res(pad(rows_[0].first), pad(rows_[0].second), pk, q1, r3, config_, rng_);
        emit(Role::R, Kind::TAGGED_RESPONSE, payload::encode_pair(pk, res.e));
        break;
      }
      case Variant::dqmr: {
        const auto res = dqmr_gen_res(pad_matrix(rows_, config_), pk, q1, rng_);
        emit(Role::P1, Kind::MATRIX_RESPONSE, payload::encode_pairs(pk, flatten(res)));
        break;
      }
      case Variant::duqmr: {
        const Bytes r3 = payload::decode_tag(payload(Kind::ISSUER_TAG_S));
        const auto res = duqmr_gen_res(pad_matrix(rows_, config_), pk, q1, r3, config_, rng_);
        emit(Role::P1, Kind::MATRIX_RESPONSE, payload::encode_pairs(pk, flatten(res)));
        break;
      }
    }
  }

 private:
  Variant variant_;
  Matrix rows_;
  bool done_ = false;
};

class DelegatedReceiver final : public ProtocolParty {
 public:
  /// `s` is ignored when the issuer holds the choice.
  DelegatedReceiver(const Context& ctx, Variant variant, bool s)
      : ProtocolParty(Role::R, ctx), variant_(variant), s_(s) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    std::map<Kind, Role> out{{Kind::PUBLIC_PARAMS, Role::S}};
    switch (variant_) {
      case Variant::dq:
        out.emplace(Kind::RESPONSE, Role::S);
        break;
      case Variant::dqmr:
        out.emplace(Kind::RESPONSE, Role::P1);
        break;
      case Variant::duq:
        out.emplace(Kind::TAGGED_RESPONSE, Role::S);
        out.emplace(Kind::ISSUER_TAG_R, Role::T);
        break;
      case Variant::duqmr:
        out.emplace(Kind::FILTERED_RESPONSE, Role::P1);
        out.emplace(Kind::ISSUER_TAG_R, Role::T);
        break;
    }
    return out;
  }
  void on_start() override {
    if (variant_ != Variant::duqmr) return;
    keys_ = duqmr_r_setup(config_, rng_);
    const Bytes pk = serialize_public_key(keys_->pk);
    emit(Role::T, Kind::AHE_PUBLIC_KEY, pk);
    emit(Role::P1, Kind::AHE_PUBLIC_KEY, pk);
  }
  void on_progress() override {
    if (!requested_ && ready({Kind::PUBLIC_PARAMS})) {
      requested_ = true;
      const GroupParams& pk = group();
      if (issuer_driven(variant_)) {
        blinds_ = duq_r_request(pk, rng_);
        emit(Role::P1, Kind::REQUEST, payload::encode_request(pk, {false, blinds_->r1}, false));
        emit(Role::P2, Kind::REQUEST, payload::encode_request(pk, {false, blinds_->r2}, false));
      } else {
        auto req = dq_request(pk, s_, rng_);
        emit(Role::P1, Kind::REQUEST, payload::encode_request(pk, req.to_p1, true));
        emit(Role::P2, Kind::REQUEST, payload::encode_request(pk, req.to_p2, true));
        state_ = req.state;
      }
    }
    if (output()) return;
    switch (variant_) {
      case Variant::dq:
      case Variant::dqmr:
        if (ready({Kind::RESPONSE})) {
          const ResponsePair res{payload::decode_pair(payload(Kind::RESPONSE))};
          set_output(dq_retrieve(res, *state_, group()));
        }
        break;
      case Variant::duq:
        if (ready({Kind::TAGGED_RESPONSE, Kind::ISSUER_TAG_R})) {
          const TaggedResponsePair res{payload::decode_pair(payload(Kind::TAGGED_RESPONSE))};
          const auto tag = payload::decode_receiver_tag(payload(Kind::ISSUER_TAG_R));
          set_output(duq_retrieve(res, *blinds_, tag, group(), config_));
        }
        break;
      case Variant::duqmr:
        if (ready({Kind::FILTERED_RESPONSE, Kind::ISSUER_TAG_R})) {
          const auto res = payload::decode_filtered(payload(Kind::FILTERED_RESPONSE));
          const auto tag = payload::decode_receiver_tag(payload(Kind::ISSUER_TAG_R));
          set_output(duqmr_retrieve(res, *blinds_, *keys_, tag, group(), config_));
        }
        break;
    }
  }

 private:
  Variant variant_;
  bool s_;
  bool requested_ = false;
  std::optional<DqReceiverState> state_;
  std::optional<DuqBlinds> blinds_;
  std::optional<AheKeyPair> keys_;
};

class Issuer final : public ProtocolParty {
 public:
  Issuer(const Context& ctx, Variant variant, bool s, std::size_t v, std::size_t z)
      : ProtocolParty(Role::T, ctx), variant_(variant), s_(s), v_(v), z_(z) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    if (variant_ == Variant::duqmr) return {{Kind::AHE_PUBLIC_KEY, Role::R}};
    return {};
  }
  void on_start() override {
    if (variant_ != Variant::duqmr) issue();
  }
  void on_progress() override {
    if (done_ || !ready({Kind::AHE_PUBLIC_KEY})) return;
    const auto pk_j = deserialize_public_key(payload(Kind::AHE_PUBLIC_KEY));
    const auto w = duqmr_t_setup(pk_j, z_, v_, rng_);
    emit(Role::P1, Kind::ONE_HOT_VECTOR, payload::encode_ciphertexts(pk_j, w));
    issue();
  }

 private:
  void issue() {
    done_ = true;
    const auto req = duq_t_request(config_, s_, rng_);
    emit(Role::P1, Kind::ISSUER_SHARE, payload::encode_bit(req.share_p1));
    emit(Role::P2, Kind::ISSUER_SHARE, payload::encode_bit(req.share_p2));
    emit(Role::S, Kind::ISSUER_TAG_S, payload::encode_tag(req.sender_tag));
    emit(Role::R, Kind::ISSUER_TAG_R, payload::encode_receiver_tag(req.receiver_tag));
  }

  Variant variant_;
  bool s_;
  std::size_t v_;
  std::size_t z_;
  bool done_ = false;
};

/// Reads a proxy's request, taking the share from T when R does not know s.
DelegationRequest proxy_request(const Bytes& req_payload, const Bytes* issuer_share) {
  const auto req = payload::decode_request(req_payload);
  DelegationRequest out{false, req.blind};
  if (issuer_share != nullptr) {
    if (req.share) throw DecodeError("request carries a share the issuer owns");
    out.share = payload::decode_bit(*issuer_share);
  } else {
    if (!req.share) throw DecodeError("request is missing its share");
    out.share = *req.share;
  }
  return out;
}

class ProxyP2 final : public ProtocolParty {
 public:
  ProxyP2(const Context& ctx, Variant variant) : ProtocolParty(Role::P2, ctx), variant_(variant) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    std::map<Kind, Role> out{{Kind::PUBLIC_PARAMS, Role::S}, {Kind::REQUEST, Role::R}};
    if (issuer_driven(variant_)) out.emplace(Kind::ISSUER_SHARE, Role::T);
    return out;
  }
  void on_progress() override {
    if (done_) return;
    const bool issuer = issuer_driven(variant_);
    if (issuer ? !ready({Kind::PUBLIC_PARAMS, Kind::REQUEST, Kind::ISSUER_SHARE})
               : !ready({Kind::PUBLIC_PARAMS, Kind::REQUEST})) {
      return;
    }
    done_ = true;
    const auto req = proxy_request(payload(Kind::REQUEST),
                                   issuer ? &payload(Kind::ISSUER_SHARE) : nullptr);
    const auto q2 = dq_p2_gen_query(req, group());
    emit(Role::P1, Kind::PARTIAL_QUERY, payload::encode_partial(group(), q2));
  }

 private:
  Variant variant_;
  bool done_ = false;
};

class ProxyP1 final : public ProtocolParty {
 public:
  ProxyP1(const Context& ctx, Variant variant, std::optional<std::size_t> v)
      : ProtocolParty(Role::P1, ctx), variant_(variant), v_(v) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    std::map<Kind, Role> out{{Kind::PUBLIC_PARAMS, Role::S},
                             {Kind::REQUEST, Role::R},
                             {Kind::PARTIAL_QUERY, Role::P2}};
    if (issuer_driven(variant_)) out.emplace(Kind::ISSUER_SHARE, Role::T);
    if (multi_record(variant_)) out.emplace(Kind::MATRIX_RESPONSE, Role::S);
    if (variant_ == Variant::duqmr) {
      out.emplace(Kind::AHE_PUBLIC_KEY, Role::R);
      out.emplace(Kind::ONE_HOT_VECTOR, Role::T);
    }
    return out;
  }
  void on_progress() override {
    const bool issuer = issuer_driven(variant_);
    if (!queried_ &&
        (issuer ? ready({Kind::PUBLIC_PARAMS, Kind::REQUEST, Kind::PARTIAL_QUERY,
                         Kind::ISSUER_SHARE})
                : ready({Kind::PUBLIC_PARAMS, Kind::REQUEST, Kind::PARTIAL_QUERY}))) {
      queried_ = true;
      const auto req = proxy_request(payload(Kind::REQUEST),
                                     issuer ? &payload(Kind::ISSUER_SHARE) : nullptr);
      const auto q2 = payload::decode_partial(payload(Kind::PARTIAL_QUERY));
      const auto q1 = dq_p1_gen_query(req, q2, group());
      emit(Role::S, Kind::FINAL_QUERY, payload::encode_final(group(), q1));
    }
    if (output()) return;
    if (variant_ == Variant::dqmr && ready({Kind::MATRIX_RESPONSE})) {
      const auto pairs = payload::decode_pairs(payload(Kind::MATRIX_RESPONSE));
      std::vector<ResponsePair> res;
      for (const auto& p : pairs) res.push_back(ResponsePair{p});
      const auto filtered = dqmr_obl_filter(res, *v_);
      emit(Role::R, Kind::RESPONSE, payload::encode_pair(group(), filtered.e));
      set_output(res.size());
    } else if (variant_ == Variant::duqmr &&
               ready({Kind::MATRIX_RESPONSE, Kind::AHE_PUBLIC_KEY, Kind::ONE_HOT_VECTOR})) {
      const auto pairs = payload::decode_pairs(payload(Kind::MATRIX_RESPONSE));
      std::vector<TaggedResponsePair> res;
      for (const auto& p : pairs) res.push_back(TaggedResponsePair{p});
      const auto pk_j = deserialize_public_key(payload(Kind::AHE_PUBLIC_KEY));
      const auto w = payload::decode_ciphertexts(payload(Kind::ONE_HOT_VECTOR));
      const auto filtered = duqmr_obl_filter(pk_j, res, w);
      emit(Role::R, Kind::FILTERED_RESPONSE, payload::encode_filtered(pk_j, filtered));
      set_output(res.size());
    }
  }

 private:
  Variant variant_;
  std::optional<std::size_t> v_;
  bool queried_ = false;
};

// Supersonic.

class SsSender final : public ProtocolParty {
 public:
  SsSender(const Context& ctx, Bytes m0, Bytes m1)
      : ProtocolParty(Role::S, ctx), m0_(std::move(m0)), m1_(std::move(m1)),
        state_(ctx.session, ctx.registry) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    return {{Kind::SS_KEYS, Role::R}, {Kind::SS_SHARE_S, Role::R}};
  }
  void on_progress() override {
    if (done_ || !ready({Kind::SS_KEYS, Kind::SS_SHARE_S})) return;
    done_ = true;
    state_.accept_keys(payload::decode_pad_keys(payload(Kind::SS_KEYS)));
    const bool s1 = payload::decode_bit(payload(Kind::SS_SHARE_S));
    emit(Role::P, Kind::SS_PAIR, payload::encode_swapped(state_.respond(pad(m0_), pad(m1_), s1)));
  }

 private:
  Bytes m0_;
  Bytes m1_;
  SupersonicSender state_;
  bool done_ = false;
};

class SsProxy final : public ProtocolParty {
 public:
  explicit SsProxy(const Context& ctx) : ProtocolParty(Role::P, ctx) {}

 protected:
  std::map<Kind, Role> accepts() const override {
    return {{Kind::SS_PAIR, Role::S}, {Kind::SS_SHARE_P, Role::R}};
  }
  void on_progress() override {
    if (done_ || !ready({Kind::SS_PAIR, Kind::SS_SHARE_P})) return;
    done_ = true;
    const auto pair = payload::decode_swapped(payload(Kind::SS_PAIR));
    const bool s2 = payload::decode_bit(payload(Kind::SS_SHARE_P));
    emit(Role::R, Kind::SS_FINAL, payload::encode_blob(ss_obl_filter(pair, s2)));
  }

 private:
  bool done_ = false;
};

class SsReceiver final : public ProtocolParty {
 public:
  SsReceiver(const Context& ctx, bool s) : ProtocolParty(Role::R, ctx), s_(s) {}

 protected:
  std::map<Kind, Role> accepts() const override { return {{Kind::SS_FINAL, Role::P}}; }
  void on_start() override {
    keys_ = ss_setup(config_, rng_, session());
    emit(Role::S, Kind::SS_KEYS, payload::encode_pad_keys(*keys_));
    const auto shares = ss_gen_query(s_, rng_);
    emit(Role::S, Kind::SS_SHARE_S, payload::encode_bit(shares.s1));
    emit(Role::P, Kind::SS_SHARE_P, payload::encode_bit(shares.s2));
  }
  void on_progress() override {
    if (output() || !ready({Kind::SS_FINAL})) return;
    set_output(ss_retrieve(payload::decode_blob(payload(Kind::SS_FINAL)), *keys_, s_));
  }

 private:
  bool s_;
  std::optional<PadKeys> keys_;
};

bool bit_choice(const RoleInput& in) { return in.choice.value_or(0) != 0; }

const RoleInput& input_of(const SessionInputs& inputs, Role role) {
  static const RoleInput kEmpty;
  const auto it = inputs.find(role);
  return it == inputs.end() ? kEmpty : it->second;
}

Matrix pair_rows(const RoleInput& in) {
  if (!in.matrix.empty()) return in.matrix;
  return {{in.messages.at(0), in.messages.at(1)}};
}

}  // namespace

std::vector<std::unique_ptr<Party>> make_parties(Protocol protocol, const SessionInputs& inputs,
                                                 const SessionOptions& options,
                                                 const SessionId& session) {
  const Context ctx{options.config, session, options.group, options.registry, options.seed};
  const RoleInput& s_in = input_of(inputs, Role::S);
  const RoleInput& r_in = input_of(inputs, Role::R);
  const RoleInput& t_in = input_of(inputs, Role::T);
  const RoleInput& p1_in = input_of(inputs, Role::P1);

  std::vector<std::unique_ptr<Party>> parties;
  auto delegated = [&](Variant variant) {
    parties.push_back(std::make_unique<DelegatedSender>(ctx, variant, pair_rows(s_in)));
    parties.push_back(std::make_unique<DelegatedReceiver>(ctx, variant, bit_choice(r_in)));
    if (issuer_driven(variant)) {
      parties.push_back(std::make_unique<Issuer>(ctx, variant, bit_choice(t_in),
                                                 t_in.record.value_or(0),
                                                 t_in.record_count.value_or(1)));
    }
    parties.push_back(std::make_unique<ProxyP1>(ctx, variant, p1_in.record));
    parties.push_back(std::make_unique<ProxyP2>(ctx, variant));
  };

  switch (protocol) {
    case Protocol::naor_pinkas:
      parties.push_back(std::make_unique<NpSender>(ctx, pair_rows(s_in), false, false));
      parties.push_back(
          std::make_unique<NpReceiver>(ctx, bit_choice(r_in), std::nullopt, false, false));
      break;
    case Protocol::strawman_broadcast:
      parties.push_back(std::make_unique<NpSender>(ctx, s_in.matrix, true, false));
      parties.push_back(std::make_unique<NpReceiver>(ctx, bit_choice(r_in), r_in.record, true, false));
      break;
    case Protocol::strawman_index:
      parties.push_back(std::make_unique<NpSender>(ctx, s_in.matrix, false, true));
      parties.push_back(std::make_unique<NpReceiver>(ctx, bit_choice(r_in), r_in.record, false, true));
      break;
    case Protocol::one_of_n:
    case Protocol::compiled: {
      const bool compiled = protocol == Protocol::compiled;
      parties.push_back(std::make_unique<OneOfNSender>(ctx, s_in.messages, compiled));
      parties.push_back(std::make_unique<OneOfNReceiver>(ctx, s_in.messages.size(),
                                                         r_in.choice.value_or(0), compiled));
      break;
    }
    case Protocol::dq:
      delegated(Variant::dq);
      break;
    case Protocol::duq:
      delegated(Variant::duq);
      break;
    case Protocol::dqmr:
      delegated(Variant::dqmr);
      break;
    case Protocol::duqmr:
      delegated(Variant::duqmr);
      break;
    case Protocol::supersonic:
      parties.push_back(std::make_unique<SsSender>(ctx, s_in.messages.at(0), s_in.messages.at(1)));
      parties.push_back(std::make_unique<SsReceiver>(ctx, bit_choice(r_in)));
      parties.push_back(std::make_unique<SsProxy>(ctx));
      break;
  }
  return parties;
}

}  // namespace oblivis::harness::detail
