#include "verify.hpp"

#include <functional>
#include <utility>

#include "oblivis/ahe.hpp"
#include "oblivis/compiler.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/group.hpp"
#include "oblivis/harness/session.hpp"
#include "oblivis/hash.hpp"
#include "oblivis/message.hpp"
#include "oblivis/mr_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/supersonic.hpp"

namespace oblivis::tools {

namespace {

struct Fixture {
  SessionConfig config;
  std::uint64_t seed;
  bool mutate;
  GroupParams group;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

template <class E, class F>
void expect_throw(F&& f, const std::string& what) {
  try {
    f();
  } catch (const E&) {
    return;
  }
  throw Error(what);
}

Bytes payload(Rng& rng, const SessionConfig& config) { return rng.bytes(config.max_payload_bytes()); }

using Check = std::pair<std::string, std::function<void(const Fixture&, Rng&)>>;

std::vector<Check> primitives_checks() {
  return {
      {"hash-deterministic",
       [](const Fixture& f, Rng&) {
         const Bytes in = to_bytes("oblivis");
         expect(hash_H(in, f.config.sigma_bits) == hash_H(in, f.config.sigma_bits), "H is not deterministic");
         expect(hash_H(in, f.config.sigma_bits) != hash_G(in, f.config.sigma_bits, f.config.lambda_bits),
                "H and G collide");
       }},
      {"message-padding",
       [](const Fixture& f, Rng& rng) {
         const Bytes p = payload(rng, f.config);
         const Message m = Message::pad(p, f.config);
         expect(m.size() == f.config.message_bytes(), "padded size");
         expect(m.unpad() == p, "unpad round trip");
         expect_throw<PreconditionError>([&] { Message::pad(Bytes(f.config.max_payload_bytes() + 1), f.config); },
                                     "oversized payload accepted");
       }},
      {"group-constant",
       [](const Fixture& f, Rng& rng) {
         validate_group(f.group);
         expect(in_subgroup(f.group, f.group.C), "C outside the subgroup");
         const BigInt a = random_exponent(f.group, rng);
         const BigInt x = group_pow_g(f.group, a);
         expect(group_mul(f.group, group_div_g(f.group, f.group.C, a), x) == f.group.C, "C / g^a * g^a != C");
       }},
  };
}

std::vector<Check> ahe_checks() {
  return {
      {"enc-dec",
       [](const Fixture& f, Rng& rng) {
         const AheKeyPair keys = ahe_kgen(f.config.required_plaintext_bits(), rng);
         const BigInt m = rng.uniform_bits(f.config.required_plaintext_bits());
         expect(ahe_dec(keys, ahe_enc(keys.pk, m, rng)) == m, "decryption mismatch");
       }},
      {"homomorphism",
       [](const Fixture& f, Rng& rng) {
         const AheKeyPair keys = ahe_kgen(f.config.required_plaintext_bits(), rng);
         const BigInt a = rng.uniform_bits(64);
         const BigInt b = rng.uniform_bits(64);
         const BigInt k = rng.uniform_bits(32);
         const auto c = ahe_hom_add(keys.pk, ahe_enc(keys.pk, a, rng), ahe_hom_scale(keys.pk, ahe_enc(keys.pk, b, rng), k));
         expect(ahe_dec(keys, c) == a + b * k, "Dec(Enc(a) + k*Enc(b)) != a + k*b");
       }},
  };
}

std::vector<Check> np_checks() {
  return {{"both-choices", [](const Fixture& f, Rng& rng) {
             for (bool s : {false, true}) {
               const Bytes p0 = payload(rng, f.config);
               const Bytes p1 = payload(rng, f.config);
               const auto q = np_gen_query(f.group, s, rng);
               const auto res = np_gen_res(Message::pad(p0, f.config), Message::pad(p1, f.config), f.group,
                                           q.query, rng);
               expect(np_retrieve(res, q.secret, f.group) == (s ? p1 : p0), "wrong message retrieved");
             }
           }}};
}

Bytes dq_retrieve_checked(const Fixture& f, const ResponsePair& res, const DqReceiverState& state) {
  if (!f.mutate) return dq_retrieve(res, state, f.group);
  const BigInt x = retrieval_exponent(f.group, state.r1, state.r2, !state.shares.s2);
  SessionConfig cfg = f.config;
  return Message::unpad(unmask_element(f.group, res.e[state.s ? 1 : 0], x, cfg, false));
}

std::vector<Check> dq_checks() {
  return {
      {"all-share-splits",
       [](const Fixture& f, Rng& rng) {
         for (bool s : {false, true}) {
           for (bool s1 : {false, true}) {
             const Bytes p0 = payload(rng, f.config);
             const Bytes p1 = payload(rng, f.config);
             const DqRequest req = dq_request_with(s, s1, random_exponent(f.group, rng), random_exponent(f.group, rng));
             const auto q2 = dq_p2_gen_query(req.to_p2, f.group);
             const auto q1 = dq_p1_gen_query(req.to_p1, q2, f.group);
             const auto res = dq_gen_res(Message::pad(p0, f.config), Message::pad(p1, f.config), f.group, q1, rng);
             expect(dq_retrieve_checked(f, res, req.state) == (s ? p1 : p0), "wrong message retrieved");
           }
         }
       }},
      {"tampered-query-aborts",
       [](const Fixture& f, Rng& rng) {
         const DqRequest req = dq_request(f.group, true, rng);
         auto q1 = dq_p1_gen_query(req.to_p1, dq_p2_gen_query(req.to_p2, f.group), f.group);
         q1.beta1 = group_mul(f.group, q1.beta1, f.group.g);
         expect_throw<AbortError>([&] { dq_check_query(f.group, q1); }, "tampered query accepted");
       }},
  };
}

std::vector<Check> duq_checks() {
  return {
      {"both-choices",
       [](const Fixture& f, Rng& rng) {
         for (bool s : {false, true}) {
           const Bytes p0 = payload(rng, f.config);
           const Bytes p1 = payload(rng, f.config);
           const auto blinds = duq_r_request(f.group, rng);
           const auto issued = duq_t_request(f.config, s, rng);
           const auto q2 = duq_p2_gen_query(blinds.r2, issued.share_p2, f.group);
           const auto q1 = duq_p1_gen_query(blinds.r1, issued.share_p1, q2, f.group);
           const auto res = duq_gen_res(Message::pad(p0, f.config), Message::pad(p1, f.config), f.group, q1,
                                        issued.sender_tag, f.config, rng);
           expect(duq_retrieve(res, blinds, issued.receiver_tag, f.group, f.config) == (s ? p1 : p0),
                  "wrong message retrieved");
         }
       }},
      {"wrong-tag-rejected",
       [](const Fixture& f, Rng& rng) {
         const auto blinds = duq_r_request(f.group, rng);
         const auto issued = duq_t_request(f.config, false, rng);
         const auto q1 = duq_p1_gen_query(blinds.r1, issued.share_p1,
                                          duq_p2_gen_query(blinds.r2, issued.share_p2, f.group), f.group);
         const auto res = duq_gen_res(Message::pad(payload(rng, f.config), f.config),
                                      Message::pad(payload(rng, f.config), f.config), f.group, q1,
                                      rng.bytes(f.config.tag_bytes()), f.config, rng);
         expect_throw<RetrievalError>(
             [&] { duq_retrieve(res, blinds, issued.receiver_tag, f.group, f.config); },
             "response under a foreign tag accepted");
       }},
  };
}

MessageMatrix matrix_of(std::size_t z, const SessionConfig& config, Rng& rng,
                        std::vector<std::pair<Bytes, Bytes>>& raw) {
  MessageMatrix out;
  for (std::size_t t = 0; t < z; ++t) {
    raw.emplace_back(payload(rng, config), payload(rng, config));
    out.emplace_back(Message::pad(raw.back().first, config), Message::pad(raw.back().second, config));
  }
  return out;
}

std::vector<Check> dqmr_checks() {
  return {{"every-record", [](const Fixture& f, Rng& rng) {
             std::vector<std::pair<Bytes, Bytes>> raw;
             const auto matrix = matrix_of(3, f.config, rng, raw);
             for (std::size_t v = 0; v < matrix.size(); ++v) {
               for (bool s : {false, true}) {
                 const DqRequest req = dq_request(f.group, s, rng);
                 const auto q1 = dq_p1_gen_query(req.to_p1, dq_p2_gen_query(req.to_p2, f.group), f.group);
                 const auto all = dqmr_gen_res(matrix, f.group, q1, rng);
                 const auto got = dqmr_retrieve(dqmr_obl_filter(all, v), req.state, f.group);
                 expect(got == (s ? raw[v].second : raw[v].first), "wrong record retrieved");
               }
             }
           }}};
}

std::vector<Check> duqmr_checks() {
  return {{"every-record", [](const Fixture& f, Rng& rng) {
             std::vector<std::pair<Bytes, Bytes>> raw;
             const auto matrix = matrix_of(3, f.config, rng, raw);
             const AheKeyPair keys = duqmr_r_setup(f.config, rng);
             for (std::size_t v = 0; v < matrix.size(); ++v) {
               for (bool s : {false, true}) {
                 const auto w = duqmr_t_setup(keys.pk, matrix.size(), v, rng);
                 const auto blinds = duq_r_request(f.group, rng);
                 const auto issued = duq_t_request(f.config, s, rng);
                 const auto q1 = duq_p1_gen_query(blinds.r1, issued.share_p1,
                                                  duq_p2_gen_query(blinds.r2, issued.share_p2, f.group), f.group);
                 const auto all = duqmr_gen_res(matrix, f.group, q1, issued.sender_tag, f.config, rng);
                 const auto filtered = duqmr_obl_filter(keys.pk, all, w);
                 const auto got = duqmr_retrieve(filtered, blinds, keys, issued.receiver_tag, f.group, f.config);
                 expect(got == (s ? raw[v].second : raw[v].first), "wrong record retrieved");
               }
             }
           }}};
}

std::vector<Check> compiled_checks() {
  return {{"every-lane", [](const Fixture& f, Rng& rng) {
             const std::size_t n = 4;
             const NpOneOfN inner(n, f.config, f.group);
             const auto suite = compile(inner, compiled_setup(inner, rng));
             const auto pk = suite.init(rng);
             std::vector<Bytes> raw;
             std::vector<Message> messages;
             for (std::size_t i = 0; i < n; ++i) {
               raw.push_back(payload(rng, f.config));
               messages.push_back(Message::pad(raw.back(), f.config));
             }
             for (std::size_t s = 0; s < n; ++s) {
               auto [q, sp] = suite.gen_query(pk, s, rng);
               const auto res = suite.gen_res(messages, pk, q, rng);
               expect(suite.retrieve(res, q, sp, pk, s) == raw[s], "wrong lane retrieved");
             }
           }}};
}

std::vector<Check> supersonic_checks() {
  return {
      {"both-choices",
       [](const Fixture& f, Rng& rng) {
         for (bool s : {false, true}) {
           const Bytes p0 = payload(rng, f.config);
           const Bytes p1 = payload(rng, f.config);
           const auto keys = ss_setup(f.config, rng);
           const auto shares = ss_gen_query(s, rng);
           const auto pair = ss_gen_res(Message::pad(p0, f.config), Message::pad(p1, f.config), keys, shares.s1);
           expect(ss_retrieve(ss_obl_filter(pair, shares.s2), keys, s) == (s ? p1 : p0), "wrong message retrieved");
         }
       }},
      {"session-single-use",
       [](const Fixture& f, Rng& rng) {
         SessionRegistry registry;
         SessionId id{};
         rng.fill(id);
         SupersonicSender first(id, &registry);
         first.accept_keys(ss_setup(f.config, rng, id));
         const Message m = Message::pad(payload(rng, f.config), f.config);
         first.respond(m, m, false);
         expect_throw<SessionStateError>([&] { first.respond(m, m, false); }, "second response allowed");
         SupersonicSender replay(id, &registry);
         expect_throw<SessionStateError>([&] { replay.accept_keys(ss_setup(f.config, rng, id)); },
                                         "replayed session id accepted");
       }},
  };
}

std::vector<Check> harness_checks() {
  using namespace harness;
  std::vector<Check> out;
  for (Protocol p : {Protocol::naor_pinkas, Protocol::one_of_n, Protocol::compiled, Protocol::dq, Protocol::duq,
                     Protocol::dqmr, Protocol::duqmr, Protocol::supersonic}) {
    out.emplace_back(std::string(protocol_name(p)), [p](const Fixture& f, Rng& rng) {
      std::vector<std::pair<Bytes, Bytes>> matrix;
      const bool multi = p == Protocol::dqmr || p == Protocol::duqmr || p == Protocol::one_of_n ||
                         p == Protocol::compiled;
      matrix_of(multi ? 3 : 1, f.config, rng, matrix);
      const std::size_t v = matrix.size() - 1;
      SessionOptions options;
      options.config = f.config;
      options.seed = rng.bytes(32);
      options.group = f.group;
      const auto result = run_session(p, inputs::for_protocol(p, matrix, v, 1), options);
      const Bytes& want = matrix[v].second;
      expect(result.message_output(Role::R) == want, "R received the wrong message");
      if (p == Protocol::dq || p == Protocol::duq || p == Protocol::dqmr || p == Protocol::duqmr) {
        assert_sender_push(result.log);
      }
    });
  }
  return out;
}

const std::vector<std::pair<std::string_view, std::vector<Check> (*)()>>& registry() {
  static const std::vector<std::pair<std::string_view, std::vector<Check> (*)()>> suites{
      {"primitives", primitives_checks}, {"ahe", ahe_checks},         {"naor-pinkas", np_checks},
      {"dq", dq_checks},                 {"duq", duq_checks},         {"dqmr", dqmr_checks},
      {"duqmr", duqmr_checks},           {"compiled", compiled_checks}, {"supersonic", supersonic_checks},
      {"harness", harness_checks},
  };
  return suites;
}

}  // namespace

const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  options.config.validate();
  bool known = options.suite == "all";
  for (const auto& [name, _] : registry()) known = known || name == options.suite;
  if (!known) throw PreconditionError("unknown verify suite '" + options.suite + "'");

  const Rng master = Rng::from_u64(options.seed);
  Rng group_rng = master.derive("verify-group");
  const Fixture fixture{options.config, options.seed, options.mutate_dq_sign,
                        init_group(options.config, group_rng)};

  std::vector<CheckResult> results;
  for (const auto& [name, make] : registry()) {
    if (options.suite != "all" && options.suite != name) continue;
    const auto checks = make();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      CheckResult r{std::string(name), checks[i].first, false, {}};
      Rng rng = master.derive(std::string(name) + "/" + checks[i].first);
      try {
        checks[i].second(fixture, rng);
        r.passed = true;
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace oblivis::tools
