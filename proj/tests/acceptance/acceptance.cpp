// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "oblivis/ahe.hpp"
#include "oblivis/compiler.hpp"
#include "oblivis/counters.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/harness/payloads.hpp"
#include "oblivis/harness/routing_log.hpp"
#include "oblivis/harness/session.hpp"
#include "oblivis/hash.hpp"
#include "oblivis/mr_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/one_of_n.hpp"
#include "oblivis/supersonic.hpp"
#include "oracle.hpp"

namespace {

using namespace oblivis;
namespace hs = oblivis::harness;

// Criterion 1.
constexpr std::size_t kSetsPerCell = 100;
constexpr std::size_t kMultiRecordZ[] = {1, 3, 8};
constexpr std::size_t kCompiledN[] = {2, 8, 64};
// Criterion 2 and 3.
constexpr std::size_t kTableDraws = 100;
// Criterion 4.
constexpr std::size_t kDownloadZ[] = {1, 16, 64};
constexpr std::size_t kDownloadN[] = {2, 8, 64};
// Criterion 5 and 10.
constexpr std::uint64_t kSeeds = 5;
// Criterion 7.
constexpr double kSingleTransferBudgetMs = 10.0;
constexpr std::size_t kSingleReps = 500;
constexpr std::size_t kSessionRuns = 21;
constexpr std::size_t kBatchN = 100000;
constexpr std::size_t kBatchReps = 3;
constexpr double kAmortizationFactor = 2.0;
constexpr std::size_t kCompareN = 128;
constexpr std::size_t kCompareSupersonicReps = 50;
constexpr std::size_t kCompareNpReps = 10;
constexpr double kSpeedupFloor = 10.0;
// Criterion 8.
constexpr std::size_t kAheDraws = 1000;
constexpr std::size_t kOneHotZ[] = {1, 2, 4, 8};
// Criterion 9.
constexpr std::size_t kChiDraws = 10000;
constexpr double kChiPFloor = 0.01;
constexpr std::size_t kMonobitDraws = 100000;
constexpr double kMonobitLow = 0.49;
constexpr double kMonobitHigh = 0.51;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

const SessionConfig& cfg() {
  static const SessionConfig c = SessionConfig::test_profile();
  return c;
}

const GroupParams& test_group() {
  static const GroupParams g = gen_group(512, seed_bytes(0x5eed));
  return g;
}

const GroupParams& tiny_group() {
  static const GroupParams g = group_from_safe_prime(BigInt(1187), BigInt(4));
  return g;
}

oracle::Z to_z(const BigInt& x) { return oracle::Z(x.get_mpz_t()); }

oracle::Group oracle_group(const GroupParams& pk) { return oracle::group(to_z(pk.p), pk.g.get_ui()); }

Bytes payload(Rng& rng, const SessionConfig& config = cfg()) {
  const std::size_t len = rng.uniform_below(BigInt(config.max_payload_bytes() + 1)).get_ui();
  return rng.bytes(len);
}

Message pad(const Bytes& b) { return Message::pad(b, cfg()); }

std::vector<std::pair<Bytes, Bytes>> gen_matrix(Rng& rng, std::size_t z) {
  std::vector<std::pair<Bytes, Bytes>> m;
  for (std::size_t t = 0; t < z; ++t) m.emplace_back(payload(rng), payload(rng));
  return m;
}

MessageMatrix pad_matrix(const std::vector<std::pair<Bytes, Bytes>>& m) {
  MessageMatrix out;
  for (const auto& [a, b] : m) out.emplace_back(pad(a), pad(b));
  return out;
}

FinalQuery dq_queries(const GroupParams& pk, const DqRequest& req) {
  return dq_p1_gen_query(req.to_p1, dq_p2_gen_query(req.to_p2, pk), pk);
}

FinalQuery duq_queries(const GroupParams& pk, const DuqBlinds& b, const IssuerRequest& t) {
  return duq_p1_gen_query(b.r1, t.share_p1, duq_p2_gen_query(b.r2, t.share_p2, pk), pk);
}

// Criterion 1: every protocol, every valid combination, 100+ message sets.
Outcome correctness_grid() {
  Outcome o;
  const GroupParams& pk = test_group();
  const Rng master = Rng::from_u64(1001);
  std::size_t cells = 0;
  std::size_t runs = 0;
  auto cell = [&](const std::string& name, std::uint64_t idx, std::size_t sets,
                  const std::function<bool(Rng&)>& body) {
    ++cells;
    Rng rng = master.derive(name, idx);
    std::size_t fails = 0;
    for (std::size_t i = 0; i < sets; ++i) {
      ++runs;
      if (!body(rng)) ++fails;
    }
    o.require(fails == 0, name + " cell " + std::to_string(idx) + ": " + std::to_string(fails) + " failures");
  };

  for (bool s : {false, true}) {
    cell("naor-pinkas", s, kSetsPerCell, [&](Rng& rng) {
      const Bytes a = payload(rng), b = payload(rng);
      const auto q = np_gen_query(pk, s, rng);
      return np_retrieve(np_gen_res(pad(a), pad(b), pk, q.query, rng), q.secret, pk) == (s ? b : a);
    });
  }

  for (bool s : {false, true}) {
    for (bool s1 : {false, true}) {
      cell("dq", 2 * s + s1, kSetsPerCell, [&](Rng& rng) {
        const Bytes a = payload(rng), b = payload(rng);
        const DqRequest req = dq_request_with(s, s1, random_exponent(pk, rng), random_exponent(pk, rng));
        const auto res = dq_gen_res(pad(a), pad(b), pk, dq_queries(pk, req), rng);
        return dq_retrieve(res, req.state, pk) == (s ? b : a);
      });
    }
  }

  for (bool s : {false, true}) {
    for (bool s1 : {false, true}) {
      for (bool swap : {false, true}) {
        cell("duq", 4 * s + 2 * s1 + swap, kSetsPerCell, [&](Rng& rng) {
          const Bytes a = payload(rng), b = payload(rng);
          const DuqBlinds blinds = duq_r_request(pk, rng);
          const IssuerRequest t = duq_t_request_with(s, s1, rng.bytes(cfg().tag_bytes()));
          const auto res = duq_respond(pad(a), pad(b), pk, duq_queries(pk, blinds, t), t.sender_tag, cfg(),
                                       random_nonzero_exponent(pk, rng),
                                       random_nonzero_exponent(pk, rng), swap);
          return duq_retrieve(res, blinds, t.receiver_tag, pk, cfg()) == (s ? b : a);
        });
      }
    }
  }

  for (bool s : {false, true}) {
    for (bool s1 : {false, true}) {
      cell("supersonic", 2 * s + s1, kSetsPerCell, [&](Rng& rng) {
        const Bytes a = payload(rng), b = payload(rng);
        const PadKeys keys = ss_setup(cfg(), rng);
        const bool s2 = s != s1;
        const Bytes e = ss_obl_filter(ss_gen_res(pad(a), pad(b), keys, s1), s2);
        return ss_retrieve(e, keys, s) == (s ? b : a);
      });
    }
  }

  for (std::size_t z : kMultiRecordZ) {
    for (std::size_t v = 0; v < z; ++v) {
      for (bool s : {false, true}) {
        for (bool s1 : {false, true}) {
          cell("dqmr-z" + std::to_string(z), 4 * v + 2 * s + s1, kSetsPerCell, [&](Rng& rng) {
            const auto m = gen_matrix(rng, z);
            const DqRequest req =
                dq_request_with(s, s1, random_exponent(pk, rng), random_exponent(pk, rng));
            const auto res = dqmr_gen_res(pad_matrix(m), pk, dq_queries(pk, req), rng);
            return dqmr_retrieve(dqmr_obl_filter(res, v), req.state, pk) == (s ? m[v].second : m[v].first);
          });
        }
      }
    }
  }

  // The row permutation bit is drawn inside duqmr_gen_res, so each cell
  // runs until both outcomes of row v have 100 successes each.
  Rng key_rng = master.derive("duqmr-keys");
  const AheKeyPair keys = duqmr_r_setup(cfg(), key_rng);
  for (std::size_t z : kMultiRecordZ) {
    for (std::size_t v = 0; v < z; ++v) {
      for (bool s : {false, true}) {
        for (bool s1 : {false, true}) {
          ++cells;
          const std::string name = "duqmr-z" + std::to_string(z);
          Rng rng = master.derive(name, 4 * v + 2 * s + s1);
          std::array<std::size_t, 2> seen{};
          std::size_t fails = 0;
          std::size_t attempts = 0;
          while (std::min(seen[0], seen[1]) < kSetsPerCell && attempts < 20 * kSetsPerCell) {
            ++attempts;
            ++runs;
            const auto m = gen_matrix(rng, z);
            const DuqBlinds blinds = duq_r_request(pk, rng);
            const IssuerRequest t = duq_t_request_with(s, s1, rng.bytes(cfg().tag_bytes()));
            const auto w = duqmr_t_setup(keys.pk, z, v, rng);
            const auto res = duqmr_gen_res(pad_matrix(m), pk, duq_queries(pk, blinds, t), t.sender_tag, cfg(), rng);
            const BigInt x = retrieval_exponent(pk, blinds.r1, blinds.r2, t.receiver_tag.s2);
            const bool swapped = duq_trial_decrypt(res[v], x, pk, cfg())[0].tail != t.sender_tag;
            const Bytes got = duqmr_retrieve(duqmr_obl_filter(keys.pk, res, w), blinds, keys,
                                             t.receiver_tag, pk, cfg());
            if (got == (s ? m[v].second : m[v].first)) {
              ++seen[swapped ? 1 : 0];
            } else {
              ++fails;
            }
          }
          o.require(fails == 0 && std::min(seen[0], seen[1]) >= kSetsPerCell,
                    name + " cell " + std::to_string(v) + std::to_string(s) + std::to_string(s1) +
                        ": fails=" + std::to_string(fails) + " kept=" + std::to_string(seen[0]) + "/" +
                        std::to_string(seen[1]));
        }
      }
    }
  }

  for (std::size_t n : kCompiledN) {
    Rng setup_rng = master.derive("compiled-keys", n);
    const auto suite = compile(NpOneOfN(n, cfg(), pk), compiled_setup(NpOneOfN(n, cfg(), pk), setup_rng));
    for (std::size_t s = 0; s < n; ++s) {
      cell("compiled-n" + std::to_string(n), s, kSetsPerCell, [&](Rng& rng) {
        std::vector<Bytes> raw;
        std::vector<Message> msgs;
        for (std::size_t i = 0; i < n; ++i) {
          raw.push_back(payload(rng));
          msgs.push_back(pad(raw.back()));
        }
        auto [q, sp] = suite.gen_query(pk, s, rng);
        const auto res = suite.gen_res(msgs, pk, q, rng);
        return suite.retrieve(res, q, sp, pk, s) == raw[s];
      });
    }
  }
  o.detail << cells << " cells, " << runs << " runs";
  return o;
}

// Criterion 2: partial and final queries against the hand-written table.
Outcome exponent_table() {
  Outcome o;
  std::size_t checks = 0;
  for (const GroupParams* pk : {&test_group(), &tiny_group()}) {
    const oracle::Group G = oracle_group(*pk);
    Rng rng = Rng::from_u64(1002).derive("table", pk->p.get_ui());
    for (const auto& row : oracle::exponent_table()) {
      const bool s1 = row.s1 != 0;
      const bool s2 = row.s2 != 0;
      const bool s = s1 != s2;
      for (std::size_t i = 0; i < kTableDraws; ++i) {
        const BigInt r1 = random_exponent(*pk, rng);
        const BigInt r2 = random_exponent(*pk, rng);
        const oracle::Z z1 = to_z(r1), z2 = to_z(r2);
        const DqRequest req = dq_request_with(s, s1, r1, r2);
        const PartialQuery q2 = dq_p2_gen_query(req.to_p2, *pk);
        const FinalQuery q1 = dq_p1_gen_query(req.to_p1, q2, *pk);
        const PartialQuery u2 = duq_p2_gen_query(r2, s2, *pk);
        const FinalQuery u1 = duq_p1_gen_query(r1, s1, u2, *pk);
        const bool ok = req.to_p2.share == s2 && to_z(q2.delta0) == oracle::eval(G, row.delta0, z1, z2) &&
                        to_z(q2.delta1) == oracle::eval(G, row.delta1, z1, z2) &&
                        to_z(q1.beta0) == oracle::eval(G, row.beta0, z1, z2) &&
                        to_z(q1.beta1) == oracle::eval(G, row.beta1, z1, z2) && u2 == q2 && u1 == q1;
        o.require(ok, "row s1=" + std::to_string(row.s1) + " s2=" + std::to_string(row.s2) +
                          " p=" + pk->p.get_str().substr(0, 8));
        ++checks;
      }
    }
  }
  o.detail << "4 rows x 2 groups, " << checks << " exact comparisons";
  return o;
}

// Criterion 3: filtered Supersonic element for each (s1, s2).
Outcome swap_table() {
  Outcome o;
  Rng rng = Rng::from_u64(1003);
  for (const auto& row : oracle::swap_table()) {
    const bool s1 = row.s1 != 0, s2 = row.s2 != 0;
    o.require(((row.s1 ^ row.s2) == row.s) && row.survivor == row.s, "table row inconsistent");
    for (std::size_t i = 0; i < kTableDraws; ++i) {
      const Bytes a = payload(rng), b = payload(rng);
      const PadKeys k = ss_setup(cfg(), rng);
      const Bytes e = ss_obl_filter(ss_gen_res(pad(a), pad(b), k, s1), s2);
      const Bytes& key = row.survivor == 0 ? k.k0 : k.k1;
      const Bytes& want = row.survivor == 0 ? a : b;
      o.require(oracle::xor_of(e, key) == oracle::pad(want, cfg().sigma_bits) &&
                    ss_retrieve(e, k, row.s != 0) == want,
                "row s1=" + std::to_string(row.s1) + " s2=" + std::to_string(row.s2));
    }
  }
  o.detail << "4 rows x " << kTableDraws << " draws";
  return o;
}

hs::SessionOptions session_options(std::uint64_t seed, hs::SchedulerKind k = hs::SchedulerKind::sequential) {
  hs::SessionOptions opt;
  opt.seed = seed_bytes(seed);
  opt.group = test_group();
  opt.scheduler = k;
  return opt;
}

// Criterion 4: constant download for R, and the strawmen break it.
Outcome constant_download() {
  Outcome o;
  Rng rng = Rng::from_u64(1004);
  for (hs::Protocol p : {hs::Protocol::dqmr, hs::Protocol::duqmr}) {
    std::vector<std::size_t> sizes;
    for (std::size_t z : kDownloadZ) {
      const auto m = gen_matrix(rng, z);
      const auto r = hs::run_session(p, hs::inputs::for_protocol(p, m, z / 2, 1), session_options(z));
      o.require(r.message_output(hs::Role::R) == m[z / 2].second, "wrong output");
      sizes.push_back(hs::bytes_to_role(r.log, hs::Role::R));
    }
    o.require(std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end(),
              std::string(hs::protocol_name(p)) + " download varies with z");
    o.detail << hs::protocol_name(p) << "=" << sizes[0] << "B ";
  }
  {
    std::vector<std::size_t> sizes;
    for (std::size_t n : kDownloadN) {
      std::vector<Bytes> msgs;
      for (std::size_t i = 0; i < n; ++i) msgs.push_back(payload(rng));
      const auto r = hs::run_session(hs::Protocol::compiled, hs::inputs::one_of_n(msgs, n - 1), session_options(n));
      o.require(r.message_output(hs::Role::R) == msgs[n - 1], "wrong compiled output");
      sizes.push_back(hs::bytes_to_role(r.log, hs::Role::R));
    }
    o.require(std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end(),
              "compiled download varies with n");
    o.detail << "compiled=" << sizes[0] << "B ";
  }
  {
    std::vector<std::size_t> sizes;
    for (std::size_t z : {4u, 8u}) {
      const auto m = gen_matrix(rng, z);
      const auto r = hs::run_session(hs::Protocol::strawman_broadcast, hs::inputs::strawman(m, 1, false),
                                     session_options(z));
      sizes.push_back(hs::bytes_to_role(r.log, hs::Role::R));
    }
    o.require(sizes[0] < sizes[1], "broadcast strawman did not grow with z");
    o.detail << "broadcast strawman " << sizes[0] << "B->" << sizes[1] << "B ";
  }
  {
    const auto m = gen_matrix(rng, 5);
    const auto r = hs::run_session(hs::Protocol::strawman_index, hs::inputs::strawman(m, 3, true), session_options(5));
    const auto to_s = r.log.between(hs::Role::R, hs::Role::S);
    const bool leaked = !to_s.empty() && hs::payload::decode_indexed_query(to_s[0].payload).second == 3;
    bool flagged = false;
    try {
      hs::assert_sender_push(r.log);
    } catch (const hs::ConformanceError&) {
      flagged = true;
    }
    o.require(leaked && flagged, "index strawman not detected");
    o.detail << "index strawman flagged";
  }
  return o;
}

const hs::Protocol kDelegated[] = {hs::Protocol::dq, hs::Protocol::duq, hs::Protocol::dqmr, hs::Protocol::duqmr};

bool multi(hs::Protocol p) { return p == hs::Protocol::dqmr || p == hs::Protocol::duqmr; }

// Criterion 5: no R -> S envelope in honest delegated logs.
Outcome sender_push() {
  Outcome o;
  std::size_t sessions = 0;
  std::size_t envelopes = 0;
  Rng rng = Rng::from_u64(1005);
  for (hs::Protocol p : kDelegated) {
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      for (auto k : {hs::SchedulerKind::sequential, hs::SchedulerKind::threaded, hs::SchedulerKind::socket}) {
        const std::size_t z = multi(p) ? 1 + seed : 1;
        const auto m = gen_matrix(rng, z);
        const auto r = hs::run_session(p, hs::inputs::for_protocol(p, m, seed % z, seed % 2), session_options(seed, k));
        ++sessions;
        envelopes += r.log.size();
        o.require(r.log.between(hs::Role::R, hs::Role::S).empty(), std::string(hs::protocol_name(p)));
        try {
          hs::assert_sender_push(r.log);
        } catch (const hs::ConformanceError& e) {
          o.require(false, e.what());
        }
      }
    }
  }
  o.detail << sessions << " sessions, " << envelopes << " envelopes, 0 from R to S";
  return o;
}

// Criterion 6: instrumented operation counts.
Outcome zero_cost() {
  Outcome o;
  Rng rng = Rng::from_u64(1006);
  for (hs::Protocol p : kDelegated) {
    const auto m = gen_matrix(rng, multi(p) ? 4 : 1);
    const auto r = hs::run_session(p, hs::inputs::for_protocol(p, m, 0, 1), session_options(6));
    std::size_t request_steps = 0;
    for (const auto& step : r.steps) {
      if (step.role != hs::Role::R) continue;
      if (std::find(step.emitted.begin(), step.emitted.end(), hs::Kind::REQUEST) == step.emitted.end()) continue;
      ++request_steps;
      o.require(step.ops.group_exponentiations == 0, std::string(hs::protocol_name(p)) + " request exponentiates");
    }
    o.require(request_steps == 1, std::string(hs::protocol_name(p)) + " request step not found");
  }
  const auto ss = hs::run_session(hs::Protocol::supersonic, hs::inputs::two_party(Bytes{1}, Bytes{2}, true),
                                  session_options(6));
  for (const auto& step : ss.steps) o.require(step.ops.public_key_operations() == 0, "supersonic step");
  const CounterScope scope;
  for (int i = 0; i < 1000; ++i) {
    const PadKeys k = ss_setup(cfg(), rng);
    const BitShares sh = ss_gen_query(i % 2 == 1, rng);
    ss_retrieve(ss_obl_filter(ss_gen_res(pad(Bytes{1}), pad(Bytes{2}), k, sh.s1), sh.s2), k, i % 2 == 1);
  }
  o.require(scope.delta().public_key_operations() == 0, "supersonic direct calls");
  o.detail << "R request steps: 0 exponentiations in 4 variants; supersonic: 0 public-key ops";
  return o;
}

double per_invocation_ms(const tools::BenchReport& r) { return r.total_ms / static_cast<double>(r.n); }

// Criterion 7: single-thread timing at the production profile.
Outcome timing() {
  Outcome o;
  const SessionConfig prod = SessionConfig::production_profile();
  tools::BenchOptions single;
  single.protocol = "supersonic";
  single.config = prod;
  single.n = 1;
  single.reps = kSingleReps;
  single.warmup = 50;
  const auto r1 = tools::run_bench(single);
  o.require(r1.total_ms < kSingleTransferBudgetMs, "single transfer too slow");

  // The same transfer as a full session: envelopes, encoding and routing.
  std::vector<double> session_ms;
  for (std::size_t i = 0; i < kSessionRuns; ++i) {
    hs::SessionOptions opt;
    opt.config = prod;
    opt.seed = seed_bytes(i);
    const auto start = std::chrono::steady_clock::now();
    const auto r = hs::run_session(hs::Protocol::supersonic, hs::inputs::two_party(Bytes{1}, Bytes{2}, i % 2 == 1), opt);
    session_ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    o.require(r.message_output(hs::Role::R) == Bytes{static_cast<std::uint8_t>(1 + i % 2)}, "session output");
  }
  std::sort(session_ms.begin(), session_ms.end());
  const double session_median = session_ms[session_ms.size() / 2];
  o.require(session_median < kSingleTransferBudgetMs, "single session too slow");

  tools::BenchOptions batch = single;
  batch.n = kBatchN;
  batch.reps = kBatchReps;
  batch.warmup = 10;
  const auto rb = tools::run_bench(batch);
  const double ratio = per_invocation_ms(rb) / per_invocation_ms(r1);
  o.require(ratio < kAmortizationFactor, "batched per-invocation cost too high");

  tools::BenchOptions ss = single;
  ss.n = kCompareN;
  ss.reps = kCompareSupersonicReps;
  const auto rs = tools::run_bench(ss);
  tools::BenchOptions np = ss;
  np.protocol = "naor-pinkas";
  np.reps = kCompareNpReps;
  np.warmup = 2;
  const auto rn = tools::run_bench(np);
  const double speedup = rn.total_ms / rs.total_ms;
  o.require(speedup >= kSpeedupFloor, "speedup below floor");

  char buf[320];
  std::snprintf(buf, sizeof buf,
                "(a) n=1 %.4f ms, full session median %.3f ms, both < %.0f ms; (b) n=%zu %.6f ms/op, ratio %.3f < %.1f; "
                "(c) n=%zu supersonic %.3f ms vs naor-pinkas %.1f ms, %.0fx >= %.0fx",
                r1.total_ms, session_median, kSingleTransferBudgetMs, kBatchN, per_invocation_ms(rb), ratio,
                kAmortizationFactor, kCompareN, rs.total_ms, rn.total_ms, speedup, kSpeedupFloor);
  o.detail << buf;
  return o;
}

// Criterion 8: AHE identities.
Outcome ahe_identities() {
  Outcome o;
  Rng rng = Rng::from_u64(1008);
  const AheKeyPair k = duqmr_r_setup(cfg(), rng);
  const BigInt& n = k.pk.n;
  for (std::size_t i = 0; i < kAheDraws; ++i) {
    const BigInt a = rng.uniform_below(n);
    const BigInt b = rng.uniform_below(n);
    const BigInt c = rng.uniform_below(n);
    const auto ea = ahe_enc(k.pk, a, rng);
    const auto eb = ahe_enc(k.pk, b, rng);
    o.require(ahe_dec(k, ea) == a, "dec(enc(m)) != m");
    BigInt sum = (a + b) % n;
    o.require(ahe_dec(k, ahe_hom_add(k.pk, ea, eb)) == sum, "additive");
    BigInt prod = (a * c) % n;
    o.require(ahe_dec(k, ahe_hom_scale(k.pk, ea, c)) == prod, "scalar");
  }
  std::size_t selections = 0;
  for (std::size_t z : kOneHotZ) {
    for (std::size_t i = 0; i < kAheDraws; ++i) {
      const std::size_t v = i % z;
      std::vector<BigInt> values;
      for (std::size_t t = 0; t < z; ++t) values.push_back(rng.uniform_bits(cfg().required_plaintext_bits() - 8));
      const auto w = ahe_encrypt_one_hot(k.pk, z, v, rng);
      o.require(ahe_dec(k, ahe_select(k.pk, w, values)) == values[v], "one-hot z=" + std::to_string(z));
      ++selections;
    }
  }
  o.detail << kAheDraws << " draws each for enc/dec, add, scale; " << selections
           << " one-hot selections over z in {1,2,4,8}, every v";
  return o;
}

double chi_square_p(std::size_t ones, std::size_t total) {
  const double expected = static_cast<double>(total) / 2.0;
  const double d0 = static_cast<double>(ones) - expected;
  const double chi2 = 2.0 * d0 * d0 / expected;
  return std::erfc(std::sqrt(chi2 / 2.0));
}

std::size_t popcount(const Bytes& b) {
  std::size_t c = 0;
  for (std::uint8_t x : b) c += static_cast<std::size_t>(__builtin_popcount(x));
  return c;
}

// Criterion 9: uniformity of share and permutation bits, hash monobit.
Outcome statistics() {
  Outcome o;
  Rng rng = Rng::from_u64(1009);
  const GroupParams& pk = test_group();
  std::size_t s1_ones = 0, s2_ones = 0, ss_ones = 0;
  for (std::size_t i = 0; i < kChiDraws; ++i) {
    const BitShares sh = share_bit(i % 2 == 1, rng);
    s1_ones += sh.s1;
    s2_ones += sh.s2;
    ss_ones += ss_gen_query(true, rng).s1;
  }
  std::size_t perm_ones = 0;
  const IssuerRequest t = duq_t_request_with(false, false, rng.bytes(cfg().tag_bytes()));
  const DuqBlinds blinds = duq_r_request(pk, rng);
  const FinalQuery q1 = duq_queries(pk, blinds, t);
  const BigInt x = retrieval_exponent(pk, blinds.r1, blinds.r2, t.receiver_tag.s2);
  for (std::size_t i = 0; i < kChiDraws; ++i) {
    const auto res = duq_gen_res(pad(Bytes{1}), pad(Bytes{2}), pk, q1, t.sender_tag, cfg(), rng);
    perm_ones += duq_trial_decrypt(res, x, pk, cfg())[0].tail != t.sender_tag ? 1 : 0;
  }
  std::size_t pair_ones = 0;
  for (std::size_t i = 0; i < kChiDraws; ++i) {
    bool swapped = false;
    permute_pair(std::make_pair(0, 1), rng, &swapped);
    pair_ones += swapped;
  }
  const std::pair<const char*, std::size_t> bits[] = {
      {"s1", s1_ones}, {"s2", s2_ones}, {"supersonic s1", ss_ones}, {"duq permutation", perm_ones},
      {"permute_pair", pair_ones}};
  for (const auto& [name, ones] : bits) {
    const double p = chi_square_p(ones, kChiDraws);
    o.require(p > kChiPFloor, std::string(name) + " chi-square");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s p=%.3f; ", name, p);
    o.detail << buf;
  }
  std::size_t h_ones = 0, g_ones = 0, h_first = 0, g_first = 0;
  for (std::size_t i = 0; i < kMonobitDraws; ++i) {
    const Bytes in = rng.bytes(32);
    const Bytes h = hash_H(in, cfg().sigma_bits);
    const Bytes g = hash_G(in, cfg().sigma_bits, cfg().lambda_bits);
    h_ones += popcount(h);
    g_ones += popcount(g);
    h_first += h[0] >> 7;
    g_first += g[0] >> 7;
  }
  const double h_frac = static_cast<double>(h_ones) / (kMonobitDraws * cfg().sigma_bits);
  const double g_frac = static_cast<double>(g_ones) / (kMonobitDraws * (cfg().sigma_bits + cfg().lambda_bits));
  const double h1 = static_cast<double>(h_first) / kMonobitDraws;
  const double g1 = static_cast<double>(g_first) / kMonobitDraws;
  for (double f : {h_frac, g_frac, h1, g1}) o.require(f >= kMonobitLow && f <= kMonobitHigh, "monobit");
  char buf[160];
  std::snprintf(buf, sizeof buf, "H ones %.5f (bit0 %.4f), G ones %.5f (bit0 %.4f)", h_frac, h1, g_frac, g1);
  o.detail << buf;
  return o;
}

// Criterion 10: identical logs across runs and schedulers.
Outcome determinism() {
  Outcome o;
  const hs::Protocol all[] = {hs::Protocol::naor_pinkas, hs::Protocol::one_of_n, hs::Protocol::compiled,
                              hs::Protocol::dq,          hs::Protocol::duq,      hs::Protocol::dqmr,
                              hs::Protocol::duqmr,       hs::Protocol::supersonic};
  Rng rng = Rng::from_u64(1010);
  std::size_t compared = 0;
  for (hs::Protocol p : all) {
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const auto m = gen_matrix(rng, 3);
      const auto in = hs::inputs::for_protocol(p, m, 2, 1);
      hs::SessionOptions opt;
      opt.seed = seed_bytes(seed);
      const auto a = hs::run_session(p, in, opt);
      const auto b = hs::run_session(p, in, opt);
      opt.scheduler = hs::SchedulerKind::threaded;
      const auto c = hs::run_session(p, in, opt);
      opt.scheduler = hs::SchedulerKind::socket;
      const auto d = hs::run_session(p, in, opt);
      const std::string ref = a.log.export_ndjson();
      o.require(ref == b.log.export_ndjson(), std::string(hs::protocol_name(p)) + " rerun");
      o.require(ref == c.log.export_ndjson(), std::string(hs::protocol_name(p)) + " threaded");
      o.require(ref == d.log.export_ndjson(), std::string(hs::protocol_name(p)) + " socket");
      compared += 3;
    }
  }
  o.detail << compared << " log comparisons over 8 protocols (rerun, threaded, socket)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number; default is all.
  std::vector<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoul(argv[i]));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"correctness grid", correctness_grid}, {"exponent table", exponent_table},
      {"swap table", swap_table},             {"constant download", constant_download},
      {"sender push", sender_push},           {"zero-cost receiver", zero_cost},
      {"timing", timing},                     {"ahe identities", ahe_identities},
      {"statistics", statistics},             {"determinism", determinism},
  };
  std::printf("# %s\n", oblivis::tools::environment_description().c_str());
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), i + 1) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      Outcome o = criteria[i].second();
      pass = o.pass;
      detail = o.detail.str();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s: %s [%.1f s]\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
