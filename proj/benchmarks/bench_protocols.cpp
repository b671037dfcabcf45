#include <benchmark/benchmark.h>

#include "oblivis/compiler.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/mr_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/supersonic.hpp"

namespace {

using namespace oblivis;

SessionConfig config_for(int production) {
  return production != 0 ? SessionConfig::production_profile() : SessionConfig::test_profile();
}

const GroupParams& group_for(int production) {
  static const GroupParams test = gen_group(512, seed_bytes(11));
  static const GroupParams prod = standard_group_2048();
  return production != 0 ? prod : test;
}

std::pair<Message, Message> messages(const SessionConfig& config, Rng& rng) {
  return {Message::pad(rng.bytes(config.max_payload_bytes()), config),
          Message::pad(rng.bytes(config.max_payload_bytes()), config)};
}

void BM_Supersonic(benchmark::State& state) {
  const SessionConfig config = config_for(static_cast<int>(state.range(0)));
  Rng rng = Rng::from_u64(21);
  const auto [m0, m1] = messages(config, rng);
  for (auto _ : state) {
    const bool s = rng.bit();
    const PadKeys keys = ss_setup(config, rng);
    const BitShares q = ss_gen_query(s, rng);
    const Bytes ct = ss_obl_filter(ss_gen_res(m0, m1, keys, q.s1), q.s2);
    benchmark::DoNotOptimize(ss_retrieve(ct, keys, s));
  }
}
BENCHMARK(BM_Supersonic)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_NaorPinkas(benchmark::State& state) {
  const int prod = static_cast<int>(state.range(0));
  const SessionConfig config = config_for(prod);
  const GroupParams& pk = group_for(prod);
  Rng rng = Rng::from_u64(22);
  const auto [m0, m1] = messages(config, rng);
  for (auto _ : state) {
    const auto q = np_gen_query(pk, rng.bit(), rng);
    benchmark::DoNotOptimize(np_retrieve(np_gen_res(m0, m1, pk, q.query, rng), q.secret, pk));
  }
}
BENCHMARK(BM_NaorPinkas)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_DelegatedQuery(benchmark::State& state) {
  const int prod = static_cast<int>(state.range(0));
  const SessionConfig config = config_for(prod);
  const GroupParams& pk = group_for(prod);
  Rng rng = Rng::from_u64(23);
  const auto [m0, m1] = messages(config, rng);
  for (auto _ : state) {
    const DqRequest req = dq_request(pk, rng.bit(), rng);
    const auto q1 = dq_p1_gen_query(req.to_p1, dq_p2_gen_query(req.to_p2, pk), pk);
    benchmark::DoNotOptimize(dq_retrieve(dq_gen_res(m0, m1, pk, q1, rng), req.state, pk));
  }
}
BENCHMARK(BM_DelegatedQuery)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_DelegatedUnknownQuery(benchmark::State& state) {
  const int prod = static_cast<int>(state.range(0));
  const SessionConfig config = config_for(prod);
  const GroupParams& pk = group_for(prod);
  Rng rng = Rng::from_u64(24);
  const auto [m0, m1] = messages(config, rng);
  for (auto _ : state) {
    const auto blinds = duq_r_request(pk, rng);
    const auto issued = duq_t_request(config, rng.bit(), rng);
    const auto q1 = duq_p1_gen_query(blinds.r1, issued.share_p1,
                                     duq_p2_gen_query(blinds.r2, issued.share_p2, pk), pk);
    const auto res = duq_gen_res(m0, m1, pk, q1, issued.sender_tag, config, rng);
    benchmark::DoNotOptimize(duq_retrieve(res, blinds, issued.receiver_tag, pk, config));
  }
}
BENCHMARK(BM_DelegatedUnknownQuery)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_DqmrGenRes(benchmark::State& state) {
  const SessionConfig config = SessionConfig::test_profile();
  const GroupParams& pk = group_for(0);
  Rng rng = Rng::from_u64(25);
  MessageMatrix matrix;
  for (int t = 0; t < state.range(0); ++t) matrix.push_back(messages(config, rng));
  const DqRequest req = dq_request(pk, false, rng);
  const auto q1 = dq_p1_gen_query(req.to_p1, dq_p2_gen_query(req.to_p2, pk), pk);
  for (auto _ : state) benchmark::DoNotOptimize(dqmr_gen_res(matrix, pk, q1, rng));
}
BENCHMARK(BM_DqmrGenRes)->Arg(1)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DuqmrFilter(benchmark::State& state) {
  const SessionConfig config = SessionConfig::test_profile();
  const GroupParams& pk = group_for(0);
  Rng rng = Rng::from_u64(26);
  const auto z = static_cast<std::size_t>(state.range(0));
  MessageMatrix matrix;
  for (std::size_t t = 0; t < z; ++t) matrix.push_back(messages(config, rng));
  const AheKeyPair keys = duqmr_r_setup(config, rng);
  const auto w = duqmr_t_setup(keys.pk, z, z - 1, rng);
  const auto blinds = duq_r_request(pk, rng);
  const auto issued = duq_t_request(config, true, rng);
  const auto q1 = duq_p1_gen_query(blinds.r1, issued.share_p1,
                                   duq_p2_gen_query(blinds.r2, issued.share_p2, pk), pk);
  const auto res = duqmr_gen_res(matrix, pk, q1, issued.sender_tag, config, rng);
  for (auto _ : state) benchmark::DoNotOptimize(duqmr_obl_filter(keys.pk, res, w));
}
BENCHMARK(BM_DuqmrFilter)->Arg(1)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CompiledGenRes(benchmark::State& state) {
  const SessionConfig config = SessionConfig::test_profile();
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = Rng::from_u64(27);
  const NpOneOfN inner(n, config, group_for(0));
  const auto suite = compile(inner, compiled_setup(inner, rng));
  const auto pk = suite.init(rng);
  std::vector<Message> ms;
  for (std::size_t i = 0; i < n; ++i) ms.push_back(Message::pad(rng.bytes(8), config));
  const auto [q, sp] = suite.gen_query(pk, n - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(suite.gen_res(ms, pk, q, rng));
}
BENCHMARK(BM_CompiledGenRes)->Arg(2)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
