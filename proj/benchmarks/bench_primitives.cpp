#include <benchmark/benchmark.h>

#include "oblivis/ahe.hpp"
#include "oblivis/group.hpp"
#include "oblivis/hash.hpp"
#include "oblivis/rng.hpp"

namespace {

using namespace oblivis;

const GroupParams& group_for(std::size_t bits) {
  static const GroupParams g512 = gen_group(512, seed_bytes(1));
  static const GroupParams g2048 = standard_group_2048();
  return bits == 512 ? g512 : g2048;
}

void BM_GroupExp(benchmark::State& state) {
  const GroupParams& pk = group_for(static_cast<std::size_t>(state.range(0)));
  Rng rng = Rng::from_u64(2);
  const BigInt e = random_exponent(pk, rng);
  for (auto _ : state) benchmark::DoNotOptimize(group_exp(pk, pk.C, e));
}
BENCHMARK(BM_GroupExp)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

void BM_HashH(benchmark::State& state) {
  const Bytes in(256, 0x5a);
  const auto sigma = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hash_H(in, sigma));
}
BENCHMARK(BM_HashH)->Arg(256)->Arg(1024);

void BM_HashG(benchmark::State& state) {
  const Bytes in(256, 0x5a);
  for (auto _ : state) benchmark::DoNotOptimize(hash_G(in, 256, 128));
}
BENCHMARK(BM_HashG);

void BM_AheEnc(benchmark::State& state) {
  Rng rng = Rng::from_u64(3);
  const AheKeyPair keys = ahe_kgen(static_cast<std::size_t>(state.range(0)), rng);
  const BigInt m = rng.uniform_bits(64);
  for (auto _ : state) benchmark::DoNotOptimize(ahe_enc(keys.pk, m, rng));
}
BENCHMARK(BM_AheEnc)->Arg(520)->Arg(2056)->Unit(benchmark::kMicrosecond);

void BM_AheDec(benchmark::State& state) {
  Rng rng = Rng::from_u64(4);
  const AheKeyPair keys = ahe_kgen(static_cast<std::size_t>(state.range(0)), rng);
  const AheCiphertext c = ahe_enc(keys.pk, rng.uniform_bits(64), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ahe_dec(keys, c));
}
BENCHMARK(BM_AheDec)->Arg(520)->Arg(2056)->Unit(benchmark::kMicrosecond);

void BM_AheHomScale(benchmark::State& state) {
  Rng rng = Rng::from_u64(5);
  const AheKeyPair keys = ahe_kgen(static_cast<std::size_t>(state.range(0)), rng);
  const AheCiphertext c = ahe_enc(keys.pk, BigInt(1), rng);
  const BigInt k = rng.uniform_bits(static_cast<std::size_t>(state.range(0)) - 8);
  for (auto _ : state) benchmark::DoNotOptimize(ahe_hom_scale(keys.pk, c, k));
}
BENCHMARK(BM_AheHomScale)->Arg(520)->Arg(2056)->Unit(benchmark::kMicrosecond);

}  // namespace
