#include <gtest/gtest.h>

#include <type_traits>

#include "oblivis/counters.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/errors.hpp"
#include "test_util.hpp"

namespace {

using namespace oblivis;
using testutil::for_all;
using testutil::padded;
using testutil::to_z;

const SessionConfig& cfg() { return testutil::test_config(); }

struct Flow {
  DuqBlinds blinds;
  IssuerRequest issued;
  FinalQuery q1;
};

Flow make_flow(const GroupParams& pk, bool s, Rng& rng) {
  Flow f{duq_r_request(pk, rng), duq_t_request(cfg(), s, rng), {}};
  f.q1 = duq_p1_gen_query(f.blinds.r1, f.issued.share_p1,
                          duq_p2_gen_query(f.blinds.r2, f.issued.share_p2, pk), pk);
  return f;
}

Flow make_flow_with(const GroupParams& pk, bool s, bool s1, Rng& rng) {
  Flow f{duq_r_request(pk, rng), duq_t_request_with(s, s1, rng.bytes(cfg().tag_bytes())), {}};
  f.q1 = duq_p1_gen_query(f.blinds.r1, f.issued.share_p1,
                          duq_p2_gen_query(f.blinds.r2, f.issued.share_p2, pk), pk);
  return f;
}

static_assert(std::is_same_v<decltype(duq_retrieve(std::declval<const TaggedResponsePair&>(),
                                                   std::declval<const DuqBlinds&>(),
                                                   std::declval<const ReceiverTag&>(),
                                                   std::declval<const GroupParams&>(),
                                                   std::declval<const SessionConfig&>())),
                             Bytes>,
              "retrieval returns message bytes only");

TEST(DelegatedUnknownQuery, ReceiverRequestIsCheap) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(70);
  CounterScope scope;
  const auto b = duq_r_request(pk, rng);
  EXPECT_EQ(scope.delta().public_key_operations(), 0u);
  EXPECT_NE(b.r1, b.r2);
  Rng again = Rng::from_u64(70);
  const auto c = duq_r_request(pk, again);
  EXPECT_EQ(b.r1, c.r1);
  EXPECT_EQ(b.r2, c.r2);
}

TEST(DelegatedUnknownQuery, IssuerRequestShape) {
  for_all(200, 71, [](Rng& rng) {
    const bool s = rng.bit();
    const auto t = duq_t_request(cfg(), s, rng);
    ASSERT_EQ(t.share_p1 != t.share_p2, s);
    ASSERT_EQ(t.sender_tag.size() * 8, cfg().lambda_bits);
    ASSERT_EQ(t.receiver_tag.r3, t.sender_tag);
    ASSERT_EQ(t.receiver_tag.s2, t.share_p2);
  });
}

TEST(DelegatedUnknownQuery, ReceiverViewLeavesChoiceOpen) {
  // R's share has the same distribution for both values of s.
  Rng rng = Rng::from_u64(72);
  int ones[2] = {0, 0};
  for (int i = 0; i < 4000; ++i) {
    const bool s = i % 2 == 1;
    const auto t = duq_t_request(cfg(), s, rng);
    ones[s ? 1 : 0] += t.receiver_tag.s2 ? 1 : 0;
  }
  for (int k : {0, 1}) {
    EXPECT_GE(ones[k], 900);
    EXPECT_LE(ones[k], 1100);
  }
}

TEST(DelegatedUnknownQuery, ProxyAlgebraMatchesDelegatedQuery) {
  const GroupParams& pk = testutil::test_group();
  for_all(20, 73, [&](Rng& rng) {
    const BigInt r1 = random_exponent(pk, rng), r2 = random_exponent(pk, rng);
    const bool s1 = rng.bit(), s2 = rng.bit();
    const auto a2 = duq_p2_gen_query(r2, s2, pk);
    ASSERT_EQ(a2, dq_p2_gen_query(DelegationRequest{s2, r2}, pk));
    ASSERT_EQ(duq_p1_gen_query(r1, s1, a2, pk), dq_p1_gen_query(DelegationRequest{s1, r1}, a2, pk));
  });
}

TEST(DelegatedUnknownQuery, MaskedLengthIncludesTag) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(74);
  const Flow f = make_flow(pk, true, rng);
  const auto res = duq_gen_res(padded(Bytes{1}), padded(Bytes{2}), pk, f.q1, f.issued.sender_tag, cfg(), rng);
  for (const auto& e : res.e) EXPECT_EQ(e.masked.size() * 8, cfg().sigma_bits + cfg().lambda_bits);
}

TEST(DelegatedUnknownQuery, TamperedQueryAborts) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(75);
  Flow f = make_flow(pk, false, rng);
  f.q1.beta0 = group_mul(pk, f.q1.beta0, pk.g);
  EXPECT_THROW(duq_gen_res(padded(Bytes{}), padded(Bytes{}), pk, f.q1, f.issued.sender_tag, cfg(), rng),
               AbortError);
}

TEST(DelegatedUnknownQuery, ResponseMatchesOracle) {
  const GroupParams& pk = testutil::test_group();
  const oracle::Group G = testutil::oracle_group(pk);
  for_all(10, 76, [&](Rng& rng) {
    const bool s = rng.bit();
    const bool swap = rng.bit();
    const Flow f = make_flow(pk, s, rng);
    const auto [a, b] = testutil::gen_pair(rng);
    const BigInt y0 = random_nonzero_exponent(pk, rng), y1 = random_nonzero_exponent(pk, rng);
    const auto res = duq_respond(padded(a), padded(b), pk, f.q1, f.issued.sender_tag, cfg(), y0, y1, swap);
    Bytes t0 = oracle::pad(a, cfg().sigma_bits);
    Bytes t1 = oracle::pad(b, cfg().sigma_bits);
    t0.insert(t0.end(), f.issued.sender_tag.begin(), f.issued.sender_tag.end());
    t1.insert(t1.end(), f.issued.sender_tag.begin(), f.issued.sender_tag.end());
    auto e0 = oracle::mask_slot(G, to_z(f.q1.beta0), to_z(y0), t0, 0x47);
    auto e1 = oracle::mask_slot(G, to_z(f.q1.beta1), to_z(y1), t1, 0x47);
    if (swap) std::swap(e0, e1);
    ASSERT_EQ(to_z(res.e[0].head), e0.head);
    ASSERT_EQ(res.e[0].masked, e0.masked);
    ASSERT_EQ(to_z(res.e[1].head), e1.head);
    ASSERT_EQ(res.e[1].masked, e1.masked);
  });
}

TEST(DelegatedUnknownQuery, AllSharePermutationPaths) {
  const GroupParams& pk = testutil::test_group();
  for (int path = 0; path < 8; ++path) {
    const bool s = path & 1, s1 = path & 2, swap = path & 4;
    for_all(25, 80 + path, [&](Rng& rng) {
      const Flow f = make_flow_with(pk, s, s1, rng);
      const auto [a, b] = testutil::gen_pair(rng);
      const auto res = duq_respond(padded(a), padded(b), pk, f.q1, f.issued.sender_tag, cfg(),
                                   random_nonzero_exponent(pk, rng), random_nonzero_exponent(pk, rng), swap);
      ASSERT_EQ(duq_retrieve(res, f.blinds, f.issued.receiver_tag, pk, cfg()), s ? b : a);
    });
  }
}

TEST(DelegatedUnknownQuery, SwapBitIsBalanced) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(90);
  const bool s = true;
  const Flow f = make_flow(pk, s, rng);
  const BigInt x = retrieval_exponent(pk, f.blinds.r1, f.blinds.r2, f.issued.receiver_tag.s2);
  int swaps = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto res = duq_gen_res(padded(Bytes{0}), padded(Bytes{1}), pk, f.q1, f.issued.sender_tag, cfg(), rng);
    const auto slots = duq_trial_decrypt(res, x, pk, cfg());
    const int hit = slots[0].tail == f.issued.sender_tag ? 0 : 1;
    swaps += hit != static_cast<int>(s) ? 1 : 0;
  }
  EXPECT_GE(swaps, 450);
  EXPECT_LE(swaps, 550);
}

TEST(DelegatedUnknownQuery, ForeignTagIsRetrievalError) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(91);
  const Flow f = make_flow(pk, false, rng);
  const auto res = duq_gen_res(padded(Bytes{}), padded(Bytes{}), pk, f.q1, rng.bytes(cfg().tag_bytes()), cfg(), rng);
  EXPECT_THROW(duq_retrieve(res, f.blinds, f.issued.receiver_tag, pk, cfg()), RetrievalError);
}

TEST(DelegatedUnknownQuery, DoubleMatchIsAmbiguityError) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(92);
  const Flow f = make_flow(pk, false, rng);
  auto res = duq_respond(padded(Bytes{5}), padded(Bytes{6}), pk, f.q1, f.issued.sender_tag, cfg(), BigInt(3),
                         BigInt(4), false);
  res.e[1] = res.e[0];
  EXPECT_THROW(duq_retrieve(res, f.blinds, f.issued.receiver_tag, pk, cfg()), AmbiguityError);
}

TEST(DelegatedUnknownQuery, TagUniqueAcrossManyHonestRuns) {
  const GroupParams& pk = testutil::test_group();
  const Rng master = Rng::from_u64(93);
  std::size_t wrong_slot_matches = 0;
  std::size_t failures = 0;
  for (std::uint64_t batch = 0; batch < 100; ++batch) {
    Rng rng = master.derive("batch", batch);
    const bool s = rng.bit();
    const Flow f = make_flow(pk, s, rng);
    const BigInt x = retrieval_exponent(pk, f.blinds.r1, f.blinds.r2, f.issued.receiver_tag.s2);
    for (int i = 0; i < 1000; ++i) {
      const Bytes r3 = rng.bytes(cfg().tag_bytes());
      const bool swap = rng.bit();
      const auto res = duq_respond(padded(Bytes{1}), padded(Bytes{2}), pk, f.q1, r3, cfg(),
                                   random_nonzero_exponent(pk, rng), random_nonzero_exponent(pk, rng), swap);
      const auto slots = duq_trial_decrypt(res, x, pk, cfg());
      const int right = swap != s ? 1 : 0;
      failures += slots[right].tail == r3 ? 0 : 1;
      wrong_slot_matches += slots[1 - right].tail == r3 ? 1 : 0;
    }
  }
  EXPECT_EQ(failures, 0u);
  EXPECT_EQ(wrong_slot_matches, 0u);
}

}  // namespace
