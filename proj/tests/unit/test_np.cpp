#include <gtest/gtest.h>

#include "oblivis/errors.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/one_of_n.hpp"
#include "test_util.hpp"

namespace {

using namespace oblivis;
using testutil::for_all;
using testutil::padded;
using testutil::to_z;

TEST(NaorPinkas, QueryShape) {
  const GroupParams& pk = testutil::test_group();
  const BigInt r = BigInt(123456789);
  const auto q0 = np_gen_query_with(pk, false, r);
  EXPECT_EQ(q0.query.beta0, group_pow_g(pk, r));
  const auto q1 = np_gen_query_with(pk, true, r);
  const oracle::Z p = to_z(pk.p);
  EXPECT_EQ(to_z(q1.query.beta0),
            oracle::mulm(to_z(pk.C), oracle::invm(oracle::powm(to_z(pk.g), to_z(r), p), p), p));
  for (const auto& q : {q0, q1}) {
    EXPECT_EQ(group_mul(pk, q.query.beta0, np_complete_query(pk, q.query.beta0)), pk.C);
  }
}

TEST(NaorPinkas, RoundTripBothChoices) {
  const GroupParams& pk = testutil::test_group();
  for (bool s : {false, true}) {
    for_all(100, s ? 41 : 40, [&](Rng& rng) {
      const auto [a, b] = testutil::gen_pair(rng);
      const auto q = np_gen_query(pk, s, rng);
      const auto res = np_gen_res(padded(a), padded(b), pk, q.query, rng);
      ASSERT_EQ(np_retrieve(res, q.secret, pk), s ? b : a);
    });
  }
}

TEST(NaorPinkas, TranscriptMatchesOracleOnTinyGroup) {
  const GroupParams& pk = testutil::tiny_group();
  const oracle::Group G = testutil::oracle_group(pk);
  const Bytes m0 = to_bytes("first"), m1 = to_bytes("second");
  for (bool s : {false, true}) {
    for (unsigned long r : {5ul, 77ul, 592ul}) {
      const unsigned long y0 = 11, y1 = 301;
      const auto q = np_gen_query_with(pk, s, BigInt(r));
      const BigInt beta1 = np_complete_query(pk, q.query.beta0);
      const auto res = respond_pair(pk, q.query.beta0, beta1, padded(m0), padded(m1), BigInt(y0), BigInt(y1));

      const oracle::Z gr = oracle::g_pow(G, oracle::Z(r));
      const oracle::Z b0 = s ? oracle::mulm(G.C, oracle::invm(gr, G.p), G.p) : gr;
      const oracle::Z b1 = oracle::mulm(G.C, oracle::invm(b0, G.p), G.p);
      const auto e0 = oracle::mask_slot(G, b0, oracle::Z(y0), oracle::pad(m0, 256), 0x48);
      const auto e1 = oracle::mask_slot(G, b1, oracle::Z(y1), oracle::pad(m1, 256), 0x48);
      ASSERT_EQ(to_z(q.query.beta0), b0);
      ASSERT_EQ(to_z(res.e[0].head), e0.head);
      ASSERT_EQ(res.e[0].masked, e0.masked);
      ASSERT_EQ(to_z(res.e[1].head), e1.head);
      ASSERT_EQ(res.e[1].masked, e1.masked);
      ASSERT_EQ(np_retrieve(res, q.secret, pk), s ? m1 : m0);
    }
  }
}

TEST(NaorPinkas, TruncatedResponseIsDecodeError) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(42);
  const auto q = np_gen_query(pk, false, rng);
  auto res = np_gen_res(padded(Bytes{1}), padded(Bytes{2}), pk, q.query, rng);
  res.e[0].masked.resize(res.e[0].masked.size() - 5);
  EXPECT_THROW(np_retrieve(res, q.secret, pk), DecodeError);
}

TEST(NaorPinkas, SenderRejectsNonMemberQuery) {
  const GroupParams& pk = testutil::test_group();
  Rng rng = Rng::from_u64(43);
  BigInt bad = 2;
  while (in_subgroup(pk, bad)) bad += 1;
  EXPECT_THROW(np_gen_res(padded(Bytes{}), padded(Bytes{}), pk, NpQuery{bad}, rng), MembershipError);
}

TEST(NaorPinkas, UnchosenSlotDoesNotDecode) {
  const GroupParams& pk = testutil::test_group();
  std::size_t failures = 0;
  for_all(1000, 44, [&](Rng& rng) {
    const bool s = rng.bit();
    const auto [a, b] = testutil::gen_pair(rng);
    const auto q = np_gen_query(pk, s, rng);
    const auto res = np_gen_res(padded(a), padded(b), pk, q.query, rng);
    try {
      np_retrieve(res, NpSecret{q.secret.r, !s}, pk);
    } catch (const DecodeError&) {
      ++failures;
    }
  });
  EXPECT_EQ(failures, 1000u);
}

TEST(OneOfN, RangeOfN) {
  EXPECT_THROW(NpOneOfN(1, testutil::test_config(), testutil::test_group()), PreconditionError);
  EXPECT_THROW(NpOneOfN(1025, testutil::test_config(), testutil::test_group()), PreconditionError);
  EXPECT_NO_THROW(NpOneOfN(1024, testutil::test_config(), testutil::test_group()));
}

TEST(OneOfN, TwoLanesBehaveLikeOneOfTwo) {
  const NpOneOfN suite(2, testutil::test_config(), testutil::test_group());
  for_all(20, 45, [&](Rng& rng) {
    const auto pk = suite.init(rng);
    const auto [a, b] = testutil::gen_pair(rng);
    const std::vector<Message> ms{padded(a), padded(b)};
    const std::size_t s = testutil::gen_index(rng, 2);
    auto [q, sp] = suite.gen_query(pk, s, rng);
    const auto res = suite.gen_res(ms, pk, q, rng);
    ASSERT_EQ(res.elements.size(), 2u);
    ASSERT_EQ(suite.retrieve(res, q, sp, pk, s), s ? b : a);
  });
}

TEST(OneOfN, EightLanesEveryChoice) {
  const NpOneOfN suite(8, testutil::test_config(), testutil::test_group());
  Rng rng = Rng::from_u64(46);
  const auto pk = suite.init(rng);
  std::vector<Bytes> raw;
  std::vector<Message> ms;
  for (int i = 0; i < 8; ++i) {
    raw.push_back(to_bytes("message " + std::to_string(i)));
    ms.push_back(padded(raw.back()));
  }
  for (std::size_t s = 0; s < 8; ++s) {
    auto [q, sp] = suite.gen_query(pk, s, rng);
    const auto res = suite.gen_res(ms, pk, q, rng);
    EXPECT_EQ(res.elements.size(), 8u);
    EXPECT_EQ(suite.retrieve(res, q, sp, pk, s), raw[s]);
  }
  EXPECT_THROW(suite.gen_query(pk, 8, rng), RangeError);
}

TEST(OneOfN, RandomSizesProperty) {
  for_all(30, 47, [](Rng& rng) {
    const std::size_t n = 2 + testutil::gen_index(rng, 63);
    const NpOneOfN suite(n, testutil::test_config(), testutil::test_group());
    const auto pk = suite.init(rng);
    std::vector<Bytes> raw;
    std::vector<Message> ms;
    for (std::size_t i = 0; i < n; ++i) {
      raw.push_back(testutil::gen_payload(rng));
      ms.push_back(padded(raw.back()));
    }
    const std::size_t s = testutil::gen_index(rng, n);
    auto [q, sp] = suite.gen_query(pk, s, rng);
    ASSERT_EQ(suite.retrieve(suite.gen_res(ms, pk, q, rng), q, sp, pk, s), raw[s]);
  });
}

}  // namespace
