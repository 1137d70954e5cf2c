// Copyright 2026 The hfrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hfrank/hereditary.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

namespace hfrank {
namespace {

using oracle::A;
using oracle::T;
using testutil::CodeOf;

// Ackermann's formula evaluated recursively on small pure sets.
Nat AckermannOracle(const Tree& t) {
  Nat n;
  for (const Tree& c : t.children()) n += Nat::PowerOfTwo(AckermannOracle(c).ToSize());
  return n;
}

TEST(HereditaryTest, PublishedDecodes) {
  EXPECT_EQ(RenderTree(NatToHff(42)), "[[[]],[[]],[[]]]");
  EXPECT_EQ(RenderTree(NatToHff1(42)), "[[[[],[],[]],[]]]");
  EXPECT_EQ(RenderTree(NatToHff2(42)), "[[],[],[],[],[],[]]");
  EXPECT_EQ(RenderTree(NatToHfp(42)),
            "[[],[[],[[]]],[[[]],[]],[[]],[[],[[]],[[],[[]]]]]");
  EXPECT_EQ(RenderTree(NatToHff(1234567890, UrLimit{10})),
            "[3,2,0,1,7,0,1,2,0,2,2]");

  EXPECT_EQ(HffToNat(ParseTree("[[[]],[[]],[[]]]")), Nat(42));
  EXPECT_EQ(Hff1ToNat(ParseTree("[[[[],[],[]],[]]]")), Nat(42));
  EXPECT_EQ(Hff2ToNat(ParseTree("[[],[],[],[],[],[]]")), Nat(42));
  EXPECT_EQ(HfpToNat(ParseTree("[[],[[],[[]]],[[[]],[]],[[]],[[],[[]],[[],[[]]]]]")),
            Nat(42));
  EXPECT_EQ(HffToNat(ParseTree("[3,2,0,1,7,0,1,2,0,2,2]"), UrLimit{10}),
            Nat(1234567890));
}

TEST(HereditaryTest, SmallCases) {
  EXPECT_EQ(NatToHfp(0), Tree());
  EXPECT_EQ(NatToHfs(2, UrLimit{4}), A(2));
  EXPECT_EQ(HfsToNat(T({})), Nat(0));
  EXPECT_EQ(HfsToNat(T({T({}), T({T({})})})), Nat(3));
  for (Codec c : kAllCodecs) EXPECT_EQ(Unrank({}, c, 0), Tree()) << CodecName(c);
}

TEST(HereditaryTest, SetRankFollowsAckermann) {
  for (oracle::U64 n = 0; n < 2000; ++n) {
    const Tree t = NatToHfs(n);
    ASSERT_EQ(AckermannOracle(t), Nat(n));
  }
}

TEST(HereditaryTest, RankErrors) {
  EXPECT_EQ(CodeOf([] { Rank(UrLimit{4}, Codec::kSet, A(4)); }),
            ErrorCode::kUrelementRange);
  EXPECT_EQ(CodeOf([] { Rank(UrLimit{}, Codec::kFun, T({A(0)})); }),
            ErrorCode::kUrelementRange);
  // Children rank to 1 then 0: not increasing.
  EXPECT_EQ(CodeOf([] { HfsToNat(T({T({T({})}), T({})})); }),
            ErrorCode::kNonCanonicalSet);
  EXPECT_EQ(CodeOf([] { HfsToNat(T({T({}), T({})})); }),
            ErrorCode::kNonCanonicalSet);
  // [[[]]] has one child ranked 1, not a permutation of {0}.
  EXPECT_EQ(CodeOf([] { HfpToNat(T({T({T({})})})); }),
            ErrorCode::kInvalidPermutation);
}

TEST(HereditaryTest, Canonicity) {
  EXPECT_FALSE(IsCanonical({}, Codec::kFtuple, T({T({})})));
  EXPECT_TRUE(IsCanonical({}, Codec::kFun, T({T({T({})}), T({T({})}), T({T({})})})));
  EXPECT_TRUE(IsCanonical(UrLimit{4}, Codec::kSet, A(3)));
  EXPECT_FALSE(IsCanonical({}, Codec::kSet, T({T({T({})}), T({})})));
  EXPECT_FALSE(IsCanonical({}, Codec::kPerm, T({T({T({})})})));
  EXPECT_EQ(CodeOf([] { IsCanonical(UrLimit{4}, Codec::kSet, A(5)); }),
            ErrorCode::kUrelementRange);
  for (Codec c : kAllCodecs) {
    for (oracle::U64 n = 0; n < 300; ++n) {
      ASSERT_TRUE(IsCanonical({}, c, Unrank({}, c, n)));
    }
  }
}

TEST(HereditaryTest, PartsShrink) {
  for (Codec c : kAllCodecs) {
    for (oracle::U64 n = 1; n <= 5000; ++n) {
      for (const Nat& part : CodecDecode(c, n)) {
        ASSERT_LT(part, Nat(n)) << CodecName(c) << " " << n;
      }
    }
  }
}

TEST(HereditaryTest, AtomsExactlyBelowLimit) {
  for (oracle::U64 limit : {1u, 4u, 10u}) {
    for (Codec c : kAllCodecs) {
      for (oracle::U64 n = 0; n < 40; ++n) {
        const Tree t = Unrank(UrLimit{limit}, c, n);
        ASSERT_EQ(t.is_atom(), n < limit);
      }
    }
  }
}

TEST(HereditaryTest, RoundTripsEveryCodecAndLimit) {
  std::mt19937_64 rng(15);
  for (oracle::U64 limit : {0u, 4u, 10u}) {
    const UrLimit ul{limit};
    for (Codec c : kAllCodecs) {
      for (oracle::U64 n = 0; n <= 2000; ++n) {
        ASSERT_EQ(Rank(ul, c, Unrank(ul, c, n)), Nat(n))
            << CodecName(c) << " limit " << limit << " n " << n;
      }
      for (int i = 0; i < 30; ++i) {
        const Nat n = oracle::Random128(rng);
        ASSERT_EQ(Rank(ul, c, Unrank(ul, c, n)), n);
      }
    }
  }
}

// With limit 1 the ftuple codec maps a one-child chain of depth d to a code
// near 2^d, so a 20000-bit code unranks into a chain 20000 deep.
TEST(HereditaryTest, DeepChainsRoundTrip) {
  constexpr std::size_t kDepth = 20000;
  std::string text(kDepth, '[');
  text.append(kDepth, ']');
  const Tree chain = ParseTree(text);
  const UrLimit ul{1};
  const Nat code = Rank(ul, Codec::kFtuple, chain);
  EXPECT_GE(code.BitLength(), kDepth - 1);
  const Tree back = Unrank(ul, Codec::kFtuple, code);
  EXPECT_EQ(back.Depth(), kDepth - 1);
  EXPECT_EQ(back, chain);
}

TEST(CodecNameTest, RoundTrips) {
  for (Codec c : kAllCodecs) EXPECT_EQ(CodecFromName(CodecName(c)), c);
  EXPECT_FALSE(CodecFromName("bogus").has_value());
}

}  // namespace
}  // namespace hfrank
