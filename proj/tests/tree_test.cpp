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

#include "hfrank/tree.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace hfrank {
namespace {

using oracle::A;
using oracle::T;
using testutil::CodeOf;

TEST(TreeTest, AtomsAndEmptyNodesDiffer) {
  EXPECT_NE(A(0), Tree());
  EXPECT_EQ(T({}), Tree());
  EXPECT_NE(T({A(1)}), T({T({})}));
  EXPECT_EQ(T({A(1), T({})}), T({A(1), T({})}));
}

TEST(TreeTest, RendersBracketAndJson) {
  const Tree t = T({T({T({})}), T({T({})}), T({T({})})});
  EXPECT_EQ(RenderTree(t), "[[[]],[[]],[[]]]");
  EXPECT_EQ(RenderTree(t, TreeFormat::kJson), "[[[]], [[]], [[]]]");
  const Tree atoms = T({A(3), A(2), A(42)});
  EXPECT_EQ(RenderTree(atoms), "[3,2,42]");
  EXPECT_EQ(RenderTree(atoms, TreeFormat::kBracket, 16), "[0x3,0x2,0x2a]");
  EXPECT_EQ(RenderTree(atoms, TreeFormat::kJson, 16), "[3, 2, 42]");
  EXPECT_EQ(RenderTree(A(7)), "7");
}

TEST(TreeTest, ParsesWhatItPrints) {
  for (const char* text :
       {"[]", "[[],[[]]]", "[3,2,0,1,7,0,1,2,0,2,2]", "5", "[[[[],[],[]],[]]]"}) {
    const Tree t = ParseTree(text);
    EXPECT_EQ(RenderTree(t), text);
    EXPECT_EQ(ParseTree(RenderTree(t, TreeFormat::kJson)), t);
    EXPECT_EQ(ParseTree(RenderTree(t, TreeFormat::kBracket, 16)), t);
  }
  EXPECT_EQ(ParseTree(" [ [ ] ,\n[ 0x10 ] ] "), T({T({}), T({A(16)})}));
}

TEST(TreeTest, RejectsMalformedText) {
  for (const char* bad : {"", "[", "]", "[,]", "[1,]", "[1 2]", "[]]", "[][]",
                          "x", "[-1]", "[1,,2]", "[0x]"}) {
    EXPECT_EQ(CodeOf([&] { ParseTree(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(TreeTest, DeepChainsUseNoRecursion) {
  constexpr std::size_t kDepth = 1'000'000;
  std::string text(kDepth, '[');
  text.append(kDepth, ']');
  Tree t = ParseTree(text);
  EXPECT_EQ(t.Depth(), kDepth - 1);
  EXPECT_EQ(RenderTree(t), text);
  Tree copy = t;
  EXPECT_EQ(copy, t);
  copy = Tree();
  EXPECT_NE(copy, t);
}

TEST(ListTest, RenderAndParse) {
  EXPECT_EQ(RenderList(oracle::Nats({2, 1, 2})), "[2,1,2]");
  EXPECT_EQ(RenderList({}), "[]");
  EXPECT_EQ(ParseList("[1, 0x2, 3]"), oracle::Nats({1, 2, 3}));
  EXPECT_EQ(CodeOf([] { ParseList("[[1]]"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseList("4"); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace hfrank
