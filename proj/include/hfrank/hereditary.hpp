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

// Generic ranking and unranking of trees with urelements.
//
// Codes below the urelement limit L are atoms. A code n >= L is a node whose
// children are the recursive unrankings of the parts obtained by running a
// flat codec's decode on n - L. Every flat codec here yields parts strictly
// smaller than n, which is what makes the recursion terminate and the map a
// bijection onto the trees it produces.
//
//   codec   flat decode     classic name
//   set     NatToSet        hereditarily finite sets (Ackermann)
//   fun     NatToFun        hereditarily finite functions
//   ftuple  NatToFtuple     hereditarily finite functions, tuple variant
//   rle     NatToRle        hereditarily finite functions, run-length variant
//   perm    NatToPerm       hereditarily finite permutations

#ifndef HFRANK_HEREDITARY_HPP_
#define HFRANK_HEREDITARY_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hfrank/nat.hpp"
#include "hfrank/tree.hpp"

namespace hfrank {

enum class Codec { kSet, kFun, kFtuple, kRle, kPerm };

inline constexpr Codec kAllCodecs[] = {Codec::kSet, Codec::kFun,
                                       Codec::kFtuple, Codec::kRle,
                                       Codec::kPerm};

std::string_view CodecName(Codec c);
std::optional<Codec> CodecFromName(std::string_view name);

// Atoms are 0..value-1; 0 means pure structures with no atoms.
struct UrLimit {
  Nat value;
};

// The flat codec pair selected by `c`.
std::vector<Nat> CodecDecode(Codec c, const Nat& n);
// Throws whatever the flat encoder rejects (kNonCanonicalSet for set,
// kInvalidPermutation for perm).
Nat CodecEncode(Codec c, std::span<const Nat> parts);

Tree Unrank(const UrLimit& limit, Codec c, const Nat& n);
// Throws kUrelementRange for an atom >= limit, plus any flat-encoder error.
Nat Rank(const UrLimit& limit, Codec c, const Tree& t);

// True iff Unrank(Rank(t)) == t. Trees rejected by the flat encoder are
// reported as non-canonical; an out-of-range atom still throws.
bool IsCanonical(const UrLimit& limit, Codec c, const Tree& t);

// Named instances with the default limit of 0.
inline Tree NatToHfs(const Nat& n, const UrLimit& l = {}) { return Unrank(l, Codec::kSet, n); }
inline Nat HfsToNat(const Tree& t, const UrLimit& l = {}) { return Rank(l, Codec::kSet, t); }
inline Tree NatToHff(const Nat& n, const UrLimit& l = {}) { return Unrank(l, Codec::kFun, n); }
inline Nat HffToNat(const Tree& t, const UrLimit& l = {}) { return Rank(l, Codec::kFun, t); }
inline Tree NatToHff1(const Nat& n, const UrLimit& l = {}) { return Unrank(l, Codec::kFtuple, n); }
inline Nat Hff1ToNat(const Tree& t, const UrLimit& l = {}) { return Rank(l, Codec::kFtuple, t); }
inline Tree NatToHff2(const Nat& n, const UrLimit& l = {}) { return Unrank(l, Codec::kRle, n); }
inline Nat Hff2ToNat(const Tree& t, const UrLimit& l = {}) { return Rank(l, Codec::kRle, t); }
inline Tree NatToHfp(const Nat& n, const UrLimit& l = {}) { return Unrank(l, Codec::kPerm, n); }
inline Nat HfpToNat(const Tree& t, const UrLimit& l = {}) { return Rank(l, Codec::kPerm, t); }

}  // namespace hfrank

#endif  // HFRANK_HEREDITARY_HPP_
