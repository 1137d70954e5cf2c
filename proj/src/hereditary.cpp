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

#include <utility>

#include "hfrank/codecs.hpp"
#include "hfrank/error.hpp"
#include "hfrank/permcodec.hpp"

namespace hfrank {

std::string_view CodecName(Codec c) {
  switch (c) {
    case Codec::kSet: return "set";
    case Codec::kFun: return "fun";
    case Codec::kFtuple: return "ftuple";
    case Codec::kRle: return "rle";
    case Codec::kPerm: return "perm";
  }
  return "?";
}

std::optional<Codec> CodecFromName(std::string_view name) {
  for (Codec c : kAllCodecs) {
    if (CodecName(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<Nat> CodecDecode(Codec c, const Nat& n) {
  switch (c) {
    case Codec::kSet: return NatToSet(n);
    case Codec::kFun: return NatToFun(n);
    case Codec::kFtuple: return NatToFtuple(n);
    case Codec::kRle: return NatToRle(n);
    case Codec::kPerm: {
      const Perm p = NatToPerm(n);
      return std::vector<Nat>(p.begin(), p.end());
    }
  }
  return {};
}

Nat CodecEncode(Codec c, std::span<const Nat> parts) {
  switch (c) {
    case Codec::kSet: return SetToNat(parts);
    case Codec::kFun: return FunToNat(parts);
    case Codec::kFtuple: return FtupleToNat(parts);
    case Codec::kRle: return RleToNat(parts);
    case Codec::kPerm: {
      Perm p;
      p.reserve(parts.size());
      for (const Nat& v : parts) {
        const auto small = v.ToU64();
        if (!small || *small >= parts.size()) {
          throw CodecError(ErrorCode::kInvalidPermutation,
                           "entry " + v.ToString() + " out of range for size " +
                               std::to_string(parts.size()));
        }
        p.push_back(static_cast<std::size_t>(*small));
      }
      return PermToNat(p);
    }
  }
  return Nat();
}

Tree Unrank(const UrLimit& limit, Codec c, const Nat& n) {
  Tree root;
  // Each entry is a slot already placed in its parent's child vector; the
  // vector is sized once, so the pointer stays valid.
  std::vector<std::pair<Tree*, Nat>> work;
  work.emplace_back(&root, n);
  while (!work.empty()) {
    auto [slot, code] = std::move(work.back());
    work.pop_back();
    if (code < limit.value) {
      *slot = Tree::Atom(std::move(code));
      continue;
    }
    const std::vector<Nat> parts = CodecDecode(c, code - limit.value);
    std::vector<Tree>& kids = slot->mutable_children();
    kids.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      work.emplace_back(&kids[i], parts[i]);
    }
  }
  return root;
}

namespace {

void CheckAtom(const UrLimit& limit, const Tree& t) {
  if (!(t.atom() < limit.value)) {
    throw CodecError(ErrorCode::kUrelementRange,
                     "atom " + t.atom().ToString() + " is not below limit " +
                         limit.value.ToString());
  }
}

}  // namespace

Nat Rank(const UrLimit& limit, Codec c, const Tree& t) {
  if (t.is_atom()) {
    CheckAtom(limit, t);
    return t.atom();
  }
  struct Frame {
    const Tree* node;
    std::size_t next = 0;
    std::vector<Nat> ranks;
  };
  std::vector<Frame> work;
  work.push_back({&t, 0, {}});
  while (true) {
    Frame& top = work.back();
    const auto& kids = top.node->children();
    if (top.next < kids.size()) {
      const Tree& child = kids[top.next++];
      if (child.is_atom()) {
        CheckAtom(limit, child);
        top.ranks.push_back(child.atom());
      } else {
        work.push_back({&child, 0, {}});
      }
      continue;
    }
    Nat code = CodecEncode(c, top.ranks) + limit.value;
    work.pop_back();
    if (work.empty()) return code;
    work.back().ranks.push_back(std::move(code));
  }
}

bool IsCanonical(const UrLimit& limit, Codec c, const Tree& t) {
  Nat code;
  try {
    code = Rank(limit, c, t);
  } catch (const CodecError& e) {
    if (e.code() == ErrorCode::kNonCanonicalSet ||
        e.code() == ErrorCode::kInvalidPermutation) {
      return false;
    }
    throw;
  }
  return Unrank(limit, c, code) == t;
}

}  // namespace hfrank
