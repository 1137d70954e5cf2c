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

// Multiway trees whose leaves may be atoms (urelements). Deep trees are
// expected: copying, comparison, destruction, parsing and rendering all run
// on explicit stacks, never on the call stack.

#ifndef HFRANK_TREE_HPP_
#define HFRANK_TREE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank {

class Tree {
 public:
  // The empty node [].
  Tree() = default;
  static Tree Atom(Nat value);
  static Tree Node(std::vector<Tree> children);

  Tree(const Tree& other);
  Tree& operator=(const Tree& other);
  Tree(Tree&& other) noexcept = default;
  Tree& operator=(Tree&& other) noexcept;
  ~Tree();

  bool is_atom() const { return is_atom_; }
  // Precondition: is_atom().
  const Nat& atom() const { return atom_; }
  // Empty for atoms.
  const std::vector<Tree>& children() const { return children_; }
  std::vector<Tree>& mutable_children() { return children_; }

  // Number of edges on the longest root-to-leaf path.
  std::size_t Depth() const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  bool is_atom_ = false;
  Nat atom_;
  std::vector<Tree> children_;
};

enum class TreeFormat { kBracket, kJson };

// Bracket form: a node is "[c1,c2,...]" and an atom is its value, written
// in `radix` (16 prints with a "0x" prefix). JSON form is the same shape
// with ", " separators and decimal atoms only.
std::string RenderTree(const Tree& t, TreeFormat format = TreeFormat::kBracket,
                       int radix = 10);

// Accepts either rendering, with arbitrary whitespace between tokens; atoms
// are decimal or 0x-prefixed hex. Throws CodecError(kParse).
Tree ParseTree(std::string_view text);

// Bracket list of naturals, "[2,1,2]". Used for flat sequences.
std::string RenderList(const std::vector<Nat>& values, int radix = 10);
// Inverse of RenderList; atoms only, no nesting. Throws kParse.
std::vector<Nat> ParseList(std::string_view text);

// Prints "0x" + hex for radix 16, decimal otherwise.
std::string FormatNat(const Nat& n, int radix);

}  // namespace hfrank

#endif  // HFRANK_TREE_HPP_
