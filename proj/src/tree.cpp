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

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "hfrank/error.hpp"

namespace hfrank {

Tree Tree::Atom(Nat value) {
  Tree t;
  t.is_atom_ = true;
  t.atom_ = std::move(value);
  return t;
}

Tree Tree::Node(std::vector<Tree> children) {
  Tree t;
  t.children_ = std::move(children);
  return t;
}

Tree::Tree(const Tree& other) {
  std::vector<std::pair<const Tree*, Tree*>> work{{&other, this}};
  while (!work.empty()) {
    auto [src, dst] = work.back();
    work.pop_back();
    dst->is_atom_ = src->is_atom_;
    dst->atom_ = src->atom_;
    dst->children_.resize(src->children_.size());
    for (std::size_t i = 0; i < src->children_.size(); ++i) {
      work.emplace_back(&src->children_[i], &dst->children_[i]);
    }
  }
}

Tree& Tree::operator=(const Tree& other) {
  if (this != &other) {
    Tree copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Tree& Tree::operator=(Tree&& other) noexcept {
  if (this != &other) {
    Tree old(std::move(*this));
    is_atom_ = other.is_atom_;
    atom_ = std::move(other.atom_);
    children_ = std::move(other.children_);
    other.children_.clear();
  }
  return *this;
}

// Flattens the subtree onto a heap-allocated worklist so that destroying a
// long chain never recurses more than one level.
Tree::~Tree() {
  if (children_.empty()) return;
  std::vector<Tree> pending;
  pending.swap(children_);
  while (!pending.empty()) {
    Tree t = std::move(pending.back());
    pending.pop_back();
    for (Tree& c : t.children_) pending.push_back(std::move(c));
    t.children_.clear();
  }
}

std::size_t Tree::Depth() const {
  std::size_t best = 0;
  std::vector<std::pair<const Tree*, std::size_t>> work{{this, 0}};
  while (!work.empty()) {
    auto [t, d] = work.back();
    work.pop_back();
    best = std::max(best, d);
    for (const Tree& c : t->children_) work.emplace_back(&c, d + 1);
  }
  return best;
}

bool operator==(const Tree& a, const Tree& b) {
  std::vector<std::pair<const Tree*, const Tree*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->is_atom_ != y->is_atom_) return false;
    if (x->is_atom_) {
      if (x->atom_ != y->atom_) return false;
      continue;
    }
    if (x->children_.size() != y->children_.size()) return false;
    for (std::size_t i = 0; i < x->children_.size(); ++i) {
      work.emplace_back(&x->children_[i], &y->children_[i]);
    }
  }
  return true;
}

std::string FormatNat(const Nat& n, int radix) {
  return radix == 16 ? "0x" + n.ToString(16) : n.ToString(10);
}

std::string RenderTree(const Tree& t, TreeFormat format, int radix) {
  const bool json = format == TreeFormat::kJson;
  const std::string_view sep = json ? ", " : ",";
  const int atom_radix = json ? 10 : radix;

  std::string out;
  // (node, index of the next child to emit)
  std::vector<std::pair<const Tree*, std::size_t>> work{{&t, 0}};
  while (!work.empty()) {
    auto& [node, next] = work.back();
    if (node->is_atom()) {
      out += FormatNat(node->atom(), atom_radix);
      work.pop_back();
      continue;
    }
    if (next == 0) out += '[';
    if (next == node->children().size()) {
      out += ']';
      work.pop_back();
      continue;
    }
    if (next > 0) out += sep;
    const Tree* child = &node->children()[next++];
    work.emplace_back(child, 0);
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ == text_.size();
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Advance() { ++pos_; }

  Nat ReadNat() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a number");
    return Nat::Parse(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw CodecError(ErrorCode::kParse,
                     what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool StartsNumber(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Tree ParseTree(std::string_view text) {
  Scanner in(text);
  std::vector<std::vector<Tree>> open;
  std::optional<Tree> root;

  auto emit = [&](Tree t) {
    if (open.empty()) {
      root = std::move(t);
    } else {
      open.back().push_back(std::move(t));
    }
  };

  // Grammar states: a value is expected (start, after '[' or ','), or a
  // value has just been completed.
  bool after_value = false;
  while (!root) {
    const char c = in.Peek();
    if (!after_value) {
      if (c == '[') {
        in.Advance();
        open.emplace_back();
        if (in.Peek() == ']') {
          in.Advance();
          std::vector<Tree> kids = std::move(open.back());
          open.pop_back();
          emit(Tree::Node(std::move(kids)));
          after_value = true;
        }
      } else if (StartsNumber(c)) {
        emit(Tree::Atom(in.ReadNat()));
        after_value = true;
      } else {
        in.Fail(c == '\0' ? "unexpected end of input" : "expected '[' or a number");
      }
      continue;
    }
    if (c == ',') {
      in.Advance();
      after_value = false;
    } else if (c == ']') {
      in.Advance();
      std::vector<Tree> kids = std::move(open.back());
      open.pop_back();
      emit(Tree::Node(std::move(kids)));
    } else {
      in.Fail(c == '\0' ? "unexpected end of input" : "expected ',' or ']'");
    }
  }
  if (!in.AtEnd()) in.Fail("trailing characters");
  return std::move(*root);
}

std::string RenderList(const std::vector<Nat>& values, int radix) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += FormatNat(values[i], radix);
  }
  out += ']';
  return out;
}

std::vector<Nat> ParseList(std::string_view text) {
  Tree t = ParseTree(text);
  if (t.is_atom()) {
    throw CodecError(ErrorCode::kParse, "expected a bracketed list");
  }
  std::vector<Nat> values;
  for (const Tree& c : t.children()) {
    if (!c.is_atom()) {
      throw CodecError(ErrorCode::kParse, "nested lists are not allowed here");
    }
    values.push_back(c.atom());
  }
  return values;
}

}  // namespace hfrank
