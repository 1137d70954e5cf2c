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

#ifndef HFRANK_TOOLS_SELFTEST_HPP_
#define HFRANK_TOOLS_SELFTEST_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank::selftest {

struct FlatCodec {
  std::string name;
  std::function<std::vector<Nat>(const Nat&)> decode;
  std::function<Nat(std::span<const Nat>)> encode;
};

// set, fun, ftuple, rle and perm, wired to the library.
std::vector<FlatCodec> LibraryCodecs();

// The round-trip and block-partition suites run against these entries, so a
// caller can substitute a deliberately broken piece and watch it get caught.
struct Config {
  std::vector<FlatCodec> codecs = LibraryCodecs();
  std::function<Nat(std::size_t)> factorial_sum;  // library's when empty
  std::size_t exhaustive_limit = 5000;
  std::size_t random_samples = 200;
  std::size_t hereditary_limit = 2000;
};

struct Report {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // in the order encountered

  bool ok() const { return failed == 0; }
};

Report Run(const Config& config = {});

}  // namespace hfrank::selftest

#endif  // HFRANK_TOOLS_SELFTEST_HPP_
