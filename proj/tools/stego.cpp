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

#include "stego.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "hfrank/error.hpp"
#include "hfrank/permcodec.hpp"

namespace hfrank::stego {
namespace {

void SortUnique(std::vector<std::string>& lines) {
  std::sort(lines.begin(), lines.end());
  const auto dup = std::adjacent_find(lines.begin(), lines.end());
  if (dup != lines.end()) {
    throw CodecError(ErrorCode::kDomain,
                     "duplicate line makes the order ambiguous: '" + *dup + "'");
  }
}

}  // namespace

double CapacityBits(std::size_t count) {
  return std::lgamma(static_cast<double>(count) + 1.0) / std::log(2.0);
}

std::vector<std::string> Embed(std::vector<std::string> items,
                               const Nat& secret) {
  SortUnique(items);
  Perm order;
  try {
    order = PermUnrank(items.size(), secret);
  } catch (const CodecError& e) {
    if (e.code() != ErrorCode::kRankOverflow) throw;
    char capacity[64];
    std::snprintf(capacity, sizeof capacity, "%.2f", CapacityBits(items.size()));
    throw CodecError(ErrorCode::kRankOverflow,
                     "secret needs " + std::to_string(secret.BitLength()) +
                         " bits but " + std::to_string(items.size()) +
                         " lines carry log2(" + std::to_string(items.size()) +
                         "!) = " + capacity + " bits");
  }
  std::vector<std::string> out;
  out.reserve(items.size());
  for (std::size_t i : order) out.push_back(items[i]);
  return out;
}

Nat Extract(std::vector<std::string> cover,
            const std::vector<std::string>& permuted) {
  SortUnique(cover);
  if (permuted.size() != cover.size()) {
    throw CodecError(ErrorCode::kDomain,
                     "permuted list has " + std::to_string(permuted.size()) +
                         " lines, cover has " + std::to_string(cover.size()));
  }
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < cover.size(); ++i) index.emplace(cover[i], i);
  Perm order;
  order.reserve(permuted.size());
  for (const std::string& line : permuted) {
    const auto it = index.find(line);
    if (it == index.end()) {
      throw CodecError(ErrorCode::kDomain, "line not in cover: '" + line + "'");
    }
    order.push_back(it->second);
  }
  if (!IsPermutation(order)) {
    throw CodecError(ErrorCode::kDomain, "permuted list repeats a line");
  }
  if (order.empty()) return Nat();
  return PermRank(order).rank;
}

}  // namespace hfrank::stego
