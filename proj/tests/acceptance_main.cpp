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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails. Every check is an exact integer comparison.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hfrank/codecs.hpp"
#include "hfrank/error.hpp"
#include "hfrank/factoradic.hpp"
#include "hfrank/hereditary.hpp"
#include "hfrank/pairing.hpp"
#include "hfrank/permcodec.hpp"
#include "hfrank/tree.hpp"
#include "oracles.hpp"

namespace hfrank {
namespace {

using oracle::U64;

// Collects checks for one criterion; keeps the first mismatch.
class Criterion {
 public:
  void Expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = describe();
    failed_ |= !ok;
  }
  void Equal(const std::string& what, const std::string& got, const std::string& want) {
    Expect(got == want, [&] { return what + ": got " + got + ", want " + want; });
  }

  std::size_t checks() const { return checks_; }
  bool failed() const { return failed_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  std::size_t checks_ = 0;
  bool failed_ = false;
  std::string first_failure_;
};

template <typename Seq>
std::string Show(const Seq& values) {
  return RenderList(std::vector<Nat>(values.begin(), values.end()));
}

std::vector<Nat> ToNats(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

void GoldenValues(Criterion& c) {
  c.Equal("pepis_pair(1,10)", PepisPair(1, 10).ToString(), "41");
  c.Equal("pepis_pair(10,1)", PepisPair(10, 1).ToString(), "3071");
  std::vector<Nat> table;
  for (U64 x = 0; x < 4; ++x)
    for (U64 y = 0; y < 4; ++y) table.push_back(PepisPair(x, y));
  c.Equal("pairing table", Show(table), "[0,2,4,6,1,5,9,13,3,11,19,27,7,23,39,55]");
  c.Equal("tuple_decode(3,42)", Show(TupleDecode(3, 42)), "[2,1,2]");
  c.Equal("tuple_encode", TupleEncode(oracle::Nats({2, 1, 2})).ToString(), "42");
  c.Equal("ftuple_to_nat", FtupleToNat(oracle::Nats({1, 0, 2, 1, 3})).ToString(), "21295");
  c.Equal("nat_to_ftuple", Show(NatToFtuple(21295)), "[1,0,2,1,3]");
  const char* ftuples[] = {"[0,0]",   "[1]",     "[0,0,0]", "[2]",      "[1,0]",
                           "[3]",     "[0,0,0,0]", "[4]",   "[0,1]",    "[5]",
                           "[1,0,0]", "[6]",     "[1,1]",   "[7]",      "[0,0,0,0,0]"};
  for (U64 n = 1; n <= 15; ++n) {
    c.Equal("nat_to_ftuple(" + std::to_string(n) + ")", Show(NatToFtuple(n)),
            ftuples[n - 1]);
  }
  c.Equal("fun2set", Show(FunToSet(oracle::Nats({1, 0, 2, 1, 2}))), "[1,2,5,7,10]");
  c.Equal("set2fun", Show(SetToFun(oracle::Nats({1, 2, 5, 7, 10}))), "[1,0,2,1,2]");
  c.Equal("nat_to_fun(2008)", Show(NatToFun(2008)), "[3,0,1,0,0,0,0]");
  c.Equal("fr(42)", Show(ToFactAsc(42)), "[0,0,0,3,1]");
  c.Equal("fl(42)", Show(ToFactDesc(42)), "[1,3,0,0,0]");
  c.Equal("rf(fr(42))", FactAscValue(ToFactAsc(42)).ToString(), "42");
  c.Equal("lf(fl(42))", FactDescValue(ToFactDesc(42)).ToString(), "42");
  c.Equal("perm_unrank(5,42)", Show(PermUnrank(5, 42)), "[1,4,0,2,3]");
  c.Equal("perm_unrank(8,2008)", Show(PermUnrank(8, 2008)), "[0,3,6,5,4,7,1,2]");
  c.Equal("nat_to_perm(2008)", Show(NatToPerm(2008)), "[1,4,3,2,0,5,6]");
  c.Equal("hff(42)", RenderTree(NatToHff(42)), "[[[]],[[]],[[]]]");
  c.Equal("hff1(42)", RenderTree(NatToHff1(42)), "[[[[],[],[]],[]]]");
  c.Equal("hff2(42)", RenderTree(NatToHff2(42)), "[[],[],[],[],[],[]]");
  c.Equal("hfp(42)", RenderTree(NatToHfp(42)),
          "[[],[[],[[]]],[[[]],[]],[[]],[[],[[]],[[],[[]]]]]");
  c.Equal("hff limit 10", RenderTree(NatToHff(1234567890, UrLimit{10})),
          "[3,2,0,1,7,0,1,2,0,2,2]");
}

// A random canonical object for codec `k`, with at most 12 parts.
std::vector<Nat> RandomObject(Codec k, std::mt19937_64& rng) {
  const std::size_t len = rng() % 13;
  std::vector<Nat> parts;
  switch (k) {
    case Codec::kSet: {
      Nat x(rng() % 50);
      for (std::size_t i = 0; i < len; ++i, x += Nat(1 + rng() % 50)) parts.push_back(x);
      break;
    }
    case Codec::kFun:
    case Codec::kRle:
      // Parts become exponents or run lengths here, so keep them small.
      for (std::size_t i = 0; i < len; ++i) parts.push_back(Nat(rng() % 256));
      break;
    case Codec::kFtuple:
      for (std::size_t i = 0; i < len; ++i) parts.push_back(oracle::RandomBelowBits(rng, 40));
      if (!IsCanonicalFtuple(parts)) parts.clear();
      break;
    case Codec::kPerm: {
      Perm p(len);
      for (std::size_t i = 0; i < len; ++i) p[i] = i;
      std::shuffle(p.begin(), p.end(), rng);
      parts = ToNats(p);
      break;
    }
  }
  return parts;
}

void RoundTrips(Criterion& c) {
  std::mt19937_64 rng(2008);
  std::vector<Nat> samples;
  for (U64 n = 0; n <= 5000; ++n) samples.emplace_back(n);
  for (int i = 0; i < 200; ++i) samples.push_back(oracle::Random128(rng));
  for (Codec k : kAllCodecs) {
    const std::string name(CodecName(k));
    for (const Nat& n : samples) {
      const Nat back = CodecEncode(k, CodecDecode(k, n));
      c.Expect(back == n, [&] { return name + " encode(decode(" + n.ToString() + "))"; });
    }
    for (int i = 0; i < 500; ++i) {
      const std::vector<Nat> obj = RandomObject(k, rng);
      c.Expect(CodecDecode(k, CodecEncode(k, obj)) == obj,
               [&] { return name + " decode(encode(" + Show(obj) + "))"; });
    }
    for (U64 limit : {0u, 4u, 10u}) {
      const UrLimit ul{limit};
      for (U64 n = 0; n <= 2000; ++n) {
        c.Expect(Rank(ul, k, Unrank(ul, k, n)) == Nat(n), [&] {
          return name + " hereditary limit " + std::to_string(limit) + " n " +
                 std::to_string(n);
        });
      }
    }
  }
}

void LexicographicOracle(Criterion& c) {
  for (std::size_t size = 1; size <= 6; ++size) {
    const auto all = oracle::LexPermutations(size);
    for (U64 rank = 0; rank < all.size(); ++rank) {
      c.Expect(PermUnrank(size, rank) == all[rank], [&] {
        return "perm_unrank(" + std::to_string(size) + "," + std::to_string(rank) + ")";
      });
      c.Expect(PermRank(all[rank]) == SizedRank{size, Nat(rank)},
               [&] { return "perm_rank(" + Show(all[rank]) + ")"; });
    }
  }
}

void BlockPartition(Criterion& c) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto all = oracle::LexPermutations(k);
    const std::set<Perm> expected(all.begin(), all.end());
    std::set<Perm> seen;
    const Nat start(oracle::SfRecurrence(k));
    c.Expect(FactorialSum(k) == start, [&] { return "sf(" + std::to_string(k) + ")"; });
    for (U64 i = 0; i < oracle::Factorial(k); ++i) {
      const Perm p = NatToPerm(start + Nat(i));
      c.Expect(seen.insert(p).second, [&] { return "repeated " + Show(p); });
    }
    c.Expect(seen == expected, [&] { return "block " + std::to_string(k) + " incomplete"; });
  }
  Nat factorial(1);
  for (std::size_t n = 0; n <= 20; ++n) {
    c.Expect(FactorialSum(n + 1) - FactorialSum(n) == factorial,
             [&] { return "sf recurrence at " + std::to_string(n); });
    factorial *= Nat(n + 1);
  }
}

void Tupling(Criterion& c) {
  std::mt19937_64 rng(42);
  for (std::size_t k = 1; k <= 8; ++k) {
    for (U64 n = 0; n <= 2000; ++n) {
      c.Expect(TupleEncode(TupleDecode(k, n)) == Nat(n), [&] {
        return "arity " + std::to_string(k) + " n " + std::to_string(n);
      });
    }
    for (int i = 0; i < 500; ++i) {
      KTuple t;
      for (std::size_t j = 0; j < k; ++j) t.emplace_back(rng() >> 32);
      c.Expect(TupleDecode(k, TupleEncode(t)) == t, [&] { return "tuple " + Show(t); });
    }
  }
}

void PartBound(Criterion& c) {
  for (Codec k : kAllCodecs) {
    for (U64 n = 1; n <= 5000; ++n) {
      for (const Nat& part : CodecDecode(k, n)) {
        c.Expect(part < Nat(n), [&] {
          return std::string(CodecName(k)) + " part " + part.ToString() + " of " +
                 std::to_string(n);
        });
      }
    }
  }
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const CodecError& e) {
    return e.code();
  }
  return ErrorCode::kDomain;  // anything but the expected code
}

void Edges(Criterion& c) {
  c.Equal("ftuple_to_nat([])", FtupleToNat({}).ToString(), "0");
  c.Equal("ftuple_to_nat([0])", FtupleToNat(oracle::Nats({0})).ToString(), "0");
  c.Expect(!IsCanonical({}, Codec::kFtuple, ParseTree("[[]]")),
           [] { return std::string("ftuple [[]] reported canonical"); });
  for (const auto& set : {oracle::Nats({2, 1}), oracle::Nats({1, 1})}) {
    c.Expect(CodeOf([&] { SetToNat(set); }) == ErrorCode::kNonCanonicalSet,
             [&] { return "set_to_nat(" + Show(set) + ")"; });
  }
}

}  // namespace
}  // namespace hfrank

int main() {
  struct Entry {
    const char* label;
    void (*run)(hfrank::Criterion&);
  };
  const Entry entries[] = {
      {"AC1 golden values", hfrank::GoldenValues},
      {"AC2 round trips", hfrank::RoundTrips},
      {"AC3 lexicographic oracle", hfrank::LexicographicOracle},
      {"AC4 block partition", hfrank::BlockPartition},
      {"AC5 tupling bijectivity", hfrank::Tupling},
      {"AC6 part bound", hfrank::PartBound},
      {"AC7 non-bijective edges", hfrank::Edges},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    hfrank::Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.Expect(false, [&] { return std::string("threw: ") + ex.what(); });
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %zu checks, %.2fs%s%s\n", c.failed() ? "FAIL" : "PASS", e.label,
                c.checks(), secs, c.failed() ? ", first failure: " : "",
                c.first_failure().c_str());
    failures += c.failed();
  }
  return failures == 0 ? 0 : 1;
}
