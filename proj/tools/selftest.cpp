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

#include "selftest.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>

#include "hfrank/codecs.hpp"
#include "hfrank/error.hpp"
#include "hfrank/factoradic.hpp"
#include "hfrank/hereditary.hpp"
#include "hfrank/pairing.hpp"
#include "hfrank/permcodec.hpp"
#include "hfrank/tree.hpp"

namespace hfrank::selftest {
namespace {

constexpr std::size_t kMaxRecordedFailures = 20;

template <typename Seq>
std::string Show(const Seq& values) {
  return RenderList(std::vector<Nat>(values.begin(), values.end()));
}

class Runner {
 public:
  explicit Runner(Report& report) : report_(report) {}

  // One check: `fn` returns an empty string on success, or a description of
  // the mismatch. Exceptions count as failures.
  template <typename Fn>
  void Check(const std::string& name, Fn&& fn) {
    std::string problem;
    try {
      problem = fn();
    } catch (const std::exception& e) {
      problem = std::string("threw: ") + e.what();
    }
    if (problem.empty()) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (report_.failures.size() < kMaxRecordedFailures) {
      report_.failures.push_back(name + ": " + problem);
    }
  }

  template <typename Fn>
  void Golden(const std::string& name, Fn&& fn, const std::string& expected) {
    Check(name, [&]() -> std::string {
      const std::string got = fn();
      return got == expected ? "" : "got " + got + ", want " + expected;
    });
  }

 private:
  Report& report_;
};

void GoldenValues(Runner& r) {
  r.Golden("pepis_pair(1,10)", [] { return PepisPair(1, 10).ToString(); }, "41");
  r.Golden("pepis_pair(10,1)", [] { return PepisPair(10, 1).ToString(); }, "3071");
  r.Golden("pepis 4x4 table", [] {
    std::vector<Nat> t;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) t.push_back(PepisPair(a, b));
    return Show(t);
  }, "[0,2,4,6,1,5,9,13,3,11,19,27,7,23,39,55]");
  r.Golden("tuple_decode(3,42)", [] { return Show(TupleDecode(3, 42)); }, "[2,1,2]");
  r.Golden("tuple_encode([2,1,2])", [] {
    const Nat t[] = {2, 1, 2};
    return TupleEncode(t).ToString();
  }, "42");
  r.Golden("ftuple [1,0,2,1,3]", [] {
    const Nat t[] = {1, 0, 2, 1, 3};
    return FtupleToNat(t).ToString();
  }, "21295");
  r.Golden("nat_to_ftuple(21295)", [] { return Show(NatToFtuple(21295)); },
           "[1,0,2,1,3]");
  r.Golden("nat_to_ftuple 1..15", [] {
    std::string s;
    for (int n = 1; n <= 15; ++n) s += Show(NatToFtuple(n));
    return s;
  }, "[0,0][1][0,0,0][2][1,0][3][0,0,0,0][4][0,1][5][1,0,0][6][1,1][7][0,0,0,0,0]");
  r.Golden("fun_to_set([1,0,2,1,2])", [] {
    const Nat f[] = {1, 0, 2, 1, 2};
    return Show(FunToSet(f));
  }, "[1,2,5,7,10]");
  r.Golden("set_to_fun([1,2,5,7,10])", [] {
    const Nat s[] = {1, 2, 5, 7, 10};
    return Show(SetToFun(s));
  }, "[1,0,2,1,2]");
  r.Golden("nat_to_fun(2008)", [] { return Show(NatToFun(2008)); },
           "[3,0,1,0,0,0,0]");
  r.Golden("fr(42)", [] { return Show(ToFactAsc(42)); }, "[0,0,0,3,1]");
  r.Golden("fl(42)", [] { return Show(ToFactDesc(42)); }, "[1,3,0,0,0]");
  r.Golden("rf(fr(42))", [] { return FactAscValue(ToFactAsc(42)).ToString(); }, "42");
  r.Golden("lf(fl(42))", [] { return FactDescValue(ToFactDesc(42)).ToString(); }, "42");
  r.Golden("perm_unrank(5,42)", [] { return Show(PermUnrank(5, 42)); }, "[1,4,0,2,3]");
  r.Golden("perm_unrank(8,2008)", [] { return Show(PermUnrank(8, 2008)); },
           "[0,3,6,5,4,7,1,2]");
  r.Golden("perm_rank([0,3,6,5,4,7,1,2])", [] {
    const SizedRank s = PermRank(Perm{0, 3, 6, 5, 4, 7, 1, 2});
    return std::to_string(s.size) + " " + s.rank.ToString();
  }, "8 2008");
  r.Golden("nat_to_perm(2008)", [] { return Show(NatToPerm(2008)); },
           "[1,4,3,2,0,5,6]");
  r.Golden("hff(42)", [] { return RenderTree(NatToHff(42)); }, "[[[]],[[]],[[]]]");
  r.Golden("hff1(42)", [] { return RenderTree(NatToHff1(42)); }, "[[[[],[],[]],[]]]");
  r.Golden("hff2(42)", [] { return RenderTree(NatToHff2(42)); }, "[[],[],[],[],[],[]]");
  r.Golden("hfp(42)", [] { return RenderTree(NatToHfp(42)); },
           "[[],[[],[[]]],[[[]],[]],[[]],[[],[[]],[[],[[]]]]]");
  r.Golden("hff limit 10 of 1234567890",
           [] { return RenderTree(NatToHff(1234567890, UrLimit{10})); },
           "[3,2,0,1,7,0,1,2,0,2,2]");
}

void FlatRoundTrips(Runner& r, const Config& config) {
  std::mt19937_64 rng(20080808);
  std::vector<Nat> samples;
  for (std::size_t n = 0; n <= config.exhaustive_limit; ++n) samples.emplace_back(n);
  for (std::size_t i = 0; i < config.random_samples; ++i) {
    samples.push_back((Nat(rng()) << 64) + Nat(rng()));
  }
  for (const FlatCodec& codec : config.codecs) {
    for (const Nat& n : samples) {
      r.Check(codec.name + " round trip of " + n.ToString(), [&]() -> std::string {
        const std::vector<Nat> parts = codec.decode(n);
        const Nat back = codec.encode(parts);
        if (back != n) return "decoded " + Show(parts) + " encodes to " + back.ToString();
        if (n.IsZero()) return "";
        for (const Nat& p : parts) {
          if (!(p < n)) return "part " + p.ToString() + " not below " + n.ToString();
        }
        return "";
      });
    }
  }
}

void HereditaryRoundTrips(Runner& r, const Config& config) {
  for (std::uint64_t ulimit : {0u, 4u, 10u}) {
    for (Codec c : kAllCodecs) {
      r.Check("hereditary " + std::string(CodecName(c)) + " limit " +
                  std::to_string(ulimit),
              [&]() -> std::string {
                const UrLimit ul{ulimit};
                for (std::size_t n = 0; n <= config.hereditary_limit; ++n) {
                  const Nat back = Rank(ul, c, Unrank(ul, c, n));
                  if (back != Nat(n)) {
                    return "n=" + std::to_string(n) + " ranks back to " +
                           back.ToString();
                  }
                }
                return "";
              });
    }
  }
}

void PermutationOrder(Runner& r, const Config& config) {
  for (std::size_t size = 1; size <= 6; ++size) {
    r.Check("lexicographic order size " + std::to_string(size), [&]() -> std::string {
      Perm p(size);
      for (std::size_t i = 0; i < size; ++i) p[i] = i;
      std::uint64_t rank = 0;
      do {
        if (PermUnrank(size, rank) != p) return "rank " + std::to_string(rank);
        if (PermRank(p).rank != Nat(rank)) return "rank of " + Show(p);
        ++rank;
      } while (std::next_permutation(p.begin(), p.end()));
      return "";
    });
  }

  const auto sf = config.factorial_sum ? config.factorial_sum
                                       : std::function<Nat(std::size_t)>(FactorialSum);
  for (std::size_t k = 1; k <= 6; ++k) {
    r.Check("perm block " + std::to_string(k), [&]() -> std::string {
      const Nat start = sf(k);
      std::uint64_t count = 1;
      for (std::uint64_t i = 2; i <= k; ++i) count *= i;
      std::set<Perm> seen;
      for (std::uint64_t i = 0; i < count; ++i) {
        const Perm p = NatToPerm(start + Nat(i));
        if (p.size() != k) {
          return "code " + (start + Nat(i)).ToString() + " has size " +
                 std::to_string(p.size());
        }
        if (!seen.insert(p).second) return "repeat " + Show(p);
      }
      return "";
    });
  }
  r.Check("sf recurrence", [&]() -> std::string {
    Nat factorial(1);
    for (std::size_t n = 0; n <= 20; ++n) {
      if (sf(n + 1) - sf(n) != factorial) return "at n=" + std::to_string(n);
      factorial *= Nat(n + 1);
    }
    return "";
  });
}

void Tupling(Runner& r) {
  std::mt19937_64 rng(42);
  for (std::size_t k = 1; k <= 8; ++k) {
    r.Check("tupling arity " + std::to_string(k), [&]() -> std::string {
      for (std::uint64_t n = 0; n <= 2000; ++n) {
        if (TupleEncode(TupleDecode(k, n)) != Nat(n)) return "n=" + std::to_string(n);
      }
      for (int i = 0; i < 500; ++i) {
        KTuple t;
        for (std::size_t j = 0; j < k; ++j) t.emplace_back(rng() >> 32);
        if (TupleDecode(k, TupleEncode(t)) != t) return "tuple " + Show(t);
      }
      return "";
    });
  }
}

void EdgeCases(Runner& r) {
  r.Check("ftuple [] and [0] collide at 0", []() -> std::string {
    const Nat zero[] = {0};
    return FtupleToNat({}) == Nat(0) && FtupleToNat(zero) == Nat(0) ? "" : "mismatch";
  });
  r.Check("set_to_nat rejects [2,1] and [1,1]", []() -> std::string {
    for (const NatSet& s : {NatSet{2, 1}, NatSet{1, 1}}) {
      try {
        SetToNat(s);
        return "accepted " + Show(s);
      } catch (const CodecError& e) {
        if (e.code() != ErrorCode::kNonCanonicalSet) return e.what();
      }
    }
    return "";
  });
  r.Check("ftuple tree [[]] is non-canonical", []() -> std::string {
    return IsCanonical({}, Codec::kFtuple, ParseTree("[[]]")) ? "reported canonical" : "";
  });
}

}  // namespace

std::vector<FlatCodec> LibraryCodecs() {
  std::vector<FlatCodec> codecs;
  for (Codec c : kAllCodecs) {
    codecs.push_back({std::string(CodecName(c)),
                      [c](const Nat& n) { return CodecDecode(c, n); },
                      [c](std::span<const Nat> p) { return CodecEncode(c, p); }});
  }
  return codecs;
}

Report Run(const Config& config) {
  Report report;
  Runner runner(report);
  GoldenValues(runner);
  FlatRoundTrips(runner, config);
  HereditaryRoundTrips(runner, config);
  PermutationOrder(runner, config);
  Tupling(runner);
  EdgeCases(runner);
  return report;
}

}  // namespace hfrank::selftest
