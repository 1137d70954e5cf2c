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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hfrank/error.hpp"
#include "hfrank/factoradic.hpp"
#include "hfrank/hereditary.hpp"
#include "hfrank/pairing.hpp"
#include "hfrank/permcodec.hpp"
#include "hfrank/tree.hpp"
#include "selftest.hpp"
#include "stego.hpp"

namespace hfrank::cli {
namespace {

// Shared option values; each subcommand binds the ones it uses.
struct Options {
  std::string codec;
  std::string ulimit = "0";
  int radix = 10;
  std::string format = "bracket";
  std::string number;
  std::vector<std::string> numbers;
  std::string tree;
  std::string kind = "pepis";
  std::size_t arity = 0;
  std::string order = "asc";
  std::string eval;
  bool global = false;
  std::size_t size = 0;
  std::string from = "0";
  std::size_t count = 0;
  bool flat = false;
  std::string items;
  std::string permuted;
};

const std::map<std::string, int> kRadixes = {{"10", 10}, {"16", 16}};

Codec RequireCodec(const std::string& name) {
  // CLI11 has already checked membership.
  return *CodecFromName(name);
}

TreeFormat FormatOf(const Options& o) {
  return o.format == "json" ? TreeFormat::kJson : TreeFormat::kBracket;
}

std::vector<Nat> ToNats(const std::vector<std::size_t>& values) {
  return {values.begin(), values.end()};
}

std::vector<std::size_t> ToSizes(const std::vector<Nat>& values) {
  std::vector<std::size_t> out;
  out.reserve(values.size());
  for (const Nat& v : values) out.push_back(v.ToSize());
  return out;
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw CodecError(ErrorCode::kDomain, "cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(file, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void AddCodecOptions(CLI::App* sub, Options& o) {
  std::vector<std::string> names;
  for (Codec c : kAllCodecs) names.emplace_back(CodecName(c));
  sub->add_option("--codec", o.codec, "Flat codec")
      ->required()
      ->check(CLI::IsMember(names));
  sub->add_option("--ulimit", o.ulimit, "Urelement limit")->capture_default_str();
}

void AddRadixOption(CLI::App* sub, Options& o) {
  sub->add_option("--radix", o.radix, "Output radix for numbers")
      ->transform(CLI::CheckedTransformer(kRadixes))
      ->capture_default_str();
}

void AddFormatOption(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Tree output format")
      ->check(CLI::IsMember({"bracket", "json"}))
      ->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijective encodings between natural numbers and combinatorial objects",
               "hfrank"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;

  {
    CLI::App* sub = app.add_subcommand("unrank", "Decode N into a tree");
    AddCodecOptions(sub, o);
    AddRadixOption(sub, o);
    AddFormatOption(sub, o);
    sub->add_option("N", o.number, "Code (decimal or 0x hex)")->required();
    handlers.emplace_back(sub, [&] {
      const Tree t = Unrank({Nat::Parse(o.ulimit)}, RequireCodec(o.codec),
                            Nat::Parse(o.number));
      out << RenderTree(t, FormatOf(o), o.radix) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("rank", "Encode a tree as a number");
    AddCodecOptions(sub, o);
    AddRadixOption(sub, o);
    sub->add_option("TREE", o.tree, "Tree text, or - for stdin");
    handlers.emplace_back(sub, [&] {
      std::string text = o.tree;
      if (text.empty() || text == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      const Tree t = ParseTree(text);
      const UrLimit limit{Nat::Parse(o.ulimit)};
      const Codec c = RequireCodec(o.codec);
      if (!IsCanonical(limit, c, t)) {
        err << "hfrank: tree is not canonical for codec " << o.codec << '\n';
        return kExitDomain;
      }
      out << FormatNat(Rank(limit, c, t), o.radix) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("pair", "Pair X and Y into one number");
    AddRadixOption(sub, o);
    sub->add_option("--kind", o.kind, "pepis or interleave")
        ->check(CLI::IsMember({"pepis", "interleave"}))
        ->capture_default_str();
    sub->add_option("XY", o.numbers, "X then Y")->required()->expected(2);
    handlers.emplace_back(sub, [&] {
      const Nat x = Nat::Parse(o.numbers[0]);
      const Nat y = Nat::Parse(o.numbers[1]);
      out << FormatNat(o.kind == "pepis" ? PepisPair(x, y) : Pair2(x, y), o.radix)
          << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("unpair", "Split N into X Y");
    AddRadixOption(sub, o);
    sub->add_option("--kind", o.kind, "pepis or interleave")
        ->check(CLI::IsMember({"pepis", "interleave"}))
        ->capture_default_str();
    sub->add_option("N", o.number)->required();
    handlers.emplace_back(sub, [&] {
      const Nat n = Nat::Parse(o.number);
      const PairResult p = o.kind == "pepis" ? PepisUnpair(n) : Unpair2(n);
      out << FormatNat(p.x, o.radix) << ' ' << FormatNat(p.y, o.radix) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("tuple", "Interleave the bits of N1..Nk");
    AddRadixOption(sub, o);
    sub->add_option("N", o.numbers)->required();
    handlers.emplace_back(sub, [&] {
      std::vector<Nat> parts;
      for (const std::string& s : o.numbers) parts.push_back(Nat::Parse(s));
      out << FormatNat(TupleEncode(parts), o.radix) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("untuple", "Split N into an arity-k tuple");
    AddRadixOption(sub, o);
    sub->add_option("--arity", o.arity, "Tuple size")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("N", o.number)->required();
    handlers.emplace_back(sub, [&] {
      out << RenderList(TupleDecode(o.arity, Nat::Parse(o.number)), o.radix) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("fact", "Factoradic digits of N, or the value of digits");
    AddRadixOption(sub, o);
    sub->add_option("--order", o.order, "asc (least significant first) or desc")
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();
    CLI::Option* n = sub->add_option("N", o.number);
    CLI::Option* eval = sub->add_option("--eval", o.eval, "Digit list to evaluate");
    n->excludes(eval);
    handlers.emplace_back(sub, [&, n, eval] {
      if (n->count() == 0 && eval->count() == 0) {
        err << "fact: give N or --eval DIGITS\n";
        return kExitUsage;
      }
      if (eval->count() > 0) {
        const std::vector<std::size_t> digits = ToSizes(ParseList(o.eval));
        out << FormatNat(o.order == "asc" ? FactAscValue(digits) : FactDescValue(digits),
                         o.radix)
            << '\n';
      } else {
        const Nat value = Nat::Parse(o.number);
        out << RenderList(ToNats(o.order == "asc" ? ToFactAsc(value) : ToFactDesc(value)))
            << '\n';
      }
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("perm-rank", "Rank a permutation");
    AddRadixOption(sub, o);
    sub->add_flag("--global", o.global, "Print the single code over all sizes");
    sub->add_option("PERM", o.tree, "Permutation as [a,b,...]")->required();
    handlers.emplace_back(sub, [&] {
      const std::vector<std::size_t> perm = ToSizes(ParseList(o.tree));
      if (!IsPermutation(perm)) {
        throw CodecError(ErrorCode::kInvalidPermutation, "not a permutation: " + o.tree);
      }
      if (o.global) {
        out << FormatNat(PermToNat(perm), o.radix) << '\n';
      } else if (perm.empty()) {
        out << "0 0\n";
      } else {
        const SizedRank r = PermRank(perm);
        out << r.size << ' ' << FormatNat(r.rank, o.radix) << '\n';
      }
      return kExitOk;
    });
  }
  CLI::Option* perm_size = nullptr;
  {
    CLI::App* sub = app.add_subcommand("perm-unrank", "Decode N into a permutation");
    perm_size = sub->add_option("--size", o.size,
                                "Permutation size; without it N is a code over all sizes");
    sub->add_option("N", o.number)->required();
    handlers.emplace_back(sub, [&] {
      const Nat n = Nat::Parse(o.number);
      const Perm p = perm_size->count() > 0 ? PermUnrank(o.size, n) : NatToPerm(n);
      out << RenderList(ToNats(p)) << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("enum", "Decode a range of codes, one per line");
    AddCodecOptions(sub, o);
    AddRadixOption(sub, o);
    AddFormatOption(sub, o);
    sub->add_option("--from", o.from, "First code")->capture_default_str();
    sub->add_option("--count", o.count, "Number of codes")->required();
    sub->add_flag("--flat", o.flat, "Print the flat decode instead of the tree");
    handlers.emplace_back(sub, [&] {
      const UrLimit limit{Nat::Parse(o.ulimit)};
      const Codec c = RequireCodec(o.codec);
      Nat n = Nat::Parse(o.from);
      for (std::size_t i = 0; i < o.count; ++i, n += Nat(1)) {
        if (o.flat) {
          out << RenderList(CodecDecode(c, n), o.radix) << '\n';
        } else {
          out << RenderTree(Unrank(limit, c, n), FormatOf(o), o.radix) << '\n';
        }
      }
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("stego-encode",
                                       "Reorder the lines of FILE so they carry N");
    sub->add_option("--items", o.items, "Cover file, one item per line")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("N", o.number)->required();
    handlers.emplace_back(sub, [&] {
      for (const std::string& line :
           stego::Embed(ReadLines(o.items), Nat::Parse(o.number))) {
        out << line << '\n';
      }
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("stego-decode",
                                       "Recover N from a reordering of FILE");
    AddRadixOption(sub, o);
    sub->add_option("--items", o.items, "Cover file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--permuted", o.permuted, "Reordered file")
        ->required()
        ->check(CLI::ExistingFile);
    handlers.emplace_back(sub, [&] {
      out << FormatNat(stego::Extract(ReadLines(o.items), ReadLines(o.permuted)),
                       o.radix)
          << '\n';
      return kExitOk;
    });
  }
  {
    CLI::App* sub = app.add_subcommand("selftest", "Run the built-in checks");
    handlers.emplace_back(sub, [&] {
      const selftest::Report report = selftest::Run();
      out << "passed " << report.passed << ", failed " << report.failed << '\n';
      if (report.ok()) return kExitOk;
      err << "hfrank: first failure: " << report.failures.front() << '\n';
      return kExitDomain;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
  } catch (const CodecError& e) {
    err << "hfrank: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::underflow_error& e) {
    err << "hfrank: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hfrank::cli
