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

#include "hfrank/error.hpp"

namespace hfrank {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidRadix: return "invalid-radix";
    case ErrorCode::kInvalidDigit: return "invalid-digit";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kInvalidArity: return "invalid-arity";
    case ErrorCode::kNonCanonicalSet: return "non-canonical-set";
    case ErrorCode::kInvalidFactoradic: return "invalid-factoradic";
    case ErrorCode::kInvalidPermutation: return "invalid-permutation";
    case ErrorCode::kInvalidLehmer: return "invalid-lehmer";
    case ErrorCode::kRankOverflow: return "rank-overflow";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUrelementRange: return "urelement-range";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace hfrank
