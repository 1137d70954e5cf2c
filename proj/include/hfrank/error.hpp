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

#ifndef HFRANK_ERROR_HPP_
#define HFRANK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfrank {

// Every precondition violation in the library is reported as a CodecError
// carrying one of these codes.
enum class ErrorCode {
  kInvalidRadix,
  kInvalidDigit,
  kEmptyInput,
  kOverflow,
  kShape,
  kInvalidArity,
  kNonCanonicalSet,
  kInvalidFactoradic,
  kInvalidPermutation,
  kInvalidLehmer,
  kRankOverflow,
  kDomain,
  kUrelementRange,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

class CodecError : public std::runtime_error {
 public:
  CodecError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hfrank

#endif  // HFRANK_ERROR_HPP_
