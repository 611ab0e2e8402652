// Copyright 2026 The cellform Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CELLFORM_ERROR_HPP_
#define CELLFORM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cellform {

enum class ErrorCode {
  kIo,
  kBadHeader,
  kBadToken,
  kShapeMismatch,
  kNoOnes,
  kSizeGuard,
  kContractViolation,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cellform

#endif  // CELLFORM_ERROR_HPP_
