// Copyright (c) 2026 The simulst Authors
//
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

#ifndef SIMULST_ERROR_H_
#define SIMULST_ERROR_H_

#include <stdexcept>
#include <string>

namespace simulst {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kParse,
  kModel,
  kProtocol,
  kNetwork,
  kInternal,
};

// Base exception for everything thrown by the engine. The C API maps the
// code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error InvalidArgument(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace simulst

#endif  // SIMULST_ERROR_H_
