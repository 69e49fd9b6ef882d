// Copyright 2026 The holeir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLEIR_ERROR_H_
#define HOLEIR_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace holeir {

enum class ErrorCode {
  UnknownValue,
  TypeMismatch,
  ScopeError,
  StillInUse,
  TypeConflict,
  NotAHole,
  UnresolvedHoles,
  FuelExhausted,
  PolicyInfeasible,
  ConfigError,
  InvalidArgument,
  UndefinedFunction,
};

const char *errorCodeName(ErrorCode code);

/// Failure raised by the library operations. The code identifies which
/// contract was violated; the message is meant for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Two concrete types met inside one type class. `witness` is the chain of
/// slot names connecting the two annotations through equality edges.
class TypeConflictError : public Error {
public:
  TypeConflictError(std::string expected, std::string found,
                    std::vector<std::string> witness);

  const std::string &expected() const { return expected_; }
  const std::string &found() const { return found_; }
  const std::vector<std::string> &witness() const { return witness_; }

private:
  std::string expected_;
  std::string found_;
  std::vector<std::string> witness_;
};

} // namespace holeir

#endif // HOLEIR_ERROR_H_
