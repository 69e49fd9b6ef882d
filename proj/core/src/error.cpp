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

#include "holeir/error.h"

#include <utility>

namespace holeir {

const char *errorCodeName(ErrorCode code) {
  switch (code) {
  case ErrorCode::UnknownValue:
    return "UnknownValue";
  case ErrorCode::TypeMismatch:
    return "TypeMismatch";
  case ErrorCode::ScopeError:
    return "ScopeError";
  case ErrorCode::StillInUse:
    return "StillInUse";
  case ErrorCode::TypeConflict:
    return "TypeConflict";
  case ErrorCode::NotAHole:
    return "NotAHole";
  case ErrorCode::UnresolvedHoles:
    return "UnresolvedHoles";
  case ErrorCode::FuelExhausted:
    return "FuelExhausted";
  case ErrorCode::PolicyInfeasible:
    return "PolicyInfeasible";
  case ErrorCode::ConfigError:
    return "ConfigError";
  case ErrorCode::InvalidArgument:
    return "InvalidArgument";
  case ErrorCode::UndefinedFunction:
    return "UndefinedFunction";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string conflictMessage(const std::string &expected,
                            const std::string &found,
                            const std::vector<std::string> &witness) {
  std::string msg = "type conflict: " + expected + " vs " + found;
  if (!witness.empty()) {
    msg += " via ";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i)
        msg += " ~ ";
      msg += witness[i];
    }
  }
  return msg;
}

} // namespace

TypeConflictError::TypeConflictError(std::string expected, std::string found,
                                     std::vector<std::string> witness)
    : Error(ErrorCode::TypeConflict, conflictMessage(expected, found, witness)),
      expected_(std::move(expected)), found_(std::move(found)),
      witness_(std::move(witness)) {}

} // namespace holeir
