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

#ifndef HOLEIR_DIAGNOSTIC_H_
#define HOLEIR_DIAGNOSTIC_H_

#include <string>
#include <string_view>

namespace holeir {

struct Diagnostic {
  enum class Severity { Error, Warning };

  Severity severity = Severity::Error;
  unsigned line = 0;
  unsigned column = 0;
  std::string message;

  /// `<file>:<line>:<col>: error: <message>`
  std::string format(std::string_view file) const;

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

} // namespace holeir

#endif // HOLEIR_DIAGNOSTIC_H_
