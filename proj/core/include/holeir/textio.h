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

#ifndef HOLEIR_TEXTIO_H_
#define HOLEIR_TEXTIO_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holeir/diagnostic.h"
#include "holeir/ir.h"

namespace holeir {

struct ModuleParse {
  std::optional<Module> module;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return module.has_value(); }
};

/// Parses the textual IR subset. Only syntax, name resolution and operand
/// type annotations are checked here; dominance and signature agreement are
/// left to verify(). On error every recoverable line is still scanned.
ModuleParse parseModule(std::string_view text);

/// Canonical form: two-space indentation, one blank line between top-level
/// items except between consecutive declarations, unnamed values numbered
/// per function in definition order. An empty module prints as "".
std::string printModule(const Module &module);
std::string printFunction(const Function &fn);

/// Printed names for the local values and blocks of one function, using the
/// same numbering as the printer.
class SlotNames {
public:
  explicit SlotNames(const Function &fn);

  /// `%name`, `%N`, or the literal for a constant.
  std::string ref(const Value *value) const;
  std::string label(const Block *block) const;
  /// Looks a local value up by its printed name (without `%`).
  Value *lookup(std::string_view name) const;

private:
  std::unordered_map<const Value *, std::string> names_;
  std::unordered_map<const Block *, std::string> labels_;
  std::unordered_map<std::string, Value *> byName_;
};

/// Constant literal without its type: signed decimal, `true`/`false` for i1.
std::string literal(const IntConst &value);

struct Assignment {
  std::string hole; // without the leading '@'
  /// Set for `@h = iN <int>`.
  std::optional<IntConst> constant;
  /// Set for `@h = [ty] %name` (without '%').
  std::string valueRef;
  /// Optional type marker in front of a value reference.
  std::optional<Type> refType;
  unsigned line = 0;

  bool isConstant() const { return constant.has_value(); }
};

struct AssignmentSet {
  std::vector<Assignment> entries;
};

struct AssignmentParse {
  std::optional<AssignmentSet> assignments;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return assignments.has_value(); }
};

/// Line format: `@<hole> = <type> <int>` or `@<hole> = [<type>] %<value>`.
/// Blank lines and `#` comments are ignored; a repeated hole name is an
/// error.
AssignmentParse parseAssignments(std::string_view text);
std::string printAssignments(const AssignmentSet &set);

} // namespace holeir

#endif // HOLEIR_TEXTIO_H_
