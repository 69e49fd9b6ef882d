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

#ifndef HOLEIR_HOLES_H_
#define HOLEIR_HOLES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holeir/ir.h"

namespace holeir {

// A symbolic hole is a declaration `declare <ty> @holeN(<dep types>)` with
// exactly one call site; the call's result is the hole's value. A hole of
// unknown type returns `%hole.t`. Operations over values of unknown type
// are calls to `@hole.op.<opcode>` (or `@hole.op.icmp.<pred>`), which are
// rewritten to the real opcode once their type class resolves.

struct HoleInfo {
  std::string name;
  Function *declaration = nullptr;
  Instruction *callSite = nullptr;
  Type declaredType = Type::hole();
  std::vector<Value *> deps;
  std::optional<Type> resolvedType;
};

/// An uninterpreted operation over operands of unknown type.
struct HoleOp {
  Opcode opcode = Opcode::Add; // a binary opcode or ICmp
  ICmpPred pred = ICmpPred::Eq;

  static HoleOp binary(Opcode op) { return {op, ICmpPred::Eq}; }
  static HoleOp icmp(ICmpPred pred) { return {Opcode::ICmp, pred}; }

  /// `hole.op.add`, `hole.op.icmp.slt`, ...
  std::string functionName() const;
  /// The declaration signature for this op.
  FunctionType signature() const;

  friend bool operator==(const HoleOp &, const HoleOp &) = default;
};

std::optional<HoleOp> parseHoleOpName(std::string_view name);
/// `hole` followed by decimal digits.
bool isHoleName(std::string_view name);
/// Any name starting with `hole`; such names are reserved.
bool isReservedName(std::string_view name);

bool isHoleFunction(const Function *fn);
bool isHoleOpFunction(const Function *fn);
bool isHoleCall(const Value *value);
bool isHoleOpCall(const Value *value);

/// Declares a fresh `@holeN` (smallest unused N) and inserts its call before
/// `insertBefore`. `type` must be an integer type; absent means unknown
/// (`%hole.t`). Throws ScopeError if a dependency is not available at the
/// insertion point.
HoleInfo newHole(Module &module, Instruction *insertBefore,
                 std::optional<Type> type, std::span<Value *const> deps);

/// Inserts an operation over `lhs` and `rhs` before `insertBefore`. When
/// either side is (or resolves to) a concrete type the result is the real
/// instruction and the other side's class is resolved to match; otherwise it
/// is a `@hole.op.*` call. Throws TypeConflict on incompatible types.
Value *newHoleOp(Module &module, Instruction *insertBefore, HoleOp op,
                 Value *lhs, Value *rhs);

/// Live holes in declaration order.
std::vector<HoleInfo> listHoles(const Module &module);
std::optional<HoleInfo> findHole(const Module &module, std::string_view name);

} // namespace holeir

#endif // HOLEIR_HOLES_H_
