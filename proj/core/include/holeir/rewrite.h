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

#ifndef HOLEIR_REWRITE_H_
#define HOLEIR_REWRITE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "holeir/ir.h"

namespace holeir {

/// Union-find over abstract slots with concrete-type annotations. Each class
/// keeps the set of distinct concrete types it has been annotated with; a
/// class with more than one is inconsistent.
class ClassEngine {
public:
  struct Conflict {
    Type expected;
    Type found;
    /// Slots from the queried slot to one carrying `found`, each step an
    /// equality edge.
    std::vector<std::size_t> path;
  };

  ClassEngine() = default;
  explicit ClassEngine(std::size_t slots);

  std::size_t addSlot();
  std::size_t size() const { return parent_.size(); }

  void addEdge(std::size_t a, std::size_t b);
  void annotate(std::size_t slot, Type type);

  std::size_t find(std::size_t slot) const;
  /// The single concrete type of the slot's class, if it has exactly one.
  std::optional<Type> resolution(std::size_t slot) const;
  bool consistent(std::size_t slot) const;
  std::vector<std::size_t> members(std::size_t slot) const;

  /// Resolves the slot's class to `type`. Returns the slots that became
  /// resolved by this call (empty when the class already was), or the
  /// conflict if the class carries a different type. The engine is not
  /// modified on conflict.
  std::variant<std::vector<std::size_t>, Conflict> resolve(std::size_t slot,
                                                           Type type);

private:
  std::size_t root(std::size_t slot) const;
  std::vector<std::size_t> witness(std::size_t from, Type avoid) const;

  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<Type>> types_; // by root
  std::vector<Type> own_;                // per-slot annotations, for witnesses
  std::vector<bool> annotated_;
  std::vector<std::vector<std::size_t>> adjacent_;
};

/// The type classes of a module. Slots are the `%hole.t` values and `%hole.t`
/// parameters of hole declarations, plus any concrete value tied to one of
/// them by an equality edge. Edges:
///   arithmetic hole-op   lhs ~ rhs ~ result
///   icmp hole-op         lhs ~ rhs (the result is i1)
///   hole call            parameter i ~ argument i for `%hole.t` parameters
/// Annotations come from concrete slot types and from recorded
/// resolvedType() hints.
class TypeClasses {
public:
  explicit TypeClasses(const Module &module);

  bool isSlot(const Value *value) const;
  std::optional<Type> resolution(const Value *value) const;
  /// Hole-typed members of the value's class.
  std::vector<Value *> classOf(const Value *value) const;

  /// Resolves the value's class in this snapshot. Throws TypeConflictError
  /// with a witness chain on clash. The module itself is not touched.
  std::vector<Value *> resolve(Value *slot, Type type);

  /// Records the current resolution of every `%hole.t` slot as its
  /// resolvedType() hint.
  void commit() const;

  ClassEngine &engine() { return engine_; }
  std::size_t slotCount() const { return slots_.size(); }

private:
  std::size_t slotFor(Value *value);
  std::string describe(std::size_t slot) const;

  ClassEngine engine_;
  std::vector<Value *> slots_;
  std::unordered_map<const Value *, std::size_t> index_;
};

struct RewriteReport {
  std::size_t replacedCalls = 0;
  std::vector<std::string> redeclaredFunctions;
  /// (hole-op function name, concrete opcode name)
  std::vector<std::pair<std::string, std::string>> materializedOps;
  std::vector<std::string> deleted;

  bool empty() const {
    return replacedCalls == 0 && redeclaredFunctions.empty() &&
           materializedOps.empty() && deleted.empty();
  }
  void append(const RewriteReport &other);
};

/// Resolves the class of `slot` to `type`, records the result on every
/// member and returns the members that were not resolved before. Throws
/// TypeConflictError; nothing is recorded in that case.
std::vector<Value *> resolveClass(Module &module, Value *slot, Type type);

/// Rewrites everything whose class has resolved: hole declarations are
/// redeclared at the concrete types (keeping their names), hole-op calls
/// become the real instruction, and unused hole-op declarations are removed.
/// Idempotent.
RewriteReport materialize(Module &module);

/// Replace-all-uses-with allowing a change of type. With equal types this is
/// Module::replaceAllUsesWith. Otherwise `old` must be (or have been) a
/// `%hole.t` slot: its class is resolved to the replacement's type, resolved
/// declarations and operations are materialized, the uses are replaced and
/// the now-dead hole call and declaration are deleted.
///
/// Throws NotAHole, TypeConflictError, ScopeError or UnknownValue. The module
/// is left untouched on any error.
RewriteReport rauwNT(Module &module, Value *old, Value *replacement);

/// Erases `value`'s defining hole call and then its declaration if both are
/// dead. Returns false when there was nothing to remove.
bool eraseDeadHole(Module &module, Value *value, RewriteReport *report = nullptr);

} // namespace holeir

#endif // HOLEIR_REWRITE_H_
