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

#ifndef HOLEIR_DOMINATORS_H_
#define HOLEIR_DOMINATORS_H_

#include <unordered_map>
#include <vector>

#include "holeir/ir.h"

namespace holeir {

/// Immediate-dominator tree over the blocks of one function definition,
/// computed with the iterative Cooper/Harvey/Kennedy scheme over reverse
/// post-order. Blocks not reachable from the entry have no idom and are
/// listed by unreachable().
///
/// The tree is a snapshot: editing the function's blocks or instructions
/// afterwards invalidates it.
class DomTree {
public:
  explicit DomTree(const Function &fn);

  const Function &function() const { return *fn_; }

  /// Null for the entry block and for unreachable blocks.
  Block *idom(const Block *block) const;
  bool reachable(const Block *block) const;
  /// Reflexive block dominance. An unreachable block dominates nothing and
  /// is dominated by nothing.
  bool dominates(const Block *a, const Block *b) const;

  const std::vector<Block *> &reversePostOrder() const { return rpo_; }
  std::vector<Block *> unreachable() const;

  /// True when `def` is available at operand slot `use`. Phi operands are
  /// checked against the end of the corresponding incoming block. Uses in
  /// unreachable blocks are vacuously dominated.
  bool dominatesUse(const Value *def, const Use &use) const;
  /// True when `def` is available immediately before `point`.
  bool dominatesPoint(const Value *def, const Instruction *point) const;

private:
  const Function *fn_;
  std::vector<Block *> rpo_;
  std::unordered_map<const Block *, unsigned> order_;
  std::vector<int> idom_;
  std::unordered_map<const Instruction *, unsigned> position_;
};

} // namespace holeir

#endif // HOLEIR_DOMINATORS_H_
