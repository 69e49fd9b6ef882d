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

#ifndef HOLEIR_SRC_REWRITE_INTERNAL_H_
#define HOLEIR_SRC_REWRITE_INTERNAL_H_

#include <unordered_map>
#include <vector>

#include "holeir/rewrite.h"

namespace holeir::detail {

struct Materialized {
  RewriteReport report;
  /// Hole-op calls that were replaced, mapped to their concrete instruction.
  std::unordered_map<const Value *, Instruction *> replaced;
  /// Call sites of hole declarations whose signature changed.
  std::vector<Instruction *> retypedCalls;
};

Materialized materializeAll(Module &module);

/// Values removed by a rewrite, mapped to what took their place.
using Forwards = std::unordered_map<const Value *, Value *>;

/// rauwNT that also records every value it replaced in `forwards`.
RewriteReport rauwNTForward(Module &module, Value *old, Value *replacement,
                            Forwards *forwards);

/// Position in front of the first definition, where new declarations go.
std::size_t declarationSlot(const Module &module);

} // namespace holeir::detail

#endif // HOLEIR_SRC_REWRITE_INTERNAL_H_
