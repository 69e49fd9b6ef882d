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

#ifndef HOLEIR_VERIFIER_H_
#define HOLEIR_VERIFIER_H_

#include <vector>

#include "holeir/diagnostic.h"
#include "holeir/ir.h"

namespace holeir {

/// Validates a module and returns every problem found; an empty result means
/// the module is valid. Checks run in this order: call/operand typing,
/// def-before-use dominance, terminator placement and reachability, hole
/// conventions, constant widths.
std::vector<Diagnostic> verify(const Module &module);

/// True when no function is a hole or hole operation and no signature or
/// value carries `%hole.t`.
bool isClosed(const Module &module);
/// True when the body of `fn` contains no hole or hole-operation call and no
/// `%hole.t` value.
bool isClosed(const Function &fn);

} // namespace holeir

#endif // HOLEIR_VERIFIER_H_
