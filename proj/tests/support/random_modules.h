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

#ifndef HOLEIR_TESTS_SUPPORT_RANDOM_MODULES_H_
#define HOLEIR_TESTS_SUPPORT_RANDOM_MODULES_H_

#include <cstddef>
#include <random>
#include <vector>

#include "holeir/ir.h"

namespace holeir::testing {

using Rng = std::mt19937_64;

struct CfgOptions {
  std::size_t maxFunctions = 4;
  std::size_t maxBlocks = 8;
  std::size_t maxInstructions = 6; // per block, excluding phis/terminator
  double backEdgeChance = 0.2;
};

/// Random hole-free module of integer arithmetic over a random CFG with
/// loops and phis. The result always verifies.
Module randomCfgModule(Rng &rng, const CfgOptions &options = {});

struct HoleOptions {
  std::size_t maxSteps = 10;
  /// Adds a diamond (entry, left, right, join) so that scope errors can
  /// happen; otherwise a single block.
  bool diamond = false;
  /// Typed holes and typed values use these widths.
  std::vector<unsigned> widths = {8, 32};
};

struct HoleModule {
  Module module;
  Function *fn = nullptr;
};

/// Random single-function module built through the hole API: typed and
/// untyped holes with dependencies, hole operations and concrete
/// arithmetic. The result always verifies.
HoleModule randomHoleModule(Rng &rng, const HoleOptions &options = {});

/// Every integer or hole-typed value defined in `fn` (arguments first).
std::vector<Value *> allValues(const Function &fn);

} // namespace holeir::testing

#endif // HOLEIR_TESTS_SUPPORT_RANDOM_MODULES_H_
