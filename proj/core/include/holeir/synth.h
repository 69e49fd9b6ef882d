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

#ifndef HOLEIR_SYNTH_H_
#define HOLEIR_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holeir/error.h"
#include "holeir/interp.h"
#include "holeir/ir.h"
#include "holeir/textio.h"

namespace holeir {

/// A fill failure, tagged with the assignment line that caused it. code()
/// is the underlying rewrite error.
class AssignmentError : public Error {
public:
  AssignmentError(ErrorCode code, unsigned line, const std::string &message)
      : Error(code, message), line_(line) {}
  unsigned line() const { return line_; }

private:
  unsigned line_;
};

/// Applies the assignments in order to a copy of `module` and returns the
/// copy with every resolvable operation materialized. Value references are
/// resolved against the printed names of the input module.
Module fill(const Module &module, const AssignmentSet &assignments);

/// One value a synthesizer may plug into a hole.
struct HoleCandidate {
  enum class Kind { Operand, Constant, Operation };

  Kind kind = Kind::Constant;
  Value *operand = nullptr; // Kind::Operand, in the sketch's module
  IntConst constant;        // Kind::Constant
  Opcode opcode = Opcode::Add; // Kind::Operation over two dependencies
  std::size_t lhsDep = 0;
  std::size_t rhsDep = 0;
};

struct CandidatePools {
  /// Typed constants offered to every hole.
  std::vector<IntConst> constants;
  /// Offer in-scope integer values dominating each hole's call site.
  bool operands = true;
  /// Opcodes applied to pairs of a hole's dependencies. Candidates follow
  /// kBinaryOpcodes order whatever the order here.
  std::vector<Opcode> opcodes;

  /// Instantiates `seeds` (default {0, 1, -1, 2, width-1}) at every integer
  /// width used by the sketch's signature and typed holes, deduplicated.
  static CandidatePools defaults(const Function &sketch,
                                 std::optional<std::vector<SignedBits>> seeds = {});
};

/// Candidate list for each hole of `sketch`, in hole declaration order:
/// operands, then constants, then operations.
std::vector<std::vector<HoleCandidate>>
enumerateCandidates(const Module &module, const Function &sketch,
                    const CandidatePools &pools);

struct SynthConfig {
  std::size_t maxCandidates = 1'000'000;
  /// Unset picks defaultPolicy() for the target.
  std::optional<EquivPolicy> policy;
  /// 0 keeps the natural candidate order; other values shuffle each hole's
  /// list deterministically.
  std::uint64_t orderSeed = 0;
  std::uint64_t fuel = kDefaultFuel;
};

struct Solution {
  AssignmentSet assignments;
  Module filledModule;
  std::size_t candidatesTried = 0;
};

struct SuperoptResult {
  std::optional<Solution> solution;
  std::size_t candidatesTried = 0;

  bool found() const { return solution.has_value(); }
};

/// Enumerates assignment tuples for the holes of `sketch` in lexicographic
/// order (first hole most significant) and returns the first filling that is
/// verifier-clean, hole-free and equivalent to `target`. Throws ConfigError
/// for mismatched signatures, a holed target or a hole-free sketch.
SuperoptResult superopt(const Module &module, std::string_view target,
                        std::string_view sketch, const CandidatePools &pools,
                        const SynthConfig &config);

} // namespace holeir

#endif // HOLEIR_SYNTH_H_
