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

#ifndef HOLEIR_INTERP_H_
#define HOLEIR_INTERP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "holeir/ir.h"

namespace holeir {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

struct RunResult {
  /// Empty for functions returning void.
  std::optional<IntConst> value;
  std::uint64_t steps = 0;
};

/// Executes a hole-free function. Arithmetic wraps at the operand width,
/// shifts by at least the width yield 0 (ashr of a negative value yields
/// -1), and every executed instruction costs one step of `fuel`.
///
/// Throws UnresolvedHoles if a hole or hole operation is reachable,
/// FuelExhausted when the budget runs out, UndefinedFunction for calls to
/// non-hole declarations and InvalidArgument for bad arguments.
RunResult run(const Module &module, std::string_view fn,
              std::span<const IntConst> args, std::uint64_t fuel = kDefaultFuel);

/// Evaluates one binary opcode on equal-width operands.
IntConst evalBinary(Opcode op, const IntConst &lhs, const IntConst &rhs);
bool evalICmp(ICmpPred pred, const IntConst &lhs, const IntConst &rhs);

/// 64-bit linear congruential generator (Knuth's MMIX constants:
/// x' = 6364136223846793005 * x + 1442695040888963407 mod 2^64). Wider
/// values are assembled from successive outputs, low word first.
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  Bits nextBits(unsigned width);

private:
  std::uint64_t state_;
};

/// Enumerate every input; infeasible when the arguments total more than
/// `maxInputBits` bits.
struct Exhaustive {
  unsigned maxInputBits = 16;
};
/// `count` inputs drawn from Lcg64(seed).
struct Sampled {
  std::size_t count = 1024;
  std::uint64_t seed = 0xC0FFEE;
};
using EquivPolicy = std::variant<Exhaustive, Sampled>;

/// Exhaustive with 16 bits if the signature fits, else Sampled(1024, 0xC0FFEE).
EquivPolicy defaultPolicy(const Function &fn);

struct Equivalent {
  std::uint64_t inputsChecked = 0;
};
struct Counterexample {
  std::vector<IntConst> args;
  std::optional<IntConst> lhs;
  std::optional<IntConst> rhs;
};
using EquivVerdict = std::variant<Equivalent, Counterexample>;

/// Compares `f` and `g` of one module on the inputs selected by `policy`.
/// Exhaustive enumeration counts with the last argument varying fastest.
/// Throws PolicyInfeasible, or ConfigError when the signatures differ.
EquivVerdict checkEquiv(const Module &module, std::string_view f,
                        std::string_view g, const EquivPolicy &policy,
                        std::uint64_t fuel = kDefaultFuel);

} // namespace holeir

#endif // HOLEIR_INTERP_H_
