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

#ifndef HOLEIR_TYPE_H_
#define HOLEIR_TYPE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace holeir {

/// Raw two's-complement payload of an integer constant. Only the low `width`
/// bits are meaningful; everything above is kept zero.
using Bits = unsigned __int128;
using SignedBits = __int128;

inline constexpr unsigned kMaxIntWidth = 128;

/// Scalar type of the IR: `iN`, `void` or the opaque `%hole.t`.
class Type {
public:
  enum class Kind : std::uint8_t { Int, Void, Hole };

  /// Throws Error(InvalidArgument) unless 1 <= width <= 128.
  static Type integer(unsigned width);
  static Type voidTy() { return Type(Kind::Void, 0); }
  static Type hole() { return Type(Kind::Hole, 0); }

  Kind kind() const { return kind_; }
  unsigned width() const { return width_; }
  bool isInt() const { return kind_ == Kind::Int; }
  bool isVoid() const { return kind_ == Kind::Void; }
  bool isHole() const { return kind_ == Kind::Hole; }

  std::string str() const;

  friend bool operator==(const Type &, const Type &) = default;
  friend auto operator<=>(const Type &, const Type &) = default;

private:
  Type(Kind kind, unsigned width) : kind_(kind), width_(width) {}

  Kind kind_;
  unsigned width_;
};

struct FunctionType {
  Type ret;
  std::vector<Type> params;

  std::string str() const;
  friend bool operator==(const FunctionType &, const FunctionType &) = default;
};

Bits maskFor(unsigned width);
inline Bits truncate(Bits bits, unsigned width) { return bits & maskFor(width); }
SignedBits signExtend(Bits bits, unsigned width);
/// Truncates a signed value to `width` bits.
Bits fromSigned(SignedBits value, unsigned width);
bool fitsWidth(Bits bits, unsigned width);
std::string toDecimal(SignedBits value);
std::string toUnsignedDecimal(Bits value);

/// A free-standing integer constant: a type plus its bit pattern. Used by the
/// interpreter, the assignment format and the synthesizer, where values are
/// not owned by any module.
struct IntConst {
  Type type = Type::integer(1);
  Bits bits = 0;

  static IntConst make(unsigned width, SignedBits value) {
    return IntConst{Type::integer(width), fromSigned(value, width)};
  }
  unsigned width() const { return type.width(); }
  SignedBits toSigned() const { return signExtend(bits, type.width()); }
  /// `iN V` with V printed as a signed decimal (i1 as 0 or 1).
  std::string str() const;

  friend bool operator==(const IntConst &, const IntConst &) = default;
};

} // namespace holeir

#endif // HOLEIR_TYPE_H_
