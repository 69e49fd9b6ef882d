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

#include "holeir/type.h"

#include <algorithm>

#include "holeir/error.h"

namespace holeir {

Type Type::integer(unsigned width) {
  if (width < 1 || width > kMaxIntWidth)
    throw Error(ErrorCode::InvalidArgument,
                "integer width " + std::to_string(width) +
                    " outside [1, 128]");
  return Type(Kind::Int, width);
}

std::string Type::str() const {
  switch (kind_) {
  case Kind::Int:
    return "i" + std::to_string(width_);
  case Kind::Void:
    return "void";
  case Kind::Hole:
    return "%hole.t";
  }
  return "?";
}

std::string FunctionType::str() const {
  std::string s = ret.str() + " (";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      s += ", ";
    s += params[i].str();
  }
  return s + ")";
}

Bits maskFor(unsigned width) {
  if (width >= 128)
    return ~Bits(0);
  return (Bits(1) << width) - 1;
}

SignedBits signExtend(Bits bits, unsigned width) {
  bits = truncate(bits, width);
  if (width < 128 && ((bits >> (width - 1)) & 1))
    bits |= ~maskFor(width);
  return static_cast<SignedBits>(bits);
}

Bits fromSigned(SignedBits value, unsigned width) {
  return truncate(static_cast<Bits>(value), width);
}

bool fitsWidth(Bits bits, unsigned width) {
  return (bits & ~maskFor(width)) == 0;
}

std::string toUnsignedDecimal(Bits value) {
  if (value == 0)
    return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string toDecimal(SignedBits value) {
  if (value < 0)
    return "-" + toUnsignedDecimal(Bits(0) - static_cast<Bits>(value));
  return toUnsignedDecimal(static_cast<Bits>(value));
}

std::string IntConst::str() const {
  // i1 reads as a truth value, so it is shown unsigned.
  if (type.width() == 1)
    return type.str() + " " + toUnsignedDecimal(bits);
  return type.str() + " " + toDecimal(toSigned());
}

} // namespace holeir
