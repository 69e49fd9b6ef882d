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

#ifndef HOLEIR_TESTS_SUPPORT_TEST_UTIL_H_
#define HOLEIR_TESTS_SUPPORT_TEST_UTIL_H_

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "holeir/ir.h"
#include "holeir/textio.h"

namespace holeir::testing {

inline Module parseOrDie(std::string_view text) {
  ModuleParse parsed = parseModule(text);
  std::string diags;
  for (const Diagnostic &d : parsed.diagnostics)
    diags += d.format("<input>") + "\n";
  if (!parsed.ok())
    throw std::runtime_error("parse failed:\n" + diags);
  return std::move(*parsed.module);
}

inline std::string readGolden(const std::string &name) {
  std::ifstream in(std::string(HOLEIR_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  if (!in)
    throw std::runtime_error("missing golden file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Looks a value up by its printed name inside function `fn`.
inline Value *valueNamed(const Module &m, std::string_view fn,
                         std::string_view name) {
  const Function *f = m.getFunction(fn);
  if (!f)
    throw std::runtime_error("no function " + std::string(fn));
  Value *v = SlotNames(*f).lookup(name);
  if (!v)
    throw std::runtime_error("no value %" + std::string(name));
  return v;
}

inline Instruction *instNamed(const Module &m, std::string_view fn,
                              std::string_view name) {
  return static_cast<Instruction *>(valueNamed(m, fn, name));
}

} // namespace holeir::testing

#endif // HOLEIR_TESTS_SUPPORT_TEST_UTIL_H_
