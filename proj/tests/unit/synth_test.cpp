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

#include <gtest/gtest.h>

#include "holeir/error.h"
#include "holeir/holes.h"
#include "holeir/synth.h"
#include "holeir/textio.h"
#include "holeir/verifier.h"
#include "test_util.h"

namespace holeir {
namespace {

using testing::parseOrDie;

AssignmentSet assignments(std::string_view text) {
  AssignmentParse parsed = parseAssignments(text);
  if (!parsed.ok())
    throw std::runtime_error("bad assignment text");
  return *parsed.assignments;
}

AssignmentError fillError(const Module &m, std::string_view text) {
  try {
    fill(m, assignments(text));
  } catch (const AssignmentError &e) {
    return e;
  }
  ADD_FAILURE() << "fill did not fail";
  return AssignmentError(ErrorCode::InvalidArgument, 0, "");
}

TEST(FillTest, WorkedExample) {
  Module m = parseOrDie(testing::readGolden("worked.ll"));
  const std::string before = printModule(m);
  Module filled = fill(m, assignments(testing::readGolden("worked_assign.txt")));
  EXPECT_EQ(printModule(filled), testing::readGolden("worked_filled.ll"));
  // The input is left alone.
  EXPECT_EQ(printModule(m), before);
}

TEST(FillTest, NamesRefersToTheInputModule) {
  Module m = parseOrDie(testing::readGolden("four_holes.ll"));
  // After @hole0 is gone the printer would renumber; %1 must still mean the
  // original @hole1 call.
  Module filled = fill(m, assignments("@hole0 = i32 4\n@hole2 = i32 %1\n"
                                      "@hole1 = i32 9\n@hole3 = i32 %0\n"));
  EXPECT_EQ(printModule(filled), "define i32 @example() {\nentry:\n"
                                 "  %0 = add i32 4, 9\n  ret i32 %0\n}\n");
  EXPECT_TRUE(verify(filled).empty());
}

TEST(FillTest, PartialFillKeepsOtherHoles) {
  Module m = parseOrDie(testing::readGolden("hole_ops.ll"));
  Module filled = fill(m, assignments("@hole1 = i16 3\n"));
  EXPECT_TRUE(verify(filled).empty()) << printModule(filled);
  EXPECT_EQ(filled.getFunction("hole0")->returnType(), Type::integer(16));
  EXPECT_NE(filled.getFunction("hole2"), nullptr);
  EXPECT_EQ(filled.getFunction("hole1"), nullptr);
  EXPECT_FALSE(isClosed(filled));
}

TEST(FillTest, Errors) {
  Module m = parseOrDie(testing::readGolden("four_holes.ll"));
  AssignmentError e = fillError(m, "@hole0 = i32 1\n@hole9 = i32 1\n");
  EXPECT_EQ(e.code(), ErrorCode::UnknownValue);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(fillError(m, "@hole0 = i32 %nope\n").code(), ErrorCode::UnknownValue);
  EXPECT_EQ(fillError(m, "@hole0 = i8 %1\n").code(), ErrorCode::TypeMismatch);
  EXPECT_EQ(fillError(m, "@hole0 = i8 1\n").code(), ErrorCode::NotAHole);
  AssignmentParse dup = parseAssignments("@hole0 = i32 1\n@hole0 = i32 2\n");
  EXPECT_FALSE(dup.ok());
  ASSERT_EQ(dup.diagnostics.size(), 1u);
  EXPECT_EQ(dup.diagnostics[0].line, 2u);
  EXPECT_EQ(fillError(m, "@hole0 = i32 %4\n").code(), ErrorCode::ScopeError);
  EXPECT_EQ(fillError(m, "@example = i32 1\n").code(), ErrorCode::UnknownValue);

  Module ops = parseOrDie(testing::readGolden("hole_ops.ll"));
  AssignmentError conflict = fillError(ops, "@hole0 = i8 1\n@hole1 = i16 1\n");
  EXPECT_EQ(conflict.code(), ErrorCode::TypeConflict);
  EXPECT_EQ(conflict.line(), 2u);
  EXPECT_NE(std::string(conflict.what()).find("line 2"), std::string::npos);
}

TEST(PoolsTest, Defaults) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("sketch"));
  EXPECT_EQ(pools.constants,
            (std::vector<IntConst>{IntConst::make(4, 0), IntConst::make(4, 1),
                                   IntConst::make(4, -1), IntConst::make(4, 2),
                                   IntConst::make(4, 3)}));
  EXPECT_EQ(pools.opcodes.size(), std::size(kBinaryOpcodes));
  EXPECT_TRUE(pools.operands);

  CandidatePools custom =
      CandidatePools::defaults(*m.getFunction("sketch"), std::vector<SignedBits>{5, 5, -2});
  EXPECT_EQ(custom.constants,
            (std::vector<IntConst>{IntConst::make(4, 5), IntConst::make(4, -2)}));
}

TEST(PoolsTest, CandidateOrder) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  const Function &ands = *m.getFunction("ands");
  CandidatePools pools = CandidatePools::defaults(ands);
  pools.opcodes = {Opcode::Xor, Opcode::And}; // reordered on purpose
  auto lists = enumerateCandidates(m, ands, pools);
  ASSERT_EQ(lists.size(), 1u);
  const auto &list = lists[0];
  ASSERT_EQ(list.size(), 2u + 5u + 2u * 4u);
  EXPECT_EQ(list[0].kind, HoleCandidate::Kind::Operand);
  EXPECT_EQ(list[0].operand, ands.arg(0));
  EXPECT_EQ(list[1].operand, ands.arg(1));
  EXPECT_EQ(list[2].kind, HoleCandidate::Kind::Constant);
  EXPECT_EQ(list[7].kind, HoleCandidate::Kind::Operation);
  EXPECT_EQ(list[7].opcode, Opcode::And);
  EXPECT_EQ(list[11].opcode, Opcode::Xor);
  EXPECT_EQ(list[8].lhsDep, 0u);
  EXPECT_EQ(list[8].rhsDep, 1u);

  pools.operands = false;
  EXPECT_EQ(enumerateCandidates(m, ands, pools)[0].size(), 13u);
}

TEST(SuperoptTest, FindsShiftAmount) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("sketch"));
  SuperoptResult r = superopt(m, "target", "sketch", pools, {});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(printAssignments(r.solution->assignments), "@hole0 = i4 1\n");
  // %x, then 0, then 1.
  EXPECT_EQ(r.candidatesTried, 3u);
  EXPECT_EQ(printFunction(*r.solution->filledModule.getFunction("sketch")),
            "define i4 @sketch(i4 %x) {\nentry:\n  %r = shl i4 %x, 1\n"
            "  ret i4 %r\n}\n");
}

TEST(SuperoptTest, FindsOperation) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("ands"));
  SuperoptResult r = superopt(m, "andt", "ands", pools, {});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(printAssignments(r.solution->assignments),
            "@hole1 = i4 %hole1.val\n");
  // 2 operands, 5 constants, 12 add/sub/mul pairs, and(x, x), and(x, y).
  EXPECT_EQ(r.candidatesTried, 21u);
  EXPECT_EQ(printFunction(*r.solution->filledModule.getFunction("ands")),
            "define i4 @ands(i4 %x, i4 %y) {\nentry:\n"
            "  %hole1.val = and i4 %x, %y\n  ret i4 %hole1.val\n}\n");
  // %hole1.val only exists in the filled module, which is self-contained.
  EXPECT_TRUE(verify(r.solution->filledModule).empty());
  EXPECT_TRUE(isClosed(*r.solution->filledModule.getFunction("ands")));
}

TEST(SuperoptTest, BudgetAndSeeds) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("sketch"));
  SynthConfig tight;
  tight.maxCandidates = 2;
  SuperoptResult r = superopt(m, "target", "sketch", pools, tight);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.candidatesTried, 2u);

  pools.constants = {IntConst::make(4, 0)};
  r = superopt(m, "target", "sketch", pools, {});
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.candidatesTried, 2u); // exhausted

  CandidatePools all = CandidatePools::defaults(*m.getFunction("ands"));
  SynthConfig seeded;
  seeded.orderSeed = 42;
  SuperoptResult a = superopt(m, "andt", "ands", all, seeded);
  SuperoptResult b = superopt(m, "andt", "ands", all, seeded);
  ASSERT_TRUE(a.found());
  ASSERT_TRUE(b.found());
  EXPECT_EQ(a.candidatesTried, b.candidatesTried);
  EXPECT_EQ(printAssignments(a.solution->assignments),
            printAssignments(b.solution->assignments));
}

TEST(SuperoptTest, ConfigErrors) {
  Module m = parseOrDie(testing::readGolden("superopt.ll"));
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("sketch"));
  auto code = [&](std::string_view t, std::string_view s, SynthConfig cfg = {}) {
    try {
      superopt(m, t, s, pools, cfg);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code("missing", "sketch"), ErrorCode::ConfigError);
  EXPECT_EQ(code("target", "hole0"), ErrorCode::ConfigError);
  EXPECT_EQ(code("andt", "sketch"), ErrorCode::ConfigError);
  EXPECT_EQ(code("sketch", "target"), ErrorCode::ConfigError);
  EXPECT_EQ(code("target", "target"), ErrorCode::ConfigError);
  SynthConfig zero;
  zero.maxCandidates = 0;
  EXPECT_EQ(code("target", "sketch", zero), ErrorCode::ConfigError);
  SynthConfig wide;
  wide.policy = Exhaustive{2};
  EXPECT_EQ(code("target", "sketch", wide), ErrorCode::PolicyInfeasible);
}

TEST(SuperoptTest, UntypedSketchBuiltThroughTheApi) {
  Module m = parseOrDie("define i4 @target(i4 %x) {\nentry:\n"
                        "  %r = mul i4 %x, 2\n  ret i4 %r\n}\n\n"
                        "define i4 @sketch(i4 %x) {\nentry:\n  ret i4 %x\n}\n");
  Function *sk = m.getFunction("sketch");
  Instruction *ret = sk->entry()->back();
  HoleInfo h = newHole(m, ret, std::nullopt, {});
  Value *shifted = newHoleOp(m, ret, HoleOp::binary(Opcode::Shl), sk->arg(0),
                             h.callSite);
  ret->setOperand(0, shifted);
  ASSERT_TRUE(verify(m).empty()) << printModule(m);
  CandidatePools pools = CandidatePools::defaults(*sk);
  SuperoptResult r = superopt(m, "target", "sketch", pools, {});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(printAssignments(r.solution->assignments), "@hole0 = i4 1\n");
}

} // namespace
} // namespace holeir
