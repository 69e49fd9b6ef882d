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

#include "holeir/holes.h"
#include "holeir/textio.h"
#include "holeir/verifier.h"
#include "random_modules.h"
#include "test_util.h"

namespace holeir {
namespace {

using testing::parseOrDie;
using testing::readGolden;

TEST(ParseTest, TypedHoleDeclaration) {
  Module m = parseOrDie("declare i32 @hole0()\n");
  ASSERT_EQ(m.functions().size(), 1u);
  const Function &f = *m.functions()[0];
  EXPECT_TRUE(f.isDeclaration());
  EXPECT_EQ(f.type(), (FunctionType{Type::integer(32), {}}));
}

TEST(ParseTest, DependencyHoleDeclaration) {
  Module m = parseOrDie("declare %hole.t @hole2(i32, i32)\n");
  const Function &f = *m.getFunction("hole2");
  EXPECT_TRUE(f.returnType().isHole());
  EXPECT_EQ(f.type().params,
            (std::vector<Type>{Type::integer(32), Type::integer(32)}));
}

TEST(ParseTest, SelfUseIsSyntacticallyFine) {
  ModuleParse p = parseModule("define i32 @f() {\nentry:\n  %x = add i32 %x, 1\n"
                              "  ret i32 %x\n}\n");
  ASSERT_TRUE(p.ok());
  std::vector<Diagnostic> diags = verify(*p.module);
  ASSERT_FALSE(diags.empty());
  EXPECT_NE(diags[0].message.find("dominate"), std::string::npos)
      << diags[0].message;
}

TEST(ParseTest, DiagnosticsPointAtTheToken) {
  ModuleParse p = parseModule("define i32 @f(i32 %a) {\nentry:\n"
                              "  %b = frob i32 %a, 1\n  ret i32 %zz\n}\n");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 2u);
  EXPECT_EQ(p.diagnostics[0].line, 3u);
  EXPECT_EQ(p.diagnostics[0].column, 8u);
  EXPECT_EQ(p.diagnostics[1].line, 4u);
  EXPECT_EQ(p.diagnostics[1].column, 11u);
  EXPECT_EQ(p.diagnostics[1].format("x.ll"),
            "x.ll:4:11: error: use of undefined value '%zz'");
}

TEST(ParseTest, RecoversAtNextFunction) {
  ModuleParse p = parseModule("define i32 @f( {\n  ret i32 0\n}\n\n"
                              "define i32 @g() {\n  ret i32 %nope\n}\n");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 2u);
  EXPECT_EQ(p.diagnostics[1].line, 6u);
}

TEST(ParseTest, RejectsBadTypesAndLiterals) {
  EXPECT_FALSE(parseModule("declare i0 @f()\n").ok());
  EXPECT_FALSE(parseModule("declare i129 @f()\n").ok());
  EXPECT_FALSE(parseModule("declare i8 @f(void)\n").ok());
  EXPECT_FALSE(parseModule("define i8 @f() {\n  ret i8 "
                           "999999999999999999999999999999999999999999\n}\n")
                   .ok());
  EXPECT_FALSE(parseModule("define i8 @f() {\n  ret i8 true\n}\n").ok());
  EXPECT_FALSE(parseModule("define i8 @f(i8 %a, i8 %a) {\n  ret i8 %a\n}\n").ok());
}

TEST(ParseTest, LiteralsAreTruncated) {
  Module m = parseOrDie("define i8 @f() {\nentry:\n  ret i8 300\n}\n");
  EXPECT_NE(printModule(m).find("ret i8 44"), std::string::npos);
}

TEST(PrintTest, EmptyModuleIsEmptyText) {
  Module m;
  EXPECT_EQ(printModule(m), "");
}

TEST(PrintTest, WorkedExampleOutputListing) {
  Module m = parseOrDie(readGolden("worked_filled.ll"));
  std::string text = printModule(m);
  EXPECT_EQ(text, readGolden("worked_filled.ll"));
  EXPECT_NE(text.find("declare i32 @hole1(i32)\n"), std::string::npos);
}

TEST(PrintTest, CanonicalNumberingAndSpacing) {
  Module m = parseOrDie("define i8 @f(i8 %0, i8 %5) {\n"
                        "  %7 = add i8 %0, %5\n  br label %9\n"
                        "9:\n  ret i8 %7\n}\n");
  EXPECT_EQ(printModule(m), "define i8 @f(i8 %0, i8 %1) {\n"
                            "2:\n  %3 = add i8 %0, %1\n  br label %4\n\n"
                            "4:\n  ret i8 %3\n}\n");
}

TEST(PrintTest, BooleansAndNegatives) {
  Module m = parseOrDie("define i1 @f(i8 %x) {\nentry:\n"
                        "  %c = icmp slt i8 %x, -3\n"
                        "  %d = select i1 %c, i1 true, i1 0\n  ret i1 %d\n}\n");
  std::string text = printModule(m);
  EXPECT_NE(text.find("icmp slt i8 %x, -3"), std::string::npos);
  EXPECT_NE(text.find("select i1 %c, i1 true, i1 false"), std::string::npos);
}

TEST(RoundTripTest, GoldenCorpus) {
  for (const char *name : {"four_holes.ll", "worked.ll", "worked_filled.ll",
                           "hole_ops.ll", "superopt.ll", "diamond.ll",
                           "loop.ll"}) {
    SCOPED_TRACE(name);
    Module m = parseOrDie(readGolden(name));
    std::string once = printModule(m);
    std::string twice = printModule(parseOrDie(once));
    EXPECT_EQ(once, twice);
    EXPECT_TRUE(verify(m).empty());
  }
}

TEST(RoundTripTest, FiftyFunctionModule) {
  testing::Rng rng(50);
  testing::CfgOptions options;
  options.maxFunctions = 1;
  Module big;
  // Concatenate fifty single-function modules by text.
  std::string text;
  for (int i = 0; i < 50; ++i) {
    Module part = testing::randomCfgModule(rng, options);
    std::string p = printModule(part);
    std::string from = "@f0(", to = "@g" + std::to_string(i) + "(";
    for (std::size_t pos = p.find(from); pos != std::string::npos;
         pos = p.find(from, pos + to.size()))
      p.replace(pos, from.size(), to);
    p.erase(0, p.find("define"));
    text += (text.empty() ? "" : "\n") + p;
  }
  text = "declare i8 @ext(i8, i32)\n\n" + text;
  Module m = parseOrDie(text);
  EXPECT_EQ(m.functions().size(), 51u);
  std::string once = printModule(m);
  EXPECT_EQ(printModule(parseOrDie(once)), once);
}

TEST(RoundTripTest, GeneratedModules) {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Module m = i % 2 ? testing::randomCfgModule(rng)
                     : testing::randomHoleModule(rng).module;
    std::string once = printModule(m);
    Module again = parseOrDie(once);
    ASSERT_EQ(printModule(again), once);
  }
}

TEST(AssignmentsTest, ConstantEntry) {
  AssignmentParse p = parseAssignments("@hole0 = i32 5\n");
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p.assignments->entries.size(), 1u);
  const Assignment &a = p.assignments->entries[0];
  EXPECT_EQ(a.hole, "hole0");
  ASSERT_TRUE(a.isConstant());
  EXPECT_EQ(*a.constant, IntConst::make(32, 5));
  EXPECT_EQ(a.line, 1u);
}

TEST(AssignmentsTest, EmptyAndComments) {
  AssignmentParse p = parseAssignments("");
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p.assignments->entries.empty());
  p = parseAssignments("# nothing\n\n   \n");
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p.assignments->entries.empty());
}

TEST(AssignmentsTest, ValueReferences) {
  AssignmentParse p =
      parseAssignments("@hole1 = %x   # untyped\n@hole2 = i8 %3\n@hole3 = i1 true\n");
  ASSERT_TRUE(p.ok());
  const auto &e = p.assignments->entries;
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0].valueRef, "x");
  EXPECT_FALSE(e[0].refType.has_value());
  EXPECT_EQ(e[1].valueRef, "3");
  EXPECT_EQ(e[1].refType, Type::integer(8));
  EXPECT_EQ(e[1].line, 2u);
  EXPECT_EQ(*e[2].constant, IntConst::make(1, 1));
  EXPECT_EQ(printAssignments(*p.assignments),
            "@hole1 = %x\n@hole2 = i8 %3\n@hole3 = i1 true\n");
}

TEST(AssignmentsTest, DuplicateIsDiagnosed) {
  AssignmentParse p = parseAssignments("@hole0 = i32 5\n@hole0 = i32 5\n");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].line, 2u);
  EXPECT_NE(p.diagnostics[0].message.find("duplicate"), std::string::npos);
}

TEST(AssignmentsTest, MalformedLines) {
  AssignmentParse p = parseAssignments("hole0 = i32 5\n@hole1 = 5\n@hole2 i32 5\n");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics.size(), 3u);
}

} // namespace
} // namespace holeir
