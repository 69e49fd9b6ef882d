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
#include "holeir/textio.h"
#include "holeir/verifier.h"
#include "test_util.h"

namespace holeir {
namespace {

using testing::parseOrDie;
using testing::valueNamed;

template <typename F> ErrorCode codeOf(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(HoleNamesTest, Classification) {
  EXPECT_TRUE(isHoleName("hole0"));
  EXPECT_TRUE(isHoleName("hole17"));
  EXPECT_FALSE(isHoleName("hole"));
  EXPECT_FALSE(isHoleName("holex"));
  EXPECT_FALSE(isHoleName("hole.op.add"));
  EXPECT_TRUE(isReservedName("hole.op.add"));
  EXPECT_TRUE(isReservedName("holey"));
  EXPECT_FALSE(isReservedName("whole"));
}

TEST(HoleNamesTest, HoleOpNamesRoundTrip) {
  for (Opcode op : kBinaryOpcodes) {
    HoleOp h = HoleOp::binary(op);
    EXPECT_EQ(parseHoleOpName(h.functionName()), h);
    EXPECT_TRUE(h.signature().ret.isHole());
  }
  for (ICmpPred p : kICmpPreds) {
    HoleOp h = HoleOp::icmp(p);
    EXPECT_EQ(parseHoleOpName(h.functionName()), h);
    EXPECT_EQ(h.signature().ret, Type::integer(1));
  }
  EXPECT_EQ(HoleOp::icmp(ICmpPred::Slt).functionName(), "hole.op.icmp.slt");
  EXPECT_FALSE(parseHoleOpName("hole.op.select"));
  EXPECT_FALSE(parseHoleOpName("hole.op.icmp.foo"));
  EXPECT_FALSE(parseHoleOpName("hole.op.icmp"));
}

TEST(NewHoleTest, BuildsTheFourHoleExample) {
  Module m;
  Function *f = m.addFunction("example", {Type::integer(32), {}});
  Block *entry = f->addBlock("entry");
  Builder b(m);
  b.setInsertPoint(entry);
  Instruction *ret = b.ret(m.constant(32, 0));

  HoleInfo h0 = newHole(m, ret, Type::integer(32), {});
  HoleInfo h1 = newHole(m, ret, Type::integer(32), {});
  HoleInfo h2 = newHole(m, ret, Type::integer(32), {});
  Value *deps[] = {h1.callSite, h2.callSite};
  HoleInfo h3 = newHole(m, ret, std::nullopt, deps);
  EXPECT_EQ(h0.name, "hole0");
  EXPECT_EQ(h3.name, "hole3");
  EXPECT_TRUE(h3.declaredType.isHole());
  EXPECT_EQ(h3.deps.size(), 2u);

  b.setInsertPoint(ret);
  Instruction *sum = b.binary(Opcode::Add, h0.callSite, h1.callSite);
  ret->setOperand(0, sum);

  EXPECT_EQ(printModule(m), testing::readGolden("four_holes.ll"));
  EXPECT_TRUE(verify(m).empty());
}

TEST(NewHoleTest, PicksSmallestFreeIndex) {
  Module m = parseOrDie("declare i8 @hole0()\ndeclare i8 @hole2()\n\n"
                        "define i8 @f() {\nentry:\n  %a = call i8 @hole0()\n"
                        "  %b = call i8 @hole2()\n  ret i8 %a\n}\n");
  Instruction *ret = m.getFunction("f")->entry()->back();
  EXPECT_EQ(newHole(m, ret, Type::integer(8), {}).name, "hole1");
  EXPECT_EQ(newHole(m, ret, Type::integer(8), {}).name, "hole3");
  EXPECT_TRUE(verify(m).empty());
}

TEST(NewHoleTest, RejectsBadRequestsWithoutChanges) {
  Module m = parseOrDie(testing::readGolden("diamond.ll"));
  Module other = parseOrDie(testing::readGolden("diamond.ll"));
  const std::string before = printModule(m);
  Function *f = m.getFunction("max");
  Instruction *cmp = f->entry()->front();
  Instruction *ret = f->findBlock("join")->back();

  EXPECT_EQ(codeOf([&] { newHole(m, ret, Type::voidTy(), {}); }),
            ErrorCode::InvalidArgument);
  Value *foreign[] = {valueNamed(other, "max", "a")};
  EXPECT_EQ(codeOf([&] { newHole(m, ret, std::nullopt, foreign); }),
            ErrorCode::UnknownValue);
  // %m is defined after the compare, so it cannot feed a hole placed there.
  Value *late[] = {valueNamed(m, "max", "m")};
  EXPECT_EQ(codeOf([&] { newHole(m, cmp, std::nullopt, late); }),
            ErrorCode::ScopeError);
  EXPECT_EQ(printModule(m), before);

  // Arguments are in scope everywhere.
  Value *args[] = {f->arg(0), f->arg(1)};
  HoleInfo h = newHole(m, ret, Type::integer(32), args);
  EXPECT_EQ(h.callSite->parent(), f->findBlock("join"));
  EXPECT_TRUE(verify(m).empty());
}

TEST(NewHoleOpTest, UntypedOperandsShareOneDeclaration) {
  Module m = parseOrDie("define i32 @f(i32 %x) {\nentry:\n  ret i32 %x\n}\n");
  Instruction *ret = m.getFunction("f")->entry()->back();
  Value *a = newHole(m, ret, std::nullopt, {}).callSite;
  Value *b = newHole(m, ret, std::nullopt, {}).callSite;
  Value *s1 = newHoleOp(m, ret, HoleOp::binary(Opcode::Add), a, b);
  Value *s2 = newHoleOp(m, ret, HoleOp::binary(Opcode::Add), s1, a);
  Value *c = newHoleOp(m, ret, HoleOp::icmp(ICmpPred::Ult), s2, b);
  EXPECT_TRUE(s1->type().isHole());
  EXPECT_TRUE(isHoleOpCall(s2));
  EXPECT_EQ(c->type(), Type::integer(1));
  ASSERT_NE(m.getFunction("hole.op.add"), nullptr);
  EXPECT_EQ(m.getFunction("hole.op.add")->callers().size(), 2u);
  EXPECT_NE(m.getFunction("hole.op.icmp.ult"), nullptr);
  EXPECT_TRUE(verify(m).empty());
}

TEST(NewHoleOpTest, ConcreteSideResolvesTheClass) {
  Module m = parseOrDie("declare %hole.t @hole0()\n\n"
                        "define i32 @f(i32 %x) {\nentry:\n"
                        "  %h = call %hole.t @hole0()\n  ret i32 %x\n}\n");
  Instruction *ret = m.getFunction("f")->entry()->back();
  Value *r = newHoleOp(m, ret, HoleOp::binary(Opcode::Add),
                       valueNamed(m, "f", "h"), m.getFunction("f")->arg(0));
  EXPECT_EQ(r->type(), Type::integer(32));
  EXPECT_EQ(printModule(m), "declare i32 @hole0()\n\n"
                            "define i32 @f(i32 %x) {\nentry:\n"
                            "  %h = call i32 @hole0()\n"
                            "  %0 = add i32 %h, %x\n  ret i32 %x\n}\n");
  EXPECT_TRUE(verify(m).empty());
  // The hole remembers that it used to be untyped.
  EXPECT_EQ(valueNamed(m, "f", "h")->resolvedType(), Type::integer(32));
}

TEST(NewHoleOpTest, ResolutionSpreadsThroughEarlierOps) {
  Module m = parseOrDie(testing::readGolden("hole_ops.ll"));
  Function *f = m.getFunction("f");
  Instruction *ret = f->entry()->back();
  // %a, %b and %s are one class; tying %b to %x fixes all three.
  newHoleOp(m, ret, HoleOp::binary(Opcode::Xor), valueNamed(m, "f", "b"),
            f->arg(0));
  EXPECT_TRUE(verify(m).empty()) << printModule(m);
  EXPECT_EQ(m.getFunction("hole0")->returnType(), Type::integer(32));
  EXPECT_EQ(m.getFunction("hole1")->returnType(), Type::integer(32));
  EXPECT_EQ(m.getFunction("hole2")->type().params[0], Type::integer(32));
  EXPECT_EQ(m.getFunction("hole.op.add"), nullptr);
  EXPECT_EQ(m.getFunction("hole.op.icmp.slt"), nullptr);
  EXPECT_EQ(valueNamed(m, "f", "s")->type(), Type::integer(32));
}

TEST(NewHoleOpTest, Conflicts) {
  Module m = parseOrDie("declare %hole.t @hole0()\n\n"
                        "define i32 @f(i32 %x, i8 %y) {\nentry:\n"
                        "  %h = call %hole.t @hole0()\n  ret i32 %x\n}\n");
  Function *f = m.getFunction("f");
  Instruction *ret = f->entry()->back();
  EXPECT_EQ(codeOf([&] {
              newHoleOp(m, ret, HoleOp::binary(Opcode::Add), f->arg(0),
                        f->arg(1));
            }),
            ErrorCode::TypeConflict);
  Value *h = valueNamed(m, "f", "h");
  newHoleOp(m, ret, HoleOp::binary(Opcode::Add), h, f->arg(0));
  const std::string before = printModule(m);
  try {
    newHoleOp(m, ret, HoleOp::binary(Opcode::Sub), h, f->arg(1));
    ADD_FAILURE() << "expected a conflict";
  } catch (const TypeConflictError &e) {
    EXPECT_EQ(e.expected(), "i32");
    EXPECT_EQ(e.found(), "i8");
  }
  EXPECT_EQ(printModule(m), before);
  EXPECT_EQ(codeOf([&] {
              newHoleOp(m, ret, HoleOp::binary(Opcode::Select), h, h);
            }),
            ErrorCode::InvalidArgument);
}

TEST(ListHolesTest, ReportsDeclarationsAndResolution) {
  Module m = parseOrDie(testing::readGolden("four_holes.ll"));
  std::vector<HoleInfo> holes = listHoles(m);
  ASSERT_EQ(holes.size(), 4u);
  EXPECT_EQ(holes[0].name, "hole0");
  EXPECT_EQ(holes[0].resolvedType, Type::integer(32));
  EXPECT_TRUE(holes[3].declaredType.isHole());
  EXPECT_FALSE(holes[3].resolvedType);
  ASSERT_EQ(holes[3].deps.size(), 2u);
  EXPECT_EQ(holes[3].deps[0], holes[1].callSite);
  EXPECT_EQ(holes[3].deps[1], holes[2].callSite);

  Module ops = parseOrDie(testing::readGolden("hole_ops.ll"));
  EXPECT_EQ(listHoles(ops).size(), 3u); // hole-ops are not holes
  EXPECT_FALSE(findHole(ops, "hole0")->resolvedType);
  EXPECT_EQ(findHole(ops, "hole2")->resolvedType, Type::integer(32));
  EXPECT_FALSE(findHole(ops, "hole9"));
}

} // namespace
} // namespace holeir
