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

#include "holeir/verifier.h"

#include <algorithm>
#include <string>

#include "holeir/dominators.h"
#include "holeir/holes.h"
#include "holeir/textio.h"

namespace holeir {

namespace {

class Verifier {
public:
  explicit Verifier(const Module &module) : module_(module) {}

  std::vector<Diagnostic> run() {
    for (const auto &fn : module_.functions())
      checkTypes(*fn);
    for (const auto &fn : module_.functions())
      checkDominance(*fn);
    for (const auto &fn : module_.functions())
      checkStructure(*fn);
    for (const auto &fn : module_.functions())
      checkHoleConventions(*fn);
    for (const auto &fn : module_.functions())
      checkConstants(*fn);
    return std::move(diags_);
  }

private:
  void report(SourceLoc loc, const Function &fn, const std::string &message) {
    diags_.push_back(Diagnostic{Diagnostic::Severity::Error, loc.line,
                                loc.column, "in @" + fn.name() + ": " + message});
  }

  template <typename F> void forEachInst(const Function &fn, F &&f) {
    for (const auto &block : fn.blocks())
      for (const auto &inst : block->instructions())
        f(*inst);
  }

  void checkTypes(const Function &fn);
  void checkDominance(const Function &fn);
  void checkStructure(const Function &fn);
  void checkHoleConventions(const Function &fn);
  void checkConstants(const Function &fn);

  const Module &module_;
  std::vector<Diagnostic> diags_;
};

void Verifier::checkTypes(const Function &fn) {
  if (fn.isDeclaration())
    return;
  SlotNames names(fn);
  forEachInst(fn, [&](const Instruction &inst) {
    SourceLoc loc = inst.loc();
    for (std::size_t i = 0; i < inst.numOperands(); ++i)
      if (inst.operand(i) == nullptr) {
        report(loc, fn, "operand " + std::to_string(i) + " of " +
                            std::string(opcodeName(inst.opcode())) +
                            " is missing");
        return;
      }
    auto typeOf = [&](std::size_t i) { return inst.operand(i)->type(); };
    auto mismatch = [&](const std::string &what, Type got, Type want) {
      report(loc, fn, what + " has type " + got.str() + ", expected " +
                          want.str());
    };

    switch (inst.opcode()) {
    case Opcode::ICmp:
      if (typeOf(0) != typeOf(1))
        mismatch("second icmp operand " + names.ref(inst.operand(1)), typeOf(1),
                 typeOf(0));
      if (inst.type() != Type::integer(1))
        mismatch("icmp result", inst.type(), Type::integer(1));
      break;
    case Opcode::Select:
      if (typeOf(0) != Type::integer(1))
        mismatch("select condition", typeOf(0), Type::integer(1));
      for (std::size_t i = 1; i < 3; ++i)
        if (typeOf(i) != inst.type())
          mismatch("select operand " + names.ref(inst.operand(i)), typeOf(i),
                   inst.type());
      break;
    case Opcode::Call: {
      const Function *callee = inst.callee();
      if (callee == nullptr) {
        report(loc, fn, "call without a callee");
        break;
      }
      const FunctionType &sig = callee->type();
      if (inst.numOperands() != sig.params.size()) {
        report(loc, fn, "call to @" + callee->name() + " passes " +
                            std::to_string(inst.numOperands()) +
                            " argument(s), signature " + sig.str() + " expects " +
                            std::to_string(sig.params.size()));
        break;
      }
      for (std::size_t i = 0; i < sig.params.size(); ++i)
        if (typeOf(i) != sig.params[i])
          report(loc, fn, "signature mismatch: argument " + std::to_string(i) +
                              " of call to @" + callee->name() + " has type " +
                              typeOf(i).str() + ", but @" + callee->name() +
                              " is declared " + sig.str());
      if (inst.type() != sig.ret)
        report(loc, fn, "signature mismatch: call to @" + callee->name() +
                            " expects a result of type " + inst.type().str() +
                            ", but @" + callee->name() + " is declared " +
                            sig.str());
      break;
    }
    case Opcode::Phi:
      for (std::size_t i = 0; i < inst.numOperands(); ++i)
        if (typeOf(i) != inst.type())
          mismatch("phi incoming value " + names.ref(inst.operand(i)), typeOf(i),
                   inst.type());
      break;
    case Opcode::CondBr:
      if (typeOf(0) != Type::integer(1))
        mismatch("branch condition", typeOf(0), Type::integer(1));
      break;
    case Opcode::Ret:
      if (fn.returnType().isVoid()) {
        if (inst.numOperands() != 0)
          report(loc, fn, "ret with a value in a function returning void");
      } else if (inst.numOperands() == 0) {
        report(loc, fn, "ret void in a function returning " +
                            fn.returnType().str());
      } else if (typeOf(0) != fn.returnType()) {
        mismatch("returned value " + names.ref(inst.operand(0)), typeOf(0),
                 fn.returnType());
      }
      break;
    case Opcode::Br:
      break;
    default: // binary
      for (std::size_t i = 0; i < 2; ++i)
        if (typeOf(i) != inst.type())
          mismatch(std::string(opcodeName(inst.opcode())) + " operand " +
                       names.ref(inst.operand(i)),
                   typeOf(i), inst.type());
      break;
    }
  });
}

void Verifier::checkDominance(const Function &fn) {
  if (fn.isDeclaration())
    return;
  DomTree dom(fn);
  SlotNames names(fn);
  for (const auto &block : fn.blocks()) {
    bool pastPhis = false;
    std::vector<Block *> preds = block->predecessors();
    for (const auto &inst : block->instructions()) {
      SourceLoc loc = inst->loc();
      if (inst->opcode() == Opcode::Phi) {
        if (pastPhis)
          report(loc, fn, "phi " + names.ref(inst.get()) +
                              " is not grouped at the top of its block");
        std::vector<const Block *> seen;
        for (const Block *in : inst->blocks()) {
          if (in == nullptr)
            continue;
          if (std::find(preds.begin(), preds.end(), in) == preds.end())
            report(loc, fn, "phi " + names.ref(inst.get()) + " lists %" +
                                names.label(in) + ", which is not a predecessor");
          else if (std::find(seen.begin(), seen.end(), in) != seen.end())
            report(loc, fn, "phi " + names.ref(inst.get()) + " lists %" +
                                names.label(in) + " twice");
          seen.push_back(in);
        }
        for (const Block *pred : preds)
          if (dom.reachable(pred) &&
              std::find(seen.begin(), seen.end(), pred) == seen.end())
            report(loc, fn, "phi " + names.ref(inst.get()) +
                                " has no entry for predecessor %" +
                                names.label(pred));
      } else {
        pastPhis = true;
      }

      for (std::size_t i = 0; i < inst->numOperands(); ++i) {
        const Value *op = inst->operand(i);
        if (op == nullptr || op->valueKind() == Value::Kind::Constant)
          continue;
        if (definingFunction(op) != &fn) {
          report(loc, fn, "operand " + std::to_string(i) +
                              " refers to a value of another function");
          continue;
        }
        if (inst->opcode() == Opcode::Phi && inst->blocks()[i] == nullptr)
          continue;
        if (!dom.dominatesUse(op, Use{inst.get(), static_cast<unsigned>(i)}))
          report(loc, fn, "use of " + names.ref(op) +
                              " is not dominated by its definition");
      }
    }
  }
}

void Verifier::checkStructure(const Function &fn) {
  if (fn.isDeclaration())
    return;
  DomTree dom(fn);
  SlotNames names(fn);
  for (const auto &block : fn.blocks()) {
    SourceLoc loc = block->loc();
    std::string label = "block %" + names.label(block.get());
    if (block->empty()) {
      report(loc, fn, label + " is empty");
      continue;
    }
    for (const auto &inst : block->instructions()) {
      if (inst->isTerminator() && inst.get() != block->back())
        report(inst->loc(), fn, "terminator in the middle of " + label);
      for (const Block *target : inst->blocks())
        if (target != nullptr && target->parent() != &fn)
          report(inst->loc(), fn, "branch to a block of another function");
      if (inst->opcode() != Opcode::Phi)
        for (const Block *target : inst->blocks())
          if (target == fn.entry())
            report(inst->loc(), fn, "the entry block cannot be a branch target");
    }
    if (!block->back()->isTerminator())
      report(block->back()->loc(), fn, label + " does not end in a terminator");
    if (!dom.reachable(block.get()))
      report(loc, fn, label + " is unreachable from the entry");
  }
}

void Verifier::checkHoleConventions(const Function &fn) {
  SourceLoc loc = fn.loc();
  const std::string &name = fn.name();
  bool hole = isHoleFunction(&fn);
  bool holeOp = isHoleOpFunction(&fn);
  if (isReservedName(name) && !isHoleName(name) && !parseHoleOpName(name))
    report(loc, fn, "the 'hole' prefix is reserved for holes and hole operations");

  if (hole || holeOp) {
    if (!fn.isDeclaration())
      report(loc, fn, "holes and hole operations must be declarations");
  }
  if (hole) {
    if (!fn.returnType().isInt() && !fn.returnType().isHole())
      report(loc, fn, "a hole must produce an integer or %hole.t value");
    if (fn.callers().size() != 1)
      report(loc, fn, "a hole must have exactly one call site, found " +
                          std::to_string(fn.callers().size()));
  } else if (holeOp) {
    FunctionType want = parseHoleOpName(name)->signature();
    if (fn.type() != want)
      report(loc, fn, "hole operation must be declared " + want.str() +
                          ", found " + fn.type().str());
  } else {
    bool holeTyped = fn.returnType().isHole() ||
                     std::any_of(fn.type().params.begin(), fn.type().params.end(),
                                 [](Type t) { return t.isHole(); });
    if (holeTyped)
      report(loc, fn, "%hole.t may only appear in hole and hole-operation signatures");
  }

  if (fn.isDeclaration())
    return;
  SlotNames names(fn);
  forEachInst(fn, [&](const Instruction &inst) {
    bool holeSite = inst.opcode() == Opcode::Call && inst.callee() &&
                    (isHoleFunction(inst.callee()) ||
                     isHoleOpFunction(inst.callee()));
    if (holeSite)
      return;
    bool touchesHole = inst.type().isHole();
    for (const Value *op : inst.operands())
      touchesHole = touchesHole || (op && op->type().isHole());
    if (touchesHole)
      report(inst.loc(), fn,
             std::string(opcodeName(inst.opcode())) +
                 " cannot take or produce %hole.t; only hole and hole-operation "
                 "calls may");
  });
}

void Verifier::checkConstants(const Function &fn) {
  forEachInst(fn, [&](const Instruction &inst) {
    for (const Value *op : inst.operands()) {
      if (op == nullptr || op->valueKind() != Value::Kind::Constant)
        continue;
      const auto *c = static_cast<const Constant *>(op);
      if (!c->type().isInt() || !fitsWidth(c->bits(), c->type().width()))
        report(inst.loc(), fn, "constant does not fit in " + c->type().str());
    }
  });
}

} // namespace

std::vector<Diagnostic> verify(const Module &module) {
  return Verifier(module).run();
}

bool isClosed(const Function &fn) {
  for (const auto &block : fn.blocks())
    for (const auto &inst : block->instructions()) {
      if (inst->type().isHole())
        return false;
      if (inst->opcode() == Opcode::Call && inst->callee() &&
          isReservedName(inst->callee()->name()))
        return false;
    }
  return true;
}

bool isClosed(const Module &module) {
  for (const auto &fn : module.functions()) {
    if (isReservedName(fn->name()))
      return false;
    if (fn->returnType().isHole())
      return false;
    for (Type t : fn->type().params)
      if (t.isHole())
        return false;
    if (!isClosed(*fn))
      return false;
  }
  return true;
}

} // namespace holeir
