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

#include "holeir/holes.h"

#include <algorithm>
#include <cctype>

#include "holeir/dominators.h"
#include "holeir/error.h"
#include "holeir/rewrite.h"
#include "rewrite_internal.h"

namespace holeir {

namespace {

constexpr std::string_view kHolePrefix = "hole";
constexpr std::string_view kHoleOpPrefix = "hole.op.";
constexpr std::string_view kICmpPrefix = "icmp.";

void checkOperand(const Module &module, const Value *value, const char *what) {
  if (!module.contains(value))
    throw Error(ErrorCode::UnknownValue,
                std::string(what) + " does not belong to the module");
  if (!value->type().isInt() && !value->type().isHole())
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be an integer or %hole.t value");
}

void checkAvailable(const DomTree &dom, const Value *value,
                    const Instruction *point, const char *what) {
  if (!dom.dominatesPoint(value, point))
    throw Error(ErrorCode::ScopeError,
                std::string(what) + " is not available at the insertion point");
}

} // namespace

std::string HoleOp::functionName() const {
  std::string name(kHoleOpPrefix);
  if (opcode == Opcode::ICmp)
    return name + std::string(kICmpPrefix) + std::string(predName(pred));
  return name + std::string(opcodeName(opcode));
}

FunctionType HoleOp::signature() const {
  Type ret = opcode == Opcode::ICmp ? Type::integer(1) : Type::hole();
  return FunctionType{ret, {Type::hole(), Type::hole()}};
}

std::optional<HoleOp> parseHoleOpName(std::string_view name) {
  if (!name.starts_with(kHoleOpPrefix))
    return std::nullopt;
  name.remove_prefix(kHoleOpPrefix.size());
  if (name.starts_with(kICmpPrefix)) {
    name.remove_prefix(kICmpPrefix.size());
    if (auto pred = parsePred(name))
      return HoleOp::icmp(*pred);
    return std::nullopt;
  }
  if (auto op = parseOpcode(name); op && isBinaryOp(*op))
    return HoleOp::binary(*op);
  return std::nullopt;
}

bool isHoleName(std::string_view name) {
  if (!name.starts_with(kHolePrefix) || name.size() == kHolePrefix.size())
    return false;
  name.remove_prefix(kHolePrefix.size());
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

bool isReservedName(std::string_view name) {
  return name.starts_with(kHolePrefix);
}

bool isHoleFunction(const Function *fn) {
  return fn && isHoleName(fn->name());
}

bool isHoleOpFunction(const Function *fn) {
  return fn && parseHoleOpName(fn->name()).has_value();
}

bool isHoleCall(const Value *value) {
  if (!value || value->valueKind() != Value::Kind::Instruction)
    return false;
  const auto *inst = static_cast<const Instruction *>(value);
  return inst->opcode() == Opcode::Call && isHoleFunction(inst->callee());
}

bool isHoleOpCall(const Value *value) {
  if (!value || value->valueKind() != Value::Kind::Instruction)
    return false;
  const auto *inst = static_cast<const Instruction *>(value);
  return inst->opcode() == Opcode::Call && isHoleOpFunction(inst->callee());
}

HoleInfo newHole(Module &module, Instruction *insertBefore,
                 std::optional<Type> type, std::span<Value *const> deps) {
  if (!module.contains(insertBefore))
    throw Error(ErrorCode::UnknownValue,
                "insertion point does not belong to the module");
  if (type && !type->isInt())
    throw Error(ErrorCode::InvalidArgument,
                "a typed hole needs an integer type; omit the type for %hole.t");
  DomTree dom(*insertBefore->function());
  FunctionType sig{type.value_or(Type::hole()), {}};
  for (Value *dep : deps) {
    checkOperand(module, dep, "dependency");
    checkAvailable(dom, dep, insertBefore, "dependency");
    sig.params.push_back(dep->type());
  }

  unsigned index = 0;
  while (module.getFunction(std::string(kHolePrefix) + std::to_string(index)))
    ++index;
  std::string name = std::string(kHolePrefix) + std::to_string(index);
  Function *decl = module.addFunction(name, sig, detail::declarationSlot(module));

  Builder builder(module);
  builder.setInsertPoint(insertBefore);
  Instruction *call = builder.call(decl, deps);

  HoleInfo info;
  info.name = name;
  info.declaration = decl;
  info.callSite = call;
  info.declaredType = sig.ret;
  info.deps.assign(deps.begin(), deps.end());
  return info;
}

Value *newHoleOp(Module &module, Instruction *insertBefore, HoleOp op,
                 Value *lhs, Value *rhs) {
  if (!module.contains(insertBefore))
    throw Error(ErrorCode::UnknownValue,
                "insertion point does not belong to the module");
  if (op.opcode != Opcode::ICmp && !isBinaryOp(op.opcode))
    throw Error(ErrorCode::InvalidArgument,
                std::string("no hole operation for ") +
                    std::string(opcodeName(op.opcode)));
  checkOperand(module, lhs, "left operand");
  checkOperand(module, rhs, "right operand");
  {
    DomTree dom(*insertBefore->function());
    checkAvailable(dom, lhs, insertBefore, "left operand");
    checkAvailable(dom, rhs, insertBefore, "right operand");
  }

  TypeClasses classes(module);
  std::optional<Type> lt = classes.resolution(lhs);
  std::optional<Type> rt = classes.resolution(rhs);
  if (lt && rt && *lt != *rt)
    throw TypeConflictError(lt->str(), rt->str(),
                            {"left operand", "right operand"});
  std::optional<Type> concrete = lt ? lt : rt;

  Builder builder(module);
  if (!concrete) {
    std::string name = op.functionName();
    Function *decl = module.getFunction(name);
    if (!decl)
      decl = module.addFunction(name, op.signature(),
                                detail::declarationSlot(module));
    builder.setInsertPoint(insertBefore);
    Value *args[] = {lhs, rhs};
    return builder.call(decl, args);
  }

  // One side is concrete: resolve the other side's class and emit the real
  // instruction.
  bool fromHole = lhs->type().isHole() || rhs->type().isHole();
  for (Value *side : {lhs, rhs})
    if (side->type().isHole())
      classes.resolve(side, *concrete);
  classes.commit();
  detail::Materialized done = detail::materializeAll(module);
  auto current = [&](Value *v) -> Value * {
    auto it = done.replaced.find(v);
    return it == done.replaced.end() ? v : it->second;
  };
  lhs = current(lhs);
  rhs = current(rhs);

  builder.setInsertPoint(insertBefore);
  Instruction *inst = op.opcode == Opcode::ICmp
                          ? builder.icmp(op.pred, lhs, rhs)
                          : builder.binary(op.opcode, lhs, rhs);
  if (op.opcode != Opcode::ICmp) {
    inst->mutateType(*concrete);
    if (fromHole)
      inst->setResolvedType(*concrete);
  }
  return inst;
}

std::vector<HoleInfo> listHoles(const Module &module) {
  TypeClasses classes(module);
  std::vector<HoleInfo> holes;
  for (const auto &fn : module.functions()) {
    if (!isHoleFunction(fn.get()) || !fn->isDeclaration())
      continue;
    HoleInfo info;
    info.name = fn->name();
    info.declaration = fn.get();
    info.declaredType = fn->returnType();
    if (!fn->callers().empty()) {
      info.callSite = fn->callers().front();
      info.deps.assign(info.callSite->operands().begin(),
                       info.callSite->operands().end());
    }
    if (info.declaredType.isInt())
      info.resolvedType = info.declaredType;
    else if (info.callSite)
      info.resolvedType = classes.resolution(info.callSite);
    holes.push_back(std::move(info));
  }
  return holes;
}

std::optional<HoleInfo> findHole(const Module &module, std::string_view name) {
  for (HoleInfo &info : listHoles(module))
    if (info.name == name)
      return std::move(info);
  return std::nullopt;
}

} // namespace holeir
