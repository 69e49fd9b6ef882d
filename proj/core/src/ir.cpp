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

#include "holeir/ir.h"

#include <algorithm>
#include <array>
#include <cassert>

#include "holeir/dominators.h"
#include "holeir/error.h"

namespace holeir {

namespace {

constexpr std::array<std::pair<Opcode, std::string_view>, 16> kOpcodeNames = {{
    {Opcode::Add, "add"},
    {Opcode::Sub, "sub"},
    {Opcode::Mul, "mul"},
    {Opcode::And, "and"},
    {Opcode::Or, "or"},
    {Opcode::Xor, "xor"},
    {Opcode::Shl, "shl"},
    {Opcode::LShr, "lshr"},
    {Opcode::AShr, "ashr"},
    {Opcode::ICmp, "icmp"},
    {Opcode::Select, "select"},
    {Opcode::Call, "call"},
    {Opcode::Phi, "phi"},
    {Opcode::Br, "br"},
    {Opcode::CondBr, "condbr"},
    {Opcode::Ret, "ret"},
}};

constexpr std::array<std::pair<ICmpPred, std::string_view>, 10> kPredNames = {{
    {ICmpPred::Eq, "eq"},
    {ICmpPred::Ne, "ne"},
    {ICmpPred::Ult, "ult"},
    {ICmpPred::Ule, "ule"},
    {ICmpPred::Ugt, "ugt"},
    {ICmpPred::Uge, "uge"},
    {ICmpPred::Slt, "slt"},
    {ICmpPred::Sle, "sle"},
    {ICmpPred::Sgt, "sgt"},
    {ICmpPred::Sge, "sge"},
}};

void removeUse(std::vector<Use> &uses, Use use) {
  auto it = std::find(uses.begin(), uses.end(), use);
  assert(it != uses.end() && "use list out of sync");
  uses.erase(it);
}

std::string describe(const Instruction *inst) {
  std::string s(opcodeName(inst->opcode()));
  if (inst->hasName())
    s = "%" + inst->name() + " (" + s + ")";
  if (const Function *fn = inst->function())
    s += " in @" + fn->name();
  if (inst->loc().line != 0)
    s += " at line " + std::to_string(inst->loc().line);
  return s;
}

} // namespace

std::string_view opcodeName(Opcode op) {
  for (const auto &[code, name] : kOpcodeNames)
    if (code == op)
      return name;
  return "?";
}

std::optional<Opcode> parseOpcode(std::string_view name) {
  for (const auto &[code, text] : kOpcodeNames)
    if (text == name)
      return code;
  return std::nullopt;
}

std::string_view predName(ICmpPred pred) {
  for (const auto &[code, name] : kPredNames)
    if (code == pred)
      return name;
  return "?";
}

std::optional<ICmpPred> parsePred(std::string_view name) {
  for (const auto &[code, text] : kPredNames)
    if (text == name)
      return code;
  return std::nullopt;
}

bool isBinaryOp(Opcode op) {
  return std::find(std::begin(kBinaryOpcodes), std::end(kBinaryOpcodes), op) !=
         std::end(kBinaryOpcodes);
}

bool isTerminator(Opcode op) {
  return op == Opcode::Br || op == Opcode::CondBr || op == Opcode::Ret;
}

//===----------------------------------------------------------------------===//
// Value
//===----------------------------------------------------------------------===//

void Value::setName(std::string name) {
  bool numeric = !name.empty() &&
                 std::all_of(name.begin(), name.end(),
                             [](char c) { return c >= '0' && c <= '9'; });
  name_ = numeric ? std::string() : std::move(name);
}

//===----------------------------------------------------------------------===//
// Instruction
//===----------------------------------------------------------------------===//

Instruction::Instruction(Opcode op, Type type, std::size_t numOperands)
    : Value(Kind::Instruction, type), opcode_(op), operands_(numOperands) {}

Instruction::~Instruction() { dropAllReferences(); }

void Instruction::setOperand(std::size_t i, Value *value) {
  if (Value *prev = operands_[i])
    removeUse(prev->uses_, Use{this, static_cast<unsigned>(i)});
  operands_[i] = value;
  if (value)
    value->uses_.push_back(Use{this, static_cast<unsigned>(i)});
}

void Instruction::setCallee(Function *callee) {
  if (callee_) {
    auto &callers = callee_->callers_;
    callers.erase(std::find(callers.begin(), callers.end(), this));
  }
  callee_ = callee;
  if (callee_)
    callee_->callers_.push_back(this);
}

Function *Instruction::function() const {
  return parent_ ? parent_->parent() : nullptr;
}

void Instruction::dropAllReferences() {
  for (std::size_t i = 0; i < operands_.size(); ++i)
    setOperand(i, nullptr);
  setCallee(nullptr);
}

std::unique_ptr<Instruction> Instruction::createBinary(Opcode op, Value *lhs,
                                                       Value *rhs) {
  assert(isBinaryOp(op));
  std::unique_ptr<Instruction> inst(new Instruction(op, lhs->type(), 2));
  inst->setOperand(0, lhs);
  inst->setOperand(1, rhs);
  return inst;
}

std::unique_ptr<Instruction> Instruction::createICmp(ICmpPred pred, Value *lhs,
                                                     Value *rhs) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::ICmp, Type::integer(1), 2));
  inst->pred_ = pred;
  inst->setOperand(0, lhs);
  inst->setOperand(1, rhs);
  return inst;
}

std::unique_ptr<Instruction> Instruction::createSelect(Value *cond,
                                                       Value *ifTrue,
                                                       Value *ifFalse) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::Select, ifTrue->type(), 3));
  inst->setOperand(0, cond);
  inst->setOperand(1, ifTrue);
  inst->setOperand(2, ifFalse);
  return inst;
}

std::unique_ptr<Instruction>
Instruction::createCall(Function *callee, std::span<Value *const> args) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::Call, callee->returnType(), args.size()));
  for (std::size_t i = 0; i < args.size(); ++i)
    inst->setOperand(i, args[i]);
  inst->setCallee(callee);
  return inst;
}

std::unique_ptr<Instruction>
Instruction::createPhi(Type type,
                       std::span<const std::pair<Value *, Block *>> incoming) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::Phi, type, incoming.size()));
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    inst->setOperand(i, incoming[i].first);
    inst->blocks_.push_back(incoming[i].second);
  }
  return inst;
}

std::unique_ptr<Instruction> Instruction::createBr(Block *target) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::Br, Type::voidTy(), 0));
  inst->blocks_.push_back(target);
  return inst;
}

std::unique_ptr<Instruction>
Instruction::createCondBr(Value *cond, Block *ifTrue, Block *ifFalse) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::CondBr, Type::voidTy(), 1));
  inst->setOperand(0, cond);
  inst->blocks_ = {ifTrue, ifFalse};
  return inst;
}

std::unique_ptr<Instruction> Instruction::createRet(Value *value) {
  std::unique_ptr<Instruction> inst(
      new Instruction(Opcode::Ret, Type::voidTy(), value ? 1 : 0));
  if (value)
    inst->setOperand(0, value);
  return inst;
}

std::unique_ptr<Instruction> Instruction::createRaw(Opcode op, Type type,
                                                    std::size_t numOperands,
                                                    ICmpPred pred) {
  std::unique_ptr<Instruction> inst(new Instruction(op, type, numOperands));
  inst->pred_ = pred;
  return inst;
}

//===----------------------------------------------------------------------===//
// Block
//===----------------------------------------------------------------------===//

void Block::setName(std::string name) {
  bool numeric = !name.empty() &&
                 std::all_of(name.begin(), name.end(),
                             [](char c) { return c >= '0' && c <= '9'; });
  name_ = numeric ? std::string() : std::move(name);
}

Instruction *Block::append(std::unique_ptr<Instruction> inst) {
  return insertBefore(nullptr, std::move(inst));
}

Instruction *Block::insertBefore(Instruction *before,
                                 std::unique_ptr<Instruction> inst) {
  inst->parent_ = this;
  Instruction *raw = inst.get();
  if (before == nullptr) {
    insts_.push_back(std::move(inst));
  } else {
    assert(before->parent() == this);
    insts_.insert(insts_.begin() + static_cast<std::ptrdiff_t>(indexOf(before)),
                  std::move(inst));
  }
  return raw;
}

std::unique_ptr<Instruction> Block::remove(Instruction *inst) {
  auto it = insts_.begin() + static_cast<std::ptrdiff_t>(indexOf(inst));
  std::unique_ptr<Instruction> owned = std::move(*it);
  insts_.erase(it);
  owned->parent_ = nullptr;
  return owned;
}

std::size_t Block::indexOf(const Instruction *inst) const {
  for (std::size_t i = 0; i < insts_.size(); ++i)
    if (insts_[i].get() == inst)
      return i;
  assert(false && "instruction not in block");
  return insts_.size();
}

Instruction *Block::terminator() const {
  if (insts_.empty() || !insts_.back()->isTerminator())
    return nullptr;
  return insts_.back().get();
}

std::vector<Block *> Block::successors() const {
  std::vector<Block *> succs;
  if (Instruction *term = terminator())
    for (Block *b : term->blocks())
      if (std::find(succs.begin(), succs.end(), b) == succs.end())
        succs.push_back(b);
  return succs;
}

std::vector<Block *> Block::predecessors() const {
  std::vector<Block *> preds;
  for (const auto &block : parent_->blocks()) {
    auto succs = block->successors();
    if (std::find(succs.begin(), succs.end(), this) != succs.end())
      preds.push_back(block.get());
  }
  return preds;
}

//===----------------------------------------------------------------------===//
// Function
//===----------------------------------------------------------------------===//

Function::Function(Module *parent, std::string name, FunctionType type)
    : parent_(parent), name_(std::move(name)), type_(std::move(type)) {
  for (std::size_t i = 0; i < type_.params.size(); ++i)
    args_.push_back(std::make_unique<Argument>(this, static_cast<unsigned>(i),
                                               type_.params[i]));
}

void Function::mutateType(FunctionType type) {
  if (type.params.size() != args_.size())
    throw Error(ErrorCode::InvalidArgument,
                "cannot change the arity of @" + name_);
  type_ = std::move(type);
  for (std::size_t i = 0; i < args_.size(); ++i)
    args_[i]->mutateType(type_.params[i]);
}

Block *Function::addBlock(std::string name) {
  blocks_.push_back(std::make_unique<Block>(this, std::string()));
  blocks_.back()->setName(std::move(name));
  return blocks_.back().get();
}

Block *Function::findBlock(std::string_view name) const {
  for (const auto &block : blocks_)
    if (block->name() == name)
      return block.get();
  return nullptr;
}

//===----------------------------------------------------------------------===//
// Module
//===----------------------------------------------------------------------===//

Module::~Module() { destroy(); }

Module::Module(Module &&other) noexcept
    : constants_(std::move(other.constants_)),
      constantIndex_(std::move(other.constantIndex_)),
      functions_(std::move(other.functions_)) {
  reparent();
}

Module &Module::operator=(Module &&other) noexcept {
  if (this != &other) {
    destroy();
    constants_ = std::move(other.constants_);
    constantIndex_ = std::move(other.constantIndex_);
    functions_ = std::move(other.functions_);
    reparent();
  }
  return *this;
}

void Module::reparent() {
  for (auto &fn : functions_)
    fn->parent_ = this;
  for (auto &c : constants_)
    c->owner_ = this;
}

void Module::destroy() {
  for (auto &fn : functions_)
    for (auto &block : fn->blocks_)
      for (auto &inst : block->instructions())
        inst->dropAllReferences();
  functions_.clear();
  constantIndex_.clear();
  constants_.clear();
}

Function *Module::addFunction(std::string name, FunctionType type,
                              std::size_t position) {
  if (getFunction(name))
    throw Error(ErrorCode::InvalidArgument,
                "function @" + name + " already exists");
  for (Type param : type.params)
    if (param.isVoid())
      throw Error(ErrorCode::InvalidArgument,
                  "void parameter in signature of @" + name);
  auto fn = std::make_unique<Function>(this, std::move(name), std::move(type));
  Function *raw = fn.get();
  position = std::min(position, functions_.size());
  functions_.insert(functions_.begin() + static_cast<std::ptrdiff_t>(position),
                    std::move(fn));
  return raw;
}

Function *Module::getFunction(std::string_view name) const {
  for (const auto &fn : functions_)
    if (fn->name() == name)
      return fn.get();
  return nullptr;
}

Constant *Module::constant(Type type, Bits bits) {
  if (!type.isInt())
    throw Error(ErrorCode::InvalidArgument,
                "constants must have integer type, not " + type.str());
  bits = truncate(bits, type.width());
  auto key = std::make_pair(type.width(), bits);
  auto it = constantIndex_.find(key);
  if (it != constantIndex_.end())
    return it->second;
  constants_.push_back(std::make_unique<Constant>(this, type, bits));
  Constant *raw = constants_.back().get();
  constantIndex_.emplace(key, raw);
  return raw;
}

bool Module::contains(const Function *fn) const {
  return fn && fn->parent() == this &&
         std::any_of(functions_.begin(), functions_.end(),
                     [&](const auto &f) { return f.get() == fn; });
}

bool Module::contains(const Value *value) const {
  if (value == nullptr)
    return false;
  switch (value->valueKind()) {
  case Value::Kind::Constant:
    return static_cast<const Constant *>(value)->owner() == this;
  case Value::Kind::Argument:
    return contains(static_cast<const Argument *>(value)->parent());
  case Value::Kind::Instruction: {
    const Function *fn = static_cast<const Instruction *>(value)->function();
    return fn && contains(fn);
  }
  }
  return false;
}

std::vector<Use> Module::usesOf(const Value *value) const {
  if (!contains(value))
    throw Error(ErrorCode::UnknownValue, "value does not belong to the module");
  return value->uses();
}

std::vector<Use> Module::scanUses(const Value *value) const {
  std::vector<Use> uses;
  for (const auto &fn : functions_)
    for (const auto &block : fn->blocks())
      for (const auto &inst : block->instructions())
        for (std::size_t i = 0; i < inst->numOperands(); ++i)
          if (inst->operand(i) == value)
            uses.push_back(Use{inst.get(), static_cast<unsigned>(i)});
  return uses;
}

void Module::replaceAllUsesWith(Value *old, Value *replacement) {
  if (!contains(old) || !contains(replacement))
    throw Error(ErrorCode::UnknownValue, "value does not belong to the module");
  if (old == replacement)
    return;
  if (old->type() != replacement->type())
    throw Error(ErrorCode::TypeMismatch,
                "cannot replace a value of type " + old->type().str() +
                    " with one of type " + replacement->type().str());

  const Function *home = definingFunction(replacement);
  std::unordered_map<const Function *, DomTree> trees;
  for (const Use &use : old->uses()) {
    const Function *fn = use.user->function();
    if (home == nullptr)
      continue;
    if (home != fn)
      throw Error(ErrorCode::ScopeError,
                  "replacement is not visible in @" + fn->name());
    auto it = trees.find(fn);
    if (it == trees.end())
      it = trees.emplace(fn, DomTree(*fn)).first;
    if (!it->second.dominatesUse(replacement, use))
      throw Error(ErrorCode::ScopeError,
                  "replacement does not dominate its use by " +
                      describe(use.user));
  }

  std::vector<Use> uses = old->uses();
  for (const Use &use : uses)
    use.user->setOperand(use.operand, replacement);
}

void Module::erase(Instruction *inst) {
  if (!contains(inst))
    throw Error(ErrorCode::UnknownValue,
                "instruction does not belong to the module");
  if (inst->hasUses()) {
    std::string msg = describe(inst) + " is still used by";
    for (const Use &use : inst->uses())
      msg += " " + describe(use.user) + " (operand " +
             std::to_string(use.operand) + ")";
    throw Error(ErrorCode::StillInUse, msg);
  }
  inst->dropAllReferences();
  inst->parent()->remove(inst);
}

void Module::erase(Function *fn) {
  if (!contains(fn))
    throw Error(ErrorCode::UnknownValue,
                "function does not belong to the module");
  if (!fn->callers().empty()) {
    std::string msg = "@" + fn->name() + " is still called by";
    for (const Instruction *call : fn->callers())
      msg += " " + describe(call);
    throw Error(ErrorCode::StillInUse, msg);
  }
  for (auto &block : fn->blocks_)
    for (auto &inst : block->instructions())
      inst->dropAllReferences();
  functions_.erase(std::find_if(functions_.begin(), functions_.end(),
                                [&](const auto &f) { return f.get() == fn; }));
}

Module Module::clone(CloneMap *map) const {
  CloneMap local;
  CloneMap &m = map ? *map : local;
  Module copy;

  for (const auto &c : constants_)
    m.values[c.get()] = copy.constant(c->type(), c->bits());

  for (const auto &fn : functions_) {
    Function *nf = copy.addFunction(fn->name(), fn->type());
    nf->setLoc(fn->loc());
    m.functions[fn.get()] = nf;
    for (std::size_t i = 0; i < fn->numArgs(); ++i) {
      Argument *na = nf->arg(i);
      na->setName(fn->arg(i)->name());
      na->setResolvedType(fn->arg(i)->resolvedType());
      m.values[fn->arg(i)] = na;
    }
    for (const auto &block : fn->blocks()) {
      Block *nb = nf->addBlock(block->name());
      nb->setLoc(block->loc());
      m.blocks[block.get()] = nb;
      for (const auto &inst : block->instructions()) {
        std::unique_ptr<Instruction> ni(
            new Instruction(inst->opcode(), inst->type(), inst->numOperands()));
        ni->pred_ = inst->pred_;
        ni->blocks_ = inst->blocks_;
        ni->setName(inst->name());
        ni->setResolvedType(inst->resolvedType());
        ni->setLoc(inst->loc());
        m.values[inst.get()] = nb->append(std::move(ni));
      }
    }
  }

  for (const auto &fn : functions_)
    for (const auto &block : fn->blocks())
      for (const auto &inst : block->instructions()) {
        auto *ni = static_cast<Instruction *>(m.values.at(inst.get()));
        for (std::size_t i = 0; i < inst->numOperands(); ++i)
          ni->setOperand(i, m.lookup(inst->operand(i)));
        for (std::size_t i = 0; i < ni->blocks_.size(); ++i)
          ni->blocks_[i] = m.lookup(inst->blocks_[i]);
        if (inst->callee())
          ni->setCallee(m.lookup(inst->callee()));
      }
  return copy;
}

Function *definingFunction(const Value *value) {
  switch (value->valueKind()) {
  case Value::Kind::Argument:
    return static_cast<const Argument *>(value)->parent();
  case Value::Kind::Instruction:
    return static_cast<const Instruction *>(value)->function();
  case Value::Kind::Constant:
    return nullptr;
  }
  return nullptr;
}

//===----------------------------------------------------------------------===//
// Builder
//===----------------------------------------------------------------------===//

void Builder::setInsertPoint(Block *block) {
  block_ = block;
  before_ = nullptr;
}

void Builder::setInsertPoint(Instruction *inst) {
  block_ = inst->parent();
  before_ = inst;
}

Instruction *Builder::insert(std::unique_ptr<Instruction> inst,
                             std::string name) {
  assert(block_ && "no insertion point");
  inst->setName(std::move(name));
  return block_->insertBefore(before_, std::move(inst));
}

Instruction *Builder::binary(Opcode op, Value *lhs, Value *rhs,
                             std::string name) {
  return insert(Instruction::createBinary(op, lhs, rhs), std::move(name));
}

Instruction *Builder::icmp(ICmpPred pred, Value *lhs, Value *rhs,
                           std::string name) {
  return insert(Instruction::createICmp(pred, lhs, rhs), std::move(name));
}

Instruction *Builder::select(Value *cond, Value *ifTrue, Value *ifFalse,
                             std::string name) {
  return insert(Instruction::createSelect(cond, ifTrue, ifFalse),
                std::move(name));
}

Instruction *Builder::call(Function *callee, std::span<Value *const> args,
                           std::string name) {
  return insert(Instruction::createCall(callee, args), std::move(name));
}

Instruction *Builder::phi(Type type,
                          std::span<const std::pair<Value *, Block *>> incoming,
                          std::string name) {
  return insert(Instruction::createPhi(type, incoming), std::move(name));
}

Instruction *Builder::br(Block *target) {
  return insert(Instruction::createBr(target));
}

Instruction *Builder::condBr(Value *cond, Block *ifTrue, Block *ifFalse) {
  return insert(Instruction::createCondBr(cond, ifTrue, ifFalse));
}

Instruction *Builder::ret(Value *value) {
  return insert(Instruction::createRet(value));
}

} // namespace holeir
