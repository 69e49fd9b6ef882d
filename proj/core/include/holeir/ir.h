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

#ifndef HOLEIR_IR_H_
#define HOLEIR_IR_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holeir/type.h"

namespace holeir {

class Block;
class Function;
class Instruction;
class Module;

/// Position of a construct in the text it was parsed from. Line 0 means the
/// construct was built in memory.
struct SourceLoc {
  unsigned line = 0;
  unsigned column = 0;
};

/// One operand slot referencing a value.
struct Use {
  Instruction *user = nullptr;
  unsigned operand = 0;

  friend bool operator==(const Use &, const Use &) = default;
};

class Value {
public:
  enum class Kind { Argument, Instruction, Constant };

  Value(const Value &) = delete;
  Value &operator=(const Value &) = delete;
  virtual ~Value() = default;

  Kind valueKind() const { return kind_; }
  Type type() const { return type_; }

  /// Names made only of digits are treated as unnamed; the printer numbers
  /// unnamed values itself.
  const std::string &name() const { return name_; }
  bool hasName() const { return !name_.empty(); }
  void setName(std::string name);

  /// Operand slots currently referencing this value, in the order they were
  /// created.
  const std::vector<Use> &uses() const { return uses_; }
  bool hasUses() const { return !uses_.empty(); }

  /// Concrete type recorded by the type-class engine for a slot that was
  /// created as `%hole.t`. Survives materialization, so a value that used to
  /// be a hole can still be recognized as one.
  const std::optional<Type> &resolvedType() const { return resolved_; }
  void setResolvedType(std::optional<Type> ty) { resolved_ = ty; }

  /// Changes the type in place without touching users. Only the rewriter
  /// should need this.
  void mutateType(Type ty) { type_ = ty; }

protected:
  Value(Kind kind, Type type) : kind_(kind), type_(type) {}

private:
  friend class Instruction;

  Kind kind_;
  Type type_;
  std::string name_;
  std::vector<Use> uses_;
  std::optional<Type> resolved_;
};

class Argument : public Value {
public:
  Argument(Function *parent, unsigned index, Type type)
      : Value(Kind::Argument, type), parent_(parent), index_(index) {}

  Function *parent() const { return parent_; }
  unsigned index() const { return index_; }

private:
  Function *parent_;
  unsigned index_;
};

/// Integer constant. Constants are uniqued per module by (type, bits).
class Constant : public Value {
public:
  Constant(Module *owner, Type type, Bits bits)
      : Value(Kind::Constant, type), owner_(owner), bits_(bits) {}

  Bits bits() const { return bits_; }
  SignedBits signedValue() const { return signExtend(bits_, type().width()); }
  IntConst toIntConst() const { return IntConst{type(), bits_}; }
  Module *owner() const { return owner_; }

private:
  friend class Module;

  Module *owner_;
  Bits bits_;
};

enum class Opcode {
  Add,
  Sub,
  Mul,
  And,
  Or,
  Xor,
  Shl,
  LShr,
  AShr,
  ICmp,
  Select,
  Call,
  Phi,
  Br,
  CondBr,
  Ret,
};

enum class ICmpPred { Eq, Ne, Ult, Ule, Ugt, Uge, Slt, Sle, Sgt, Sge };

/// The binary arithmetic/logical opcodes in their fixed enumeration order.
inline constexpr Opcode kBinaryOpcodes[] = {
    Opcode::Add, Opcode::Sub, Opcode::Mul,  Opcode::And, Opcode::Or,
    Opcode::Xor, Opcode::Shl, Opcode::LShr, Opcode::AShr};

inline constexpr ICmpPred kICmpPreds[] = {
    ICmpPred::Eq,  ICmpPred::Ne,  ICmpPred::Ult, ICmpPred::Ule, ICmpPred::Ugt,
    ICmpPred::Uge, ICmpPred::Slt, ICmpPred::Sle, ICmpPred::Sgt, ICmpPred::Sge};

std::string_view opcodeName(Opcode op);
std::optional<Opcode> parseOpcode(std::string_view name);
std::string_view predName(ICmpPred pred);
std::optional<ICmpPred> parsePred(std::string_view name);
bool isBinaryOp(Opcode op);
bool isTerminator(Opcode op);

class Instruction : public Value {
public:
  ~Instruction() override;

  static std::unique_ptr<Instruction> createBinary(Opcode op, Value *lhs,
                                                   Value *rhs);
  static std::unique_ptr<Instruction> createICmp(ICmpPred pred, Value *lhs,
                                                 Value *rhs);
  static std::unique_ptr<Instruction> createSelect(Value *cond, Value *ifTrue,
                                                   Value *ifFalse);
  static std::unique_ptr<Instruction> createCall(Function *callee,
                                                 std::span<Value *const> args);
  static std::unique_ptr<Instruction>
  createPhi(Type type, std::span<const std::pair<Value *, Block *>> incoming);
  static std::unique_ptr<Instruction> createBr(Block *target);
  static std::unique_ptr<Instruction> createCondBr(Value *cond, Block *ifTrue,
                                                   Block *ifFalse);
  /// `value` may be null for `ret void`.
  static std::unique_ptr<Instruction> createRet(Value *value);
  /// Instruction whose operands are all unset; each must be set before the
  /// instruction is used. Meant for parsers.
  static std::unique_ptr<Instruction> createRaw(Opcode op, Type type,
                                                std::size_t numOperands,
                                                ICmpPred pred = ICmpPred::Eq);

  Opcode opcode() const { return opcode_; }
  ICmpPred predicate() const { return pred_; }
  bool isTerminator() const { return holeir::isTerminator(opcode_); }

  std::size_t numOperands() const { return operands_.size(); }
  Value *operand(std::size_t i) const { return operands_[i]; }
  std::span<Value *const> operands() const { return operands_; }
  void setOperand(std::size_t i, Value *value);

  /// Branch targets for br/condbr; incoming blocks (parallel to operands)
  /// for phi.
  std::span<Block *const> blocks() const { return blocks_; }
  void setBlock(std::size_t i, Block *block) { blocks_[i] = block; }
  void setBlocks(std::vector<Block *> blocks) { blocks_ = std::move(blocks); }

  Function *callee() const { return callee_; }
  void setCallee(Function *callee);

  Block *parent() const { return parent_; }
  Function *function() const;

  SourceLoc loc() const { return loc_; }
  void setLoc(SourceLoc loc) { loc_ = loc; }

  /// Unregisters every operand use and the callee link.
  void dropAllReferences();

private:
  friend class Block;
  friend class Module;

  Instruction(Opcode op, Type type, std::size_t numOperands);

  Opcode opcode_;
  ICmpPred pred_ = ICmpPred::Eq;
  std::vector<Value *> operands_;
  std::vector<Block *> blocks_;
  Function *callee_ = nullptr;
  Block *parent_ = nullptr;
  SourceLoc loc_;
};

class Block {
public:
  using InstList = std::vector<std::unique_ptr<Instruction>>;

  Block(Function *parent, std::string name)
      : parent_(parent), name_(std::move(name)) {}
  Block(const Block &) = delete;
  Block &operator=(const Block &) = delete;

  Function *parent() const { return parent_; }
  const std::string &name() const { return name_; }
  void setName(std::string name);

  const InstList &instructions() const { return insts_; }
  bool empty() const { return insts_.empty(); }
  std::size_t size() const { return insts_.size(); }
  Instruction *front() const { return insts_.front().get(); }
  Instruction *back() const { return insts_.back().get(); }

  Instruction *append(std::unique_ptr<Instruction> inst);
  /// Inserts before `before`, which must belong to this block; a null
  /// `before` appends.
  Instruction *insertBefore(Instruction *before,
                            std::unique_ptr<Instruction> inst);
  /// Detaches `inst` without touching its operands or users.
  std::unique_ptr<Instruction> remove(Instruction *inst);

  std::size_t indexOf(const Instruction *inst) const;
  /// The last instruction if it is a terminator, else null.
  Instruction *terminator() const;
  std::vector<Block *> successors() const;
  std::vector<Block *> predecessors() const;

  SourceLoc loc() const { return loc_; }
  void setLoc(SourceLoc loc) { loc_ = loc; }

private:
  Function *parent_;
  std::string name_;
  InstList insts_;
  SourceLoc loc_;
};

class Function {
public:
  Function(Module *parent, std::string name, FunctionType type);
  Function(const Function &) = delete;
  Function &operator=(const Function &) = delete;

  Module *parent() const { return parent_; }
  const std::string &name() const { return name_; }
  const FunctionType &type() const { return type_; }
  Type returnType() const { return type_.ret; }

  /// Replaces the signature in place, retyping the arguments. The parameter
  /// count must stay the same. Call sites are not touched.
  void mutateType(FunctionType type);

  bool isDeclaration() const { return blocks_.empty(); }

  std::size_t numArgs() const { return args_.size(); }
  Argument *arg(std::size_t i) const { return args_[i].get(); }

  const std::vector<std::unique_ptr<Block>> &blocks() const { return blocks_; }
  Block *entry() const { return blocks_.empty() ? nullptr : blocks_.front().get(); }
  Block *addBlock(std::string name = {});
  Block *findBlock(std::string_view name) const;

  /// Call instructions whose callee is this function.
  const std::vector<Instruction *> &callers() const { return callers_; }

  SourceLoc loc() const { return loc_; }
  void setLoc(SourceLoc loc) { loc_ = loc; }

private:
  friend class Instruction;
  friend class Module;

  Module *parent_;
  std::string name_;
  FunctionType type_;
  std::vector<std::unique_ptr<Argument>> args_;
  std::vector<std::unique_ptr<Block>> blocks_;
  std::vector<Instruction *> callers_;
  SourceLoc loc_;
};

/// Correspondence from an original module to its clone.
struct CloneMap {
  std::unordered_map<const Value *, Value *> values;
  std::unordered_map<const Function *, Function *> functions;
  std::unordered_map<const Block *, Block *> blocks;

  template <typename T> T *lookup(const T *original) const;
};

/// Owner of functions and uniqued constants. A module is a single-writer
/// object; distinct modules share no state.
class Module {
public:
  Module() = default;
  ~Module();
  Module(Module &&other) noexcept;
  Module &operator=(Module &&other) noexcept;
  Module(const Module &) = delete;
  Module &operator=(const Module &) = delete;

  const std::vector<std::unique_ptr<Function>> &functions() const {
    return functions_;
  }
  /// Throws Error(InvalidArgument) on a duplicate name. `position` indexes
  /// into functions(); the default appends.
  Function *addFunction(std::string name, FunctionType type,
                        std::size_t position = static_cast<std::size_t>(-1));
  Function *getFunction(std::string_view name) const;

  Constant *constant(Type type, Bits bits);
  Constant *constant(const IntConst &value) {
    return constant(value.type, value.bits);
  }
  Constant *constant(unsigned width, SignedBits value) {
    return constant(IntConst::make(width, value));
  }

  bool contains(const Value *value) const;
  bool contains(const Function *fn) const;

  /// Operand slots currently referencing `value`. Throws UnknownValue when
  /// the value does not belong to this module.
  std::vector<Use> usesOf(const Value *value) const;

  /// Recomputes the uses of `value` by scanning every operand slot. Used to
  /// cross-check the maintained index.
  std::vector<Use> scanUses(const Value *value) const;

  /// Classic same-type replace-all-uses-with. Throws TypeMismatch when the
  /// types differ and ScopeError when `replacement` does not dominate one of
  /// the uses of `old`. Nothing is modified on error.
  void replaceAllUsesWith(Value *old, Value *replacement);

  /// Throws StillInUse if the instruction's result still has users.
  void erase(Instruction *inst);
  /// Throws StillInUse if the function still has call sites.
  void erase(Function *fn);

  Module clone(CloneMap *map = nullptr) const;

private:
  void reparent();
  void destroy();

  std::vector<std::unique_ptr<Constant>> constants_;
  std::map<std::pair<unsigned, Bits>, Constant *> constantIndex_;
  std::vector<std::unique_ptr<Function>> functions_;
};

template <typename T> T *CloneMap::lookup(const T *original) const {
  if (original == nullptr)
    return nullptr;
  if constexpr (std::is_base_of_v<Value, T>) {
    auto it = values.find(original);
    return it == values.end() ? nullptr : static_cast<T *>(it->second);
  } else if constexpr (std::is_same_v<T, Function>) {
    auto it = functions.find(original);
    return it == functions.end() ? nullptr : it->second;
  } else {
    auto it = blocks.find(original);
    return it == blocks.end() ? nullptr : it->second;
  }
}

/// Function that defines `value`, or null for constants.
Function *definingFunction(const Value *value);

/// Convenience builder inserting at a fixed point in a block.
class Builder {
public:
  explicit Builder(Module &module) : module_(module) {}

  /// Subsequent instructions are appended to `block`.
  void setInsertPoint(Block *block);
  /// Subsequent instructions are inserted before `inst`.
  void setInsertPoint(Instruction *inst);

  Module &module() const { return module_; }
  Block *block() const { return block_; }

  Constant *constant(unsigned width, SignedBits value) {
    return module_.constant(width, value);
  }

  Instruction *binary(Opcode op, Value *lhs, Value *rhs, std::string name = {});
  Instruction *icmp(ICmpPred pred, Value *lhs, Value *rhs,
                    std::string name = {});
  Instruction *select(Value *cond, Value *ifTrue, Value *ifFalse,
                      std::string name = {});
  Instruction *call(Function *callee, std::span<Value *const> args,
                    std::string name = {});
  Instruction *phi(Type type,
                   std::span<const std::pair<Value *, Block *>> incoming,
                   std::string name = {});
  Instruction *br(Block *target);
  Instruction *condBr(Value *cond, Block *ifTrue, Block *ifFalse);
  Instruction *ret(Value *value);

  Instruction *insert(std::unique_ptr<Instruction> inst, std::string name = {});

private:
  Module &module_;
  Block *block_ = nullptr;
  Instruction *before_ = nullptr;
};

} // namespace holeir

#endif // HOLEIR_IR_H_
