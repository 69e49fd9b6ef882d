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

#include "holeir/interp.h"

#include <unordered_map>
#include <unordered_set>

#include "holeir/error.h"
#include "holeir/holes.h"

namespace holeir {

IntConst evalBinary(Opcode op, const IntConst &lhs, const IntConst &rhs) {
  if (lhs.type != rhs.type)
    throw Error(ErrorCode::InvalidArgument,
                "operands of " + std::string(opcodeName(op)) +
                    " have different types");
  const unsigned w = lhs.width();
  const Bits a = lhs.bits, b = rhs.bits;
  Bits r = 0;
  switch (op) {
  case Opcode::Add: r = a + b; break;
  case Opcode::Sub: r = a - b; break;
  case Opcode::Mul: r = a * b; break;
  case Opcode::And: r = a & b; break;
  case Opcode::Or: r = a | b; break;
  case Opcode::Xor: r = a ^ b; break;
  case Opcode::Shl: r = b >= w ? 0 : a << static_cast<unsigned>(b); break;
  case Opcode::LShr: r = b >= w ? 0 : a >> static_cast<unsigned>(b); break;
  case Opcode::AShr: {
    SignedBits s = signExtend(a, w);
    if (b >= w)
      r = s < 0 ? ~Bits{0} : 0;
    else
      r = static_cast<Bits>(s >> static_cast<unsigned>(b));
    break;
  }
  default:
    throw Error(ErrorCode::InvalidArgument,
                std::string(opcodeName(op)) + " is not a binary opcode");
  }
  return IntConst{lhs.type, truncate(r, w)};
}

bool evalICmp(ICmpPred pred, const IntConst &lhs, const IntConst &rhs) {
  if (lhs.type != rhs.type)
    throw Error(ErrorCode::InvalidArgument,
                "operands of icmp have different types");
  const Bits a = lhs.bits, b = rhs.bits;
  const SignedBits sa = lhs.toSigned(), sb = rhs.toSigned();
  switch (pred) {
  case ICmpPred::Eq: return a == b;
  case ICmpPred::Ne: return a != b;
  case ICmpPred::Ult: return a < b;
  case ICmpPred::Ule: return a <= b;
  case ICmpPred::Ugt: return a > b;
  case ICmpPred::Uge: return a >= b;
  case ICmpPred::Slt: return sa < sb;
  case ICmpPred::Sle: return sa <= sb;
  case ICmpPred::Sgt: return sa > sb;
  case ICmpPred::Sge: return sa >= sb;
  }
  return false;
}

std::uint64_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

Bits Lcg64::nextBits(unsigned width) {
  Bits out = 0;
  for (unsigned shift = 0; shift < width; shift += 64)
    out |= static_cast<Bits>(next()) << shift;
  return truncate(out, width);
}

namespace {

// Dense value numbering for one function, built on first use.
struct Layout {
  std::unordered_map<const Value *, std::size_t> index;
  std::size_t size = 0;
};

class Machine {
public:
  Machine(const Module &module, std::uint64_t fuel)
      : module_(module), fuel_(fuel) {}

  RunResult call(const Function &entry, std::span<const IntConst> args);

private:
  struct Frame {
    const Function *fn;
    const Layout *layout;
    std::vector<Bits> values;
    const Block *block = nullptr;
    const Block *prev = nullptr;
    std::size_t pc = 0;
    const Instruction *pendingCall = nullptr;
  };

  const Layout &layoutOf(const Function &fn);
  void checkClosed(const Function &fn);
  Bits read(const Frame &frame, const Value *v) const;
  void enter(const Block *target, Frame &frame);
  void tick();

  const Module &module_;
  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
  std::unordered_map<const Function *, Layout> layouts_;
  std::unordered_set<const Function *> checked_;
};

const Layout &Machine::layoutOf(const Function &fn) {
  auto [it, fresh] = layouts_.try_emplace(&fn);
  if (fresh) {
    Layout &l = it->second;
    for (std::size_t i = 0; i < fn.numArgs(); ++i)
      l.index[fn.arg(i)] = l.size++;
    for (const auto &block : fn.blocks())
      for (const auto &inst : block->instructions())
        l.index[inst.get()] = l.size++;
  }
  return it->second;
}

// Rejects holes anywhere in `fn` or in a function it can call. Verified
// modules have no unreachable blocks, so a syntactic scan is exact enough.
void Machine::checkClosed(const Function &root) {
  std::vector<const Function *> work{&root};
  while (!work.empty()) {
    const Function *fn = work.back();
    work.pop_back();
    if (!checked_.insert(fn).second)
      continue;
    if (fn->isDeclaration()) {
      if (isHoleFunction(fn) || isHoleOpFunction(fn))
        throw Error(ErrorCode::UnresolvedHoles,
                    "@" + fn->name() + " is reachable");
      throw Error(ErrorCode::UndefinedFunction,
                  "@" + fn->name() + " has no definition");
    }
    for (const auto &block : fn->blocks())
      for (const auto &inst : block->instructions()) {
        if (inst->type().isHole())
          throw Error(ErrorCode::UnresolvedHoles,
                      "@" + fn->name() + " still contains %hole.t values");
        if (inst->opcode() == Opcode::Call && inst->callee())
          work.push_back(inst->callee());
      }
  }
}

Bits Machine::read(const Frame &frame, const Value *v) const {
  if (v->valueKind() == Value::Kind::Constant)
    return static_cast<const Constant *>(v)->bits();
  return frame.values[frame.layout->index.at(v)];
}

void Machine::tick() {
  if (steps_ >= fuel_)
    throw Error(ErrorCode::FuelExhausted,
                "fuel of " + std::to_string(fuel_) + " steps exhausted");
  ++steps_;
}

void Machine::enter(const Block *target, Frame &frame) {
  frame.prev = frame.block;
  frame.block = target;
  frame.pc = 0;
  // Phis read their incoming values simultaneously on entry.
  const auto &insts = target->instructions();
  std::vector<std::pair<std::size_t, Bits>> updates;
  while (frame.pc < insts.size() && insts[frame.pc]->opcode() == Opcode::Phi) {
    tick();
    const Instruction &phi = *insts[frame.pc];
    bool found = false;
    for (std::size_t i = 0; i < phi.numOperands(); ++i)
      if (phi.blocks()[i] == frame.prev) {
        updates.emplace_back(frame.layout->index.at(&phi),
                             read(frame, phi.operand(i)));
        found = true;
        break;
      }
    if (!found)
      throw Error(ErrorCode::InvalidArgument,
                  "phi has no incoming value for the edge taken");
    ++frame.pc;
  }
  for (auto [slot, bits] : updates)
    frame.values[slot] = bits;
}

RunResult Machine::call(const Function &entry, std::span<const IntConst> args) {
  checkClosed(entry);
  std::vector<Frame> stack;
  auto push = [&](const Function &fn, std::vector<Bits> argBits) {
    const Layout &layout = layoutOf(fn);
    Frame frame{&fn, &layout, std::vector<Bits>(layout.size), nullptr, nullptr,
                0, nullptr};
    for (std::size_t i = 0; i < argBits.size(); ++i)
      frame.values[i] = argBits[i];
    stack.push_back(std::move(frame));
    enter(fn.entry(), stack.back());
  };
  std::vector<Bits> initial;
  for (const IntConst &a : args)
    initial.push_back(a.bits);
  push(entry, std::move(initial));

  while (true) {
    Frame &frame = stack.back();
    const Instruction &inst = *frame.block->instructions()[frame.pc];
    tick();
    auto set = [&](Bits bits) {
      frame.values[frame.layout->index.at(&inst)] = bits;
      ++frame.pc;
    };
    auto operandConst = [&](std::size_t i) {
      const Value *v = inst.operand(i);
      return IntConst{v->type(), read(frame, v)};
    };
    switch (inst.opcode()) {
    case Opcode::ICmp:
      set(evalICmp(inst.predicate(), operandConst(0), operandConst(1)) ? 1 : 0);
      break;
    case Opcode::Select:
      set(read(frame, inst.operand(0)) ? read(frame, inst.operand(1))
                                       : read(frame, inst.operand(2)));
      break;
    case Opcode::Br:
      enter(inst.blocks()[0], frame);
      break;
    case Opcode::CondBr:
      enter(inst.blocks()[read(frame, inst.operand(0)) ? 0 : 1], frame);
      break;
    case Opcode::Call: {
      std::vector<Bits> argBits;
      for (const Value *v : inst.operands())
        argBits.push_back(read(frame, v));
      frame.pendingCall = &inst;
      push(*inst.callee(), std::move(argBits));
      break;
    }
    case Opcode::Ret: {
      std::optional<Bits> result;
      Type type = frame.fn->returnType();
      if (inst.numOperands() == 1 && inst.operand(0))
        result = read(frame, inst.operand(0));
      stack.pop_back();
      if (stack.empty()) {
        RunResult out;
        if (result)
          out.value = IntConst{type, *result};
        out.steps = steps_;
        return out;
      }
      Frame &caller = stack.back();
      const Instruction *site = caller.pendingCall;
      if (result)
        caller.values[caller.layout->index.at(site)] = *result;
      caller.pendingCall = nullptr;
      ++caller.pc;
      break;
    }
    case Opcode::Phi:
      throw Error(ErrorCode::InvalidArgument, "phi after a non-phi instruction");
    default:
      set(evalBinary(inst.opcode(), operandConst(0), operandConst(1)).bits);
      break;
    }
  }
}

const Function &lookupDefinition(const Module &module, std::string_view name) {
  const Function *fn = module.getFunction(name);
  if (!fn)
    throw Error(ErrorCode::UndefinedFunction,
                "no function named @" + std::string(name));
  if (fn->isDeclaration()) {
    if (isHoleFunction(fn) || isHoleOpFunction(fn))
      throw Error(ErrorCode::UnresolvedHoles,
                  "@" + fn->name() + " is a hole, not a definition");
    throw Error(ErrorCode::UndefinedFunction,
                "@" + std::string(name) + " has no definition");
  }
  return *fn;
}

unsigned inputBits(const Function &fn) {
  unsigned total = 0;
  for (Type t : fn.type().params)
    total += t.isInt() ? t.width() : 0;
  return total;
}

} // namespace

RunResult run(const Module &module, std::string_view name,
              std::span<const IntConst> args, std::uint64_t fuel) {
  const Function &fn = lookupDefinition(module, name);
  if (args.size() != fn.numArgs())
    throw Error(ErrorCode::InvalidArgument,
                "@" + fn.name() + " takes " + std::to_string(fn.numArgs()) +
                    " argument(s), got " + std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type != fn.arg(i)->type())
      throw Error(ErrorCode::InvalidArgument,
                  "argument " + std::to_string(i) + " has type " +
                      args[i].type.str() + ", expected " +
                      fn.arg(i)->type().str());
    if (!fitsWidth(args[i].bits, args[i].width()))
      throw Error(ErrorCode::InvalidArgument,
                  "argument " + std::to_string(i) + " does not fit " +
                      args[i].type.str());
  }
  return Machine(module, fuel).call(fn, args);
}

EquivPolicy defaultPolicy(const Function &fn) {
  if (inputBits(fn) <= Exhaustive{}.maxInputBits)
    return Exhaustive{};
  return Sampled{};
}

EquivVerdict checkEquiv(const Module &module, std::string_view f,
                        std::string_view g, const EquivPolicy &policy,
                        std::uint64_t fuel) {
  const Function &fa = lookupDefinition(module, f);
  const Function &fb = lookupDefinition(module, g);
  if (fa.type() != fb.type())
    throw Error(ErrorCode::ConfigError,
                "@" + fa.name() + " is " + fa.type().str() + " but @" +
                    fb.name() + " is " + fb.type().str());

  const std::vector<Type> &params = fa.type().params;
  std::vector<IntConst> args(params.size());
  for (std::size_t i = 0; i < params.size(); ++i)
    args[i].type = params[i];

  auto probe = [&]() -> std::optional<Counterexample> {
    RunResult a = run(module, f, args, fuel);
    RunResult b = run(module, g, args, fuel);
    if (a.value == b.value)
      return std::nullopt;
    return Counterexample{args, a.value, b.value};
  };

  std::uint64_t checked = 0;
  if (const auto *ex = std::get_if<Exhaustive>(&policy)) {
    unsigned bits = inputBits(fa);
    if (bits > ex->maxInputBits || bits >= 64)
      throw Error(ErrorCode::PolicyInfeasible,
                  "exhaustive check needs " + std::to_string(bits) +
                      " input bits, limit is " +
                      std::to_string(ex->maxInputBits));
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t n = 0; n < total; ++n) {
      // The last argument takes the least significant bits.
      std::uint64_t rest = n;
      for (std::size_t i = params.size(); i-- > 0;) {
        unsigned w = params[i].width();
        args[i].bits = rest & ((std::uint64_t{1} << w) - 1);
        rest >>= w;
      }
      if (auto cex = probe())
        return *cex;
      ++checked;
    }
  } else {
    const auto &sampled = std::get<Sampled>(policy);
    Lcg64 rng(sampled.seed);
    for (std::size_t n = 0; n < sampled.count; ++n) {
      for (std::size_t i = 0; i < params.size(); ++i)
        args[i].bits = rng.nextBits(params[i].width());
      if (auto cex = probe())
        return *cex;
      ++checked;
    }
  }
  return Equivalent{checked};
}

} // namespace holeir
