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

#include "holeir/rewrite.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "holeir/dominators.h"
#include "holeir/error.h"
#include "holeir/holes.h"
#include "holeir/textio.h"
#include "rewrite_internal.h"

namespace holeir {

// ---------------------------------------------------------------------------
// ClassEngine

ClassEngine::ClassEngine(std::size_t slots) {
  for (std::size_t i = 0; i < slots; ++i)
    addSlot();
}

std::size_t ClassEngine::addSlot() {
  std::size_t id = parent_.size();
  parent_.push_back(id);
  rank_.push_back(0);
  types_.emplace_back();
  own_.push_back(Type::hole());
  annotated_.push_back(false);
  adjacent_.emplace_back();
  return id;
}

std::size_t ClassEngine::root(std::size_t slot) const {
  std::size_t r = slot;
  while (parent_[r] != r)
    r = parent_[r];
  while (parent_[slot] != r) {
    std::size_t next = parent_[slot];
    parent_[slot] = r;
    slot = next;
  }
  return r;
}

std::size_t ClassEngine::find(std::size_t slot) const { return root(slot); }

void ClassEngine::addEdge(std::size_t a, std::size_t b) {
  adjacent_[a].push_back(b);
  adjacent_[b].push_back(a);
  std::size_t ra = root(a), rb = root(b);
  if (ra == rb)
    return;
  if (rank_[ra] < rank_[rb])
    std::swap(ra, rb);
  if (rank_[ra] == rank_[rb])
    ++rank_[ra];
  parent_[rb] = ra;
  for (Type t : types_[rb])
    if (std::find(types_[ra].begin(), types_[ra].end(), t) == types_[ra].end())
      types_[ra].push_back(t);
  types_[rb].clear();
}

void ClassEngine::annotate(std::size_t slot, Type type) {
  own_[slot] = type;
  annotated_[slot] = true;
  auto &types = types_[root(slot)];
  if (std::find(types.begin(), types.end(), type) == types.end())
    types.push_back(type);
}

std::optional<Type> ClassEngine::resolution(std::size_t slot) const {
  const auto &types = types_[root(slot)];
  if (types.size() == 1)
    return types.front();
  return std::nullopt;
}

bool ClassEngine::consistent(std::size_t slot) const {
  return types_[root(slot)].size() <= 1;
}

std::vector<std::size_t> ClassEngine::members(std::size_t slot) const {
  std::size_t r = root(slot);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (root(i) == r)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> ClassEngine::witness(std::size_t from,
                                              Type avoid) const {
  // Breadth-first search for the nearest slot annotated with a type other
  // than `avoid`; the parent links give the shortest edge chain.
  std::vector<std::size_t> prev(parent_.size(), SIZE_MAX);
  std::deque<std::size_t> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (annotated_[cur] && own_[cur] != avoid) {
      std::vector<std::size_t> path{cur};
      while (path.back() != from)
        path.push_back(prev[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t next : adjacent_[cur]) {
      if (prev[next] != SIZE_MAX)
        continue;
      prev[next] = cur;
      queue.push_back(next);
    }
  }
  return {from};
}

std::variant<std::vector<std::size_t>, ClassEngine::Conflict>
ClassEngine::resolve(std::size_t slot, Type type) {
  auto &types = types_[root(slot)];
  for (Type t : types)
    if (t != type)
      return Conflict{type, t, witness(slot, type)};
  if (!types.empty())
    return std::vector<std::size_t>{};
  own_[slot] = type;
  annotated_[slot] = true;
  types.push_back(type);
  return members(slot);
}

// ---------------------------------------------------------------------------
// TypeClasses

TypeClasses::TypeClasses(const Module &module) {
  auto tie = [this](Value *a, Value *b) {
    engine_.addEdge(slotFor(a), slotFor(b));
  };
  for (const auto &fn : module.functions()) {
    if (fn->isDeclaration()) {
      if (isHoleFunction(fn.get()))
        for (std::size_t i = 0; i < fn->numArgs(); ++i)
          if (fn->arg(i)->type().isHole())
            slotFor(fn->arg(i));
      continue;
    }
    for (const auto &block : fn->blocks()) {
      for (const auto &inst : block->instructions()) {
        Instruction *in = inst.get();
        if (in->type().isHole())
          slotFor(in);
        if (in->opcode() != Opcode::Call || !in->callee())
          continue;
        Function *callee = in->callee();
        if (auto op = parseHoleOpName(callee->name());
            op && in->numOperands() == 2) {
          tie(in->operand(0), in->operand(1));
          if (op->opcode != Opcode::ICmp)
            tie(in->operand(0), in);
        } else if (isHoleFunction(callee)) {
          std::size_t n = std::min(in->numOperands(), callee->numArgs());
          for (std::size_t i = 0; i < n; ++i)
            if (callee->arg(i)->type().isHole())
              tie(callee->arg(i), in->operand(i));
        }
      }
    }
  }
}

std::size_t TypeClasses::slotFor(Value *value) {
  if (auto it = index_.find(value); it != index_.end())
    return it->second;
  std::size_t id = engine_.addSlot();
  slots_.push_back(value);
  index_.emplace(value, id);
  if (value->type().isInt())
    engine_.annotate(id, value->type());
  else if (value->resolvedType())
    engine_.annotate(id, *value->resolvedType());
  return id;
}

bool TypeClasses::isSlot(const Value *value) const {
  return index_.count(value) != 0;
}

std::optional<Type> TypeClasses::resolution(const Value *value) const {
  if (auto it = index_.find(value); it != index_.end())
    return engine_.resolution(it->second);
  if (value->type().isInt())
    return value->type();
  return value->resolvedType();
}

std::vector<Value *> TypeClasses::classOf(const Value *value) const {
  std::vector<Value *> out;
  auto it = index_.find(value);
  if (it == index_.end())
    return out;
  for (std::size_t slot : engine_.members(it->second))
    if (slots_[slot]->type().isHole())
      out.push_back(slots_[slot]);
  return out;
}

std::string TypeClasses::describe(std::size_t slot) const {
  const Value *value = slots_[slot];
  switch (value->valueKind()) {
  case Value::Kind::Constant: {
    auto *c = static_cast<const Constant *>(value);
    return c->toIntConst().str();
  }
  case Value::Kind::Argument: {
    auto *arg = static_cast<const Argument *>(value);
    const Function *fn = arg->parent();
    if (fn->isDeclaration())
      return "@" + fn->name() + " parameter " + std::to_string(arg->index());
    return SlotNames(*fn).ref(arg) + " in @" + fn->name();
  }
  case Value::Kind::Instruction: {
    auto *inst = static_cast<const Instruction *>(value);
    const Function *fn = inst->function();
    return SlotNames(*fn).ref(inst) + " in @" + fn->name();
  }
  }
  return "?";
}

std::vector<Value *> TypeClasses::resolve(Value *value, Type type) {
  if (!type.isInt())
    throw Error(ErrorCode::InvalidArgument,
                "a class can only resolve to an integer type");
  std::size_t slot = slotFor(value);
  auto result = engine_.resolve(slot, type);
  if (auto *conflict = std::get_if<ClassEngine::Conflict>(&result)) {
    std::vector<std::string> chain;
    for (std::size_t s : conflict->path)
      chain.push_back(describe(s));
    throw TypeConflictError(conflict->expected.str(), conflict->found.str(),
                            std::move(chain));
  }
  std::vector<Value *> out;
  for (std::size_t s : std::get<std::vector<std::size_t>>(result))
    if (slots_[s]->type().isHole())
      out.push_back(slots_[s]);
  return out;
}

void TypeClasses::commit() const {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i]->type().isHole())
      continue;
    if (auto t = engine_.resolution(i))
      slots_[i]->setResolvedType(*t);
  }
}

// ---------------------------------------------------------------------------
// Rewriting

void RewriteReport::append(const RewriteReport &other) {
  replacedCalls += other.replacedCalls;
  redeclaredFunctions.insert(redeclaredFunctions.end(),
                             other.redeclaredFunctions.begin(),
                             other.redeclaredFunctions.end());
  materializedOps.insert(materializedOps.end(), other.materializedOps.begin(),
                         other.materializedOps.end());
  deleted.insert(deleted.end(), other.deleted.begin(), other.deleted.end());
}

namespace detail {

std::size_t declarationSlot(const Module &module) {
  const auto &fns = module.functions();
  std::size_t i = 0;
  while (i < fns.size() && fns[i]->isDeclaration())
    ++i;
  return i;
}

namespace {

std::optional<Type> concreteOf(const Value *value) {
  if (value->type().isInt())
    return value->type();
  return value->resolvedType();
}

std::vector<Function *> snapshot(const Module &module) {
  std::vector<Function *> fns;
  for (const auto &fn : module.functions())
    fns.push_back(fn.get());
  return fns;
}

} // namespace

Materialized materializeAll(Module &module) {
  TypeClasses(module).commit();
  Materialized out;
  std::vector<Function *> fns = snapshot(module);

  for (Function *fn : fns) {
    if (!isHoleFunction(fn) || !fn->isDeclaration())
      continue;
    FunctionType sig = fn->type();
    bool changed = false;
    if (sig.ret.isHole()) {
      for (Instruction *call : fn->callers()) {
        if (auto t = call->resolvedType()) {
          sig.ret = *t;
          changed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < sig.params.size(); ++i) {
      if (!sig.params[i].isHole())
        continue;
      if (auto t = fn->arg(i)->resolvedType()) {
        sig.params[i] = *t;
        changed = true;
      }
    }
    if (!changed)
      continue;
    fn->mutateType(sig);
    for (Instruction *call : fn->callers()) {
      call->mutateType(sig.ret);
      out.retypedCalls.push_back(call);
    }
    out.report.redeclaredFunctions.push_back(fn->name());
  }

  for (Function *fn : fns) {
    std::optional<HoleOp> op = parseHoleOpName(fn->name());
    if (!op)
      continue;
    std::vector<Instruction *> calls = fn->callers();
    for (Instruction *call : calls) {
      if (call->numOperands() != 2)
        continue;
      std::optional<Type> lt = concreteOf(call->operand(0));
      std::optional<Type> rt = concreteOf(call->operand(1));
      if (!lt || !rt || *lt != *rt)
        continue;
      std::unique_ptr<Instruction> inst =
          op->opcode == Opcode::ICmp
              ? Instruction::createICmp(op->pred, call->operand(0),
                                        call->operand(1))
              : Instruction::createBinary(op->opcode, call->operand(0),
                                          call->operand(1));
      if (op->opcode != Opcode::ICmp) {
        inst->mutateType(*lt);
        inst->setResolvedType(*lt);
      }
      inst->setName(call->name());
      inst->setLoc(call->loc());
      Instruction *placed = call->parent()->insertBefore(call, std::move(inst));
      std::vector<Use> uses = call->uses();
      for (const Use &use : uses)
        use.user->setOperand(use.operand, placed);
      // Earlier replacements may point at this call; forward them.
      for (auto &[from, to] : out.replaced)
        if (to == call)
          to = placed;
      out.replaced[call] = placed;
      module.erase(call);
      ++out.report.replacedCalls;
      out.report.materializedOps.emplace_back(
          fn->name(), std::string(opcodeName(op->opcode)));
    }
  }

  for (Function *fn : fns) {
    if (isHoleOpFunction(fn) && fn->isDeclaration() && fn->callers().empty()) {
      out.report.deleted.push_back(fn->name());
      module.erase(fn);
    }
  }
  out.report.replacedCalls += out.retypedCalls.size();
  return out;
}

} // namespace detail

std::vector<Value *> resolveClass(Module &module, Value *slot, Type type) {
  if (!module.contains(slot))
    throw Error(ErrorCode::UnknownValue, "value does not belong to the module");
  TypeClasses classes(module);
  std::vector<Value *> fresh = classes.resolve(slot, type);
  classes.commit();
  return fresh;
}

RewriteReport materialize(Module &module) {
  return detail::materializeAll(module).report;
}

bool eraseDeadHole(Module &module, Value *value, RewriteReport *report) {
  if (!isHoleCall(value) || value->hasUses())
    return false;
  auto *call = static_cast<Instruction *>(value);
  Function *decl = call->callee();
  module.erase(call);
  if (decl->callers().empty()) {
    if (report)
      report->deleted.push_back(decl->name());
    module.erase(decl);
  }
  return true;
}

namespace {

std::size_t countCallUsers(const Value *value) {
  std::unordered_set<const Instruction *> calls;
  for (const Use &use : value->uses())
    if (use.user->opcode() == Opcode::Call)
      calls.insert(use.user);
  return calls.size();
}

void checkScope(const Value *old, const Value *replacement) {
  const Function *home = definingFunction(replacement);
  if (!home)
    return;
  std::unordered_map<const Function *, DomTree> trees;
  for (const Use &use : old->uses()) {
    const Function *fn = use.user->function();
    if (fn != home)
      throw Error(ErrorCode::ScopeError,
                  "replacement is not visible in @" + fn->name());
    auto it = trees.find(fn);
    if (it == trees.end())
      it = trees.emplace(fn, DomTree(*fn)).first;
    if (!it->second.dominatesUse(replacement, use))
      throw Error(ErrorCode::ScopeError,
                  "replacement does not dominate every use of the hole");
  }
}

} // namespace

RewriteReport detail::rauwNTForward(Module &module, Value *old,
                                    Value *replacement, Forwards *forwards) {
  if (!module.contains(old) || !module.contains(replacement))
    throw Error(ErrorCode::UnknownValue, "value does not belong to the module");

  if (old->type() == replacement->type()) {
    RewriteReport report;
    report.replacedCalls = countCallUsers(old);
    module.replaceAllUsesWith(old, replacement);
    if (forwards)
      (*forwards)[old] = replacement;
    return report;
  }

  Type target = replacement->type();
  if (!target.isInt())
    throw Error(ErrorCode::NotAHole,
                "a value can only be given an integer type, not " +
                    target.str());
  if (!old->type().isHole()) {
    if (old->resolvedType()) {
      std::string who = old->type().str();
      if (const Function *fn = definingFunction(old))
        who = SlotNames(*fn).ref(old) + " in @" + fn->name();
      throw TypeConflictError(target.str(), old->type().str(), {who});
    }
    throw Error(ErrorCode::NotAHole,
                "only a %hole.t value can change type; this one is " +
                    old->type().str());
  }

  // Validate everything before the first mutation.
  checkScope(old, replacement);
  TypeClasses classes(module);
  classes.resolve(old, target);

  classes.commit();
  detail::Materialized done = detail::materializeAll(module);
  // Materialization may have swapped either side for a concrete
  // instruction; an icmp hole-op result can be the replacement.
  auto latest = [&](Value *v) {
    auto it = done.replaced.find(v);
    return it == done.replaced.end() ? v : static_cast<Value *>(it->second);
  };
  Value *current = latest(old);
  replacement = latest(replacement);
  if (forwards) {
    for (const auto &[from, to] : done.replaced)
      (*forwards)[from] = to;
    (*forwards)[old] = replacement;
    (*forwards)[current] = replacement;
  }

  std::unordered_set<const Instruction *> touched(done.retypedCalls.begin(),
                                                  done.retypedCalls.end());
  for (const Use &use : current->uses())
    if (use.user->opcode() == Opcode::Call)
      touched.insert(use.user);

  module.replaceAllUsesWith(current, replacement);

  RewriteReport report = std::move(done.report);
  if (isHoleCall(current)) {
    auto *call = static_cast<Instruction *>(current);
    std::string declName = call->callee()->name();
    touched.erase(call);
    if (eraseDeadHole(module, current, &report))
      std::erase(report.redeclaredFunctions, declName);
  } else if (current->valueKind() == Value::Kind::Instruction &&
             !current->hasUses()) {
    module.erase(static_cast<Instruction *>(current));
  }
  report.replacedCalls = touched.size() + report.materializedOps.size();
  return report;
}

RewriteReport rauwNT(Module &module, Value *old, Value *replacement) {
  return detail::rauwNTForward(module, old, replacement, nullptr);
}

} // namespace holeir
