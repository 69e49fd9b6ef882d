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

#include "holeir/synth.h"

#include <algorithm>
#include <set>

#include "holeir/dominators.h"
#include "holeir/holes.h"
#include "holeir/rewrite.h"
#include "holeir/verifier.h"
#include "rewrite_internal.h"

namespace holeir {

namespace {

Value *forwarded(const detail::Forwards &forwards, Value *value) {
  for (auto it = forwards.find(value); it != forwards.end();
       it = forwards.find(value))
    value = it->second;
  return value;
}

/// The live call site of hole `name` in `module`, or null once it is gone.
Instruction *liveHole(const Module &module, const std::string &name) {
  const Function *decl = module.getFunction(name);
  if (!decl || !isHoleFunction(decl) || decl->callers().empty())
    return nullptr;
  return decl->callers().front();
}

/// Assigns `value` to the hole and clears away the dead call.
void assign(Module &module, Instruction *hole, Value *value,
            detail::Forwards &forwards) {
  std::string name = hole->callee()->name();
  detail::rauwNTForward(module, hole, value, &forwards);
  // A type-changing rewrite already removed the hole; a plain one did not.
  if (liveHole(module, name) == hole)
    eraseDeadHole(module, hole);
}

} // namespace

Module fill(const Module &module, const AssignmentSet &assignments) {
  CloneMap map;
  Module work = module.clone(&map);

  // Resolve every value reference against the input module first, so names
  // keep their meaning while the copy is rewritten.
  std::vector<Value *> refs;
  for (const Assignment &a : assignments.entries) {
    const Function *decl = module.getFunction(a.hole);
    if (!decl || !isHoleFunction(decl) || decl->callers().empty())
      throw AssignmentError(ErrorCode::UnknownValue, a.line,
                            "line " + std::to_string(a.line) + ": no hole @" +
                                a.hole);
    if (a.isConstant()) {
      refs.push_back(nullptr);
      continue;
    }
    const Function &home = *decl->callers().front()->function();
    Value *ref = SlotNames(home).lookup(a.valueRef);
    if (!ref)
      throw AssignmentError(ErrorCode::UnknownValue, a.line,
                            "line " + std::to_string(a.line) + ": no value %" +
                                a.valueRef + " in @" + home.name());
    if (a.refType && *a.refType != ref->type())
      throw AssignmentError(ErrorCode::TypeMismatch, a.line,
                            "line " + std::to_string(a.line) + ": %" +
                                a.valueRef + " has type " + ref->type().str() +
                                ", not " + a.refType->str());
    refs.push_back(map.lookup(ref));
  }

  detail::Forwards forwards;
  for (std::size_t i = 0; i < assignments.entries.size(); ++i) {
    const Assignment &a = assignments.entries[i];
    try {
      Instruction *hole = liveHole(work, a.hole);
      if (!hole)
        throw Error(ErrorCode::NotAHole, "@" + a.hole + " is already filled");
      Value *value = a.isConstant() ? work.constant(*a.constant)
                                    : forwarded(forwards, refs[i]);
      assign(work, hole, value, forwards);
    } catch (const AssignmentError &) {
      throw;
    } catch (const Error &e) {
      throw AssignmentError(e.code(), a.line,
                            "line " + std::to_string(a.line) + ": " + e.what());
    }
  }
  materialize(work);
  return work;
}

CandidatePools CandidatePools::defaults(const Function &sketch,
                                        std::optional<std::vector<SignedBits>> seeds) {
  std::set<unsigned> widths;
  auto note = [&](std::optional<Type> t) {
    if (t && t->isInt())
      widths.insert(t->width());
  };
  note(sketch.returnType());
  for (Type t : sketch.type().params)
    note(t);
  for (const auto &block : sketch.blocks())
    for (const auto &inst : block->instructions())
      if (isHoleCall(inst.get())) {
        note(inst->type());
        note(inst->resolvedType());
      }

  CandidatePools pools;
  for (unsigned w : widths) {
    std::vector<SignedBits> values =
        seeds ? *seeds : std::vector<SignedBits>{0, 1, -1, 2, SignedBits(w) - 1};
    for (SignedBits v : values) {
      IntConst c = IntConst::make(w, v);
      if (std::find(pools.constants.begin(), pools.constants.end(), c) ==
          pools.constants.end())
        pools.constants.push_back(c);
    }
  }
  pools.opcodes.assign(std::begin(kBinaryOpcodes), std::end(kBinaryOpcodes));
  return pools;
}

std::vector<std::vector<HoleCandidate>>
enumerateCandidates(const Module &module, const Function &sketch,
                    const CandidatePools &pools) {
  std::vector<std::vector<HoleCandidate>> out;
  DomTree dom(sketch);
  for (const HoleInfo &hole : listHoles(module)) {
    if (!hole.callSite || hole.callSite->function() != &sketch)
      continue;
    std::vector<HoleCandidate> list;
    if (pools.operands) {
      auto offer = [&](Value *v) {
        if (!v->type().isInt() || isHoleCall(v))
          return;
        if (!dom.dominatesPoint(v, hole.callSite) || v == hole.callSite)
          return;
        HoleCandidate c;
        c.kind = HoleCandidate::Kind::Operand;
        c.operand = v;
        list.push_back(c);
      };
      for (std::size_t i = 0; i < sketch.numArgs(); ++i)
        offer(sketch.arg(i));
      for (const auto &block : sketch.blocks())
        for (const auto &inst : block->instructions())
          offer(inst.get());
    }
    for (const IntConst &k : pools.constants) {
      HoleCandidate c;
      c.kind = HoleCandidate::Kind::Constant;
      c.constant = k;
      list.push_back(c);
    }
    for (Opcode op : kBinaryOpcodes) {
      if (std::find(pools.opcodes.begin(), pools.opcodes.end(), op) ==
          pools.opcodes.end())
        continue;
      for (std::size_t i = 0; i < hole.deps.size(); ++i)
        for (std::size_t j = 0; j < hole.deps.size(); ++j) {
          Type ti = hole.deps[i]->type(), tj = hole.deps[j]->type();
          if (!ti.isInt() || ti != tj)
            continue;
          HoleCandidate c;
          c.kind = HoleCandidate::Kind::Operation;
          c.opcode = op;
          c.lhsDep = i;
          c.rhsDep = j;
          list.push_back(c);
        }
    }
    out.push_back(std::move(list));
  }
  return out;
}

namespace {

struct Attempt {
  Module module;
  AssignmentSet assignments;
};

// Fills one candidate tuple into a fresh copy. Returns nothing when the
// tuple is rejected by the rewriter.
std::optional<Attempt> tryTuple(const Module &module, const Function &sketch,
                                const std::vector<HoleInfo> &holes,
                                const std::vector<const HoleCandidate *> &tuple) {
  CloneMap map;
  Attempt attempt{module.clone(&map), {}};
  Module &work = attempt.module;
  SlotNames names(sketch);
  detail::Forwards forwards;
  try {
    for (std::size_t k = 0; k < holes.size(); ++k) {
      const HoleCandidate &c = *tuple[k];
      Instruction *site = liveHole(work, holes[k].name);
      if (!site)
        return std::nullopt;
      Assignment entry;
      entry.hole = holes[k].name;
      Value *value = nullptr;
      switch (c.kind) {
      case HoleCandidate::Kind::Operand:
        value = forwarded(forwards, map.lookup(c.operand));
        entry.valueRef = names.ref(c.operand).substr(1);
        entry.refType = c.operand->type();
        break;
      case HoleCandidate::Kind::Constant:
        value = work.constant(c.constant);
        entry.constant = c.constant;
        break;
      case HoleCandidate::Kind::Operation: {
        Value *lhs = site->operand(c.lhsDep);
        Value *rhs = site->operand(c.rhsDep);
        if (!lhs->type().isInt() || lhs->type() != rhs->type())
          return std::nullopt;
        Builder builder(work);
        builder.setInsertPoint(site);
        std::string name = holes[k].name + ".val";
        value = builder.binary(c.opcode, lhs, rhs, name);
        entry.valueRef = name;
        entry.refType = lhs->type();
        break;
      }
      }
      entry.line = static_cast<unsigned>(k + 1);
      assign(work, site, value, forwards);
      attempt.assignments.entries.push_back(std::move(entry));
    }
    materialize(work);
  } catch (const Error &) {
    return std::nullopt;
  }
  return attempt;
}

void shuffle(std::vector<HoleCandidate> &list, std::uint64_t seed) {
  Lcg64 rng(seed);
  for (std::size_t i = list.size(); i > 1; --i)
    std::swap(list[i - 1], list[rng.next() % i]);
}

} // namespace

SuperoptResult superopt(const Module &module, std::string_view target,
                        std::string_view sketch, const CandidatePools &pools,
                        const SynthConfig &config) {
  const Function *tf = module.getFunction(target);
  const Function *sf = module.getFunction(sketch);
  if (!tf || tf->isDeclaration())
    throw Error(ErrorCode::ConfigError,
                "target @" + std::string(target) + " is not a definition");
  if (!sf || sf->isDeclaration())
    throw Error(ErrorCode::ConfigError,
                "sketch @" + std::string(sketch) + " is not a definition");
  if (tf->type() != sf->type())
    throw Error(ErrorCode::ConfigError,
                "target is " + tf->type().str() + " but sketch is " +
                    sf->type().str());
  if (!isClosed(*tf))
    throw Error(ErrorCode::ConfigError, "target @" + tf->name() +
                                            " still contains holes");
  if (config.maxCandidates == 0)
    throw Error(ErrorCode::ConfigError, "candidate budget must be positive");

  std::vector<HoleInfo> holes;
  for (HoleInfo &h : listHoles(module))
    if (h.callSite && h.callSite->function() == sf)
      holes.push_back(std::move(h));
  if (holes.empty())
    throw Error(ErrorCode::ConfigError,
                "sketch @" + sf->name() + " has no holes");

  std::vector<std::vector<HoleCandidate>> lists =
      enumerateCandidates(module, *sf, pools);
  if (config.orderSeed != 0)
    for (std::size_t k = 0; k < lists.size(); ++k)
      shuffle(lists[k], config.orderSeed + k);

  SuperoptResult result;
  for (const auto &list : lists)
    if (list.empty())
      return result;

  EquivPolicy policy = config.policy ? *config.policy : defaultPolicy(*tf);
  std::vector<std::size_t> odometer(lists.size(), 0);
  std::vector<const HoleCandidate *> tuple(lists.size());
  while (result.candidatesTried < config.maxCandidates) {
    for (std::size_t k = 0; k < lists.size(); ++k)
      tuple[k] = &lists[k][odometer[k]];
    ++result.candidatesTried;

    if (auto attempt = tryTuple(module, *sf, holes, tuple)) {
      Module &work = attempt->module;
      if (verify(work).empty() && isClosed(*work.getFunction(sf->name()))) {
        bool equal = false;
        try {
          equal = std::holds_alternative<Equivalent>(
              checkEquiv(work, tf->name(), sf->name(), policy, config.fuel));
        } catch (const Error &e) {
          if (e.code() == ErrorCode::PolicyInfeasible)
            throw;
        }
        if (equal) {
          result.solution = Solution{std::move(attempt->assignments),
                                     std::move(work), result.candidatesTried};
          return result;
        }
      }
    }

    // Advance the odometer; the last hole varies fastest.
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++odometer[k] < lists[k].size())
        break;
      odometer[k] = 0;
      if (k == 0)
        return result;
    }
  }
  return result;
}

} // namespace holeir
