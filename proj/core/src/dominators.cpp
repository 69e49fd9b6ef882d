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

#include "holeir/dominators.h"

#include <algorithm>

namespace holeir {

DomTree::DomTree(const Function &fn) : fn_(&fn) {
  if (fn.isDeclaration())
    return;
  for (const auto &block : fn.blocks()) {
    unsigned i = 0;
    for (const auto &inst : block->instructions())
      position_[inst.get()] = i++;
  }

  // Iterative post-order DFS from the entry.
  std::vector<Block *> postOrder;
  std::unordered_map<const Block *, bool> visited;
  std::vector<std::pair<Block *, std::size_t>> stack;
  std::unordered_map<const Block *, std::vector<Block *>> succs;
  stack.emplace_back(fn.entry(), 0);
  visited[fn.entry()] = true;
  succs[fn.entry()] = fn.entry()->successors();
  while (!stack.empty()) {
    auto &[block, next] = stack.back();
    const auto &out = succs[block];
    if (next < out.size()) {
      Block *succ = out[next++];
      if (!visited[succ]) {
        visited[succ] = true;
        succs[succ] = succ->successors();
        stack.emplace_back(succ, 0);
      }
      continue;
    }
    postOrder.push_back(block);
    stack.pop_back();
  }
  rpo_.assign(postOrder.rbegin(), postOrder.rend());
  for (unsigned i = 0; i < rpo_.size(); ++i)
    order_[rpo_[i]] = i;

  std::vector<std::vector<unsigned>> preds(rpo_.size());
  for (unsigned i = 0; i < rpo_.size(); ++i)
    for (Block *succ : succs[rpo_[i]])
      preds[order_.at(succ)].push_back(i);

  idom_.assign(rpo_.size(), -1);
  idom_[0] = 0;
  auto intersect = [&](int a, int b) {
    while (a != b) {
      while (a > b)
        a = idom_[a];
      while (b > a)
        b = idom_[b];
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (unsigned i = 1; i < rpo_.size(); ++i) {
      int next = -1;
      for (unsigned p : preds[i]) {
        if (idom_[p] == -1)
          continue;
        next = next == -1 ? static_cast<int>(p)
                          : intersect(static_cast<int>(p), next);
      }
      if (next != idom_[i]) {
        idom_[i] = next;
        changed = true;
      }
    }
  }
}

Block *DomTree::idom(const Block *block) const {
  auto it = order_.find(block);
  if (it == order_.end() || it->second == 0)
    return nullptr;
  return rpo_[static_cast<std::size_t>(idom_[it->second])];
}

bool DomTree::reachable(const Block *block) const {
  return order_.count(block) != 0;
}

bool DomTree::dominates(const Block *a, const Block *b) const {
  auto ia = order_.find(a);
  auto ib = order_.find(b);
  if (ia == order_.end() || ib == order_.end())
    return false;
  int target = static_cast<int>(ia->second);
  int cur = static_cast<int>(ib->second);
  // idom indices decrease strictly along the chain towards the entry.
  while (cur > target)
    cur = idom_[static_cast<std::size_t>(cur)];
  return cur == target;
}

std::vector<Block *> DomTree::unreachable() const {
  std::vector<Block *> out;
  for (const auto &block : fn_->blocks())
    if (!reachable(block.get()))
      out.push_back(block.get());
  return out;
}

bool DomTree::dominatesPoint(const Value *def, const Instruction *point) const {
  switch (def->valueKind()) {
  case Value::Kind::Constant:
    return true;
  case Value::Kind::Argument:
    return static_cast<const Argument *>(def)->parent() == point->function();
  case Value::Kind::Instruction:
    break;
  }
  const auto *inst = static_cast<const Instruction *>(def);
  if (inst == point || inst->function() != point->function())
    return false;
  const Block *useBlock = point->parent();
  if (!reachable(useBlock))
    return true;
  const Block *defBlock = inst->parent();
  if (defBlock == useBlock)
    return position_.at(inst) < position_.at(point);
  return dominates(defBlock, useBlock);
}

bool DomTree::dominatesUse(const Value *def, const Use &use) const {
  const Instruction *user = use.user;
  if (user->opcode() != Opcode::Phi)
    return dominatesPoint(def, user);
  switch (def->valueKind()) {
  case Value::Kind::Constant:
    return true;
  case Value::Kind::Argument:
    return static_cast<const Argument *>(def)->parent() == user->function();
  case Value::Kind::Instruction:
    break;
  }
  const auto *inst = static_cast<const Instruction *>(def);
  if (inst->function() != user->function())
    return false;
  const Block *incoming = user->blocks()[use.operand];
  if (!reachable(incoming))
    return true;
  return dominates(inst->parent(), incoming);
}

} // namespace holeir
