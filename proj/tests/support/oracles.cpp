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

#include "oracles.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace holeir::testing {

namespace {

using Big = boost::multiprecision::cpp_int;

std::vector<bool> reach(const std::vector<std::vector<std::size_t>> &succ,
                        std::optional<std::size_t> removed) {
  std::vector<bool> seen(succ.size(), false);
  if (removed == 0)
    return seen;
  std::deque<std::size_t> work{0};
  seen[0] = true;
  while (!work.empty()) {
    std::size_t b = work.front();
    work.pop_front();
    for (std::size_t s : succ[b])
      if (!seen[s] && s != removed) {
        seen[s] = true;
        work.push_back(s);
      }
  }
  return seen;
}

Big pow2(unsigned n) { return Big(1) << n; }

// Reduce to [0, 2^width).
Big wrap(Big v, unsigned width) {
  Big m = pow2(width);
  v %= m;
  if (v < 0)
    v += m;
  return v;
}

Big toSigned(Big v, unsigned width) {
  v = wrap(v, width);
  return v >= pow2(width - 1) ? v - pow2(width) : v;
}

} // namespace

std::vector<std::vector<bool>>
bruteForceDominators(const std::vector<std::vector<std::size_t>> &succ) {
  const std::size_t n = succ.size();
  std::vector<bool> reachable = reach(succ, std::nullopt);
  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    if (!reachable[a])
      continue;
    std::vector<bool> without = reach(succ, a);
    for (std::size_t b = 0; b < n; ++b)
      dom[a][b] = reachable[b] && (a == b || !without[b]);
  }
  return dom;
}

std::vector<std::vector<bool>> bruteForceDominators(const Function &fn) {
  std::unordered_map<const Block *, std::size_t> index;
  for (std::size_t i = 0; i < fn.blocks().size(); ++i)
    index[fn.blocks()[i].get()] = i;
  std::vector<std::vector<std::size_t>> succ(fn.blocks().size());
  for (std::size_t i = 0; i < fn.blocks().size(); ++i) {
    const Block &b = *fn.blocks()[i];
    if (b.empty())
      continue;
    for (Block *s : b.back()->blocks())
      if (b.back()->isTerminator())
        succ[i].push_back(index.at(s));
  }
  return bruteForceDominators(succ);
}

std::vector<std::size_t>
componentLabels(std::size_t nodes,
                const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> label(nodes, nodes);
  for (std::size_t start = 0; start < nodes; ++start) {
    if (label[start] != nodes)
      continue;
    std::deque<std::size_t> work{start};
    label[start] = start;
    while (!work.empty()) {
      std::size_t v = work.front();
      work.pop_front();
      for (std::size_t w : adj[v])
        if (label[w] == nodes) {
          label[w] = start;
          work.push_back(w);
        }
    }
  }
  return label;
}

long long bigIntBinary(Opcode op, long long lhs, long long rhs, unsigned width) {
  Big a = wrap(Big(lhs), width), b = wrap(Big(rhs), width);
  Big r;
  switch (op) {
  case Opcode::Add: r = a + b; break;
  case Opcode::Sub: r = a - b; break;
  case Opcode::Mul: r = a * b; break;
  case Opcode::And: r = a & b; break;
  case Opcode::Or: r = a | b; break;
  case Opcode::Xor: r = a ^ b; break;
  case Opcode::Shl:
    r = b >= width ? Big(0) : a * pow2(static_cast<unsigned>(b));
    break;
  case Opcode::LShr:
    r = b >= width ? Big(0) : a / pow2(static_cast<unsigned>(b));
    break;
  case Opcode::AShr: {
    Big s = toSigned(a, width);
    if (b >= width) {
      r = s < 0 ? Big(-1) : Big(0);
    } else {
      // Floor division; cpp_int division truncates toward zero.
      Big d = pow2(static_cast<unsigned>(b));
      r = s / d;
      if (s < 0 && r * d != s)
        r -= 1;
    }
    break;
  }
  default:
    throw std::invalid_argument("not a binary opcode");
  }
  return static_cast<long long>(toSigned(r, width));
}

bool bigIntICmp(ICmpPred pred, long long lhs, long long rhs, unsigned width) {
  Big ua = wrap(Big(lhs), width), ub = wrap(Big(rhs), width);
  Big sa = toSigned(ua, width), sb = toSigned(ub, width);
  switch (pred) {
  case ICmpPred::Eq: return ua == ub;
  case ICmpPred::Ne: return ua != ub;
  case ICmpPred::Ult: return ua < ub;
  case ICmpPred::Ule: return ua <= ub;
  case ICmpPred::Ugt: return ua > ub;
  case ICmpPred::Uge: return ua >= ub;
  case ICmpPred::Slt: return sa < sb;
  case ICmpPred::Sle: return sa <= sb;
  case ICmpPred::Sgt: return sa > sb;
  case ICmpPred::Sge: return sa >= sb;
  }
  return false;
}

} // namespace holeir::testing
