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

#include <benchmark/benchmark.h>

#include <string>

#include "holeir/holes.h"
#include "holeir/interp.h"
#include "holeir/rewrite.h"
#include "holeir/synth.h"
#include "holeir/textio.h"
#include "holeir/verifier.h"

namespace {

using namespace holeir;

Module parseText(const std::string &text) {
  ModuleParse parsed = parseModule(text);
  if (!parsed.ok())
    throw std::runtime_error("benchmark input does not parse");
  return std::move(*parsed.module);
}

// A straight-line chain of `n` arithmetic instructions.
std::string chainModule(int n) {
  std::string text = "define i32 @chain(i32 %x) {\nentry:\n  %v0 = add i32 %x, 1\n";
  const char *ops[] = {"add", "mul", "xor", "sub"};
  for (int i = 1; i < n; ++i)
    text += "  %v" + std::to_string(i) + " = " + ops[i % 4] + " i32 %v" +
            std::to_string(i - 1) + ", " + std::to_string(i) + "\n";
  text += "  ret i32 %v" + std::to_string(n - 1) + "\n}\n";
  return text;
}

// `n` untyped holes chained through hole.op.add, feeding one typed hole.
std::string holeChainModule(int n) {
  std::string text;
  for (int i = 0; i < n; ++i)
    text += "declare %hole.t @hole" + std::to_string(i) + "()\n";
  text += "declare i32 @hole" + std::to_string(n) + "(%hole.t)\n";
  text += "declare %hole.t @hole.op.add(%hole.t, %hole.t)\n\n";
  text += "define i32 @f() {\nentry:\n";
  for (int i = 0; i < n; ++i)
    text += "  %h" + std::to_string(i) + " = call %hole.t @hole" +
            std::to_string(i) + "()\n";
  text += "  %s0 = call %hole.t @hole.op.add(%hole.t %h0, %hole.t %h0)\n";
  for (int i = 1; i < n; ++i)
    text += "  %s" + std::to_string(i) + " = call %hole.t @hole.op.add(%hole.t %s" +
            std::to_string(i - 1) + ", %hole.t %h" + std::to_string(i) + ")\n";
  text += "  %r = call i32 @hole" + std::to_string(n) + "(%hole.t %s" +
          std::to_string(n - 1) + ")\n  ret i32 %r\n}\n";
  return text;
}

void BM_ParsePrint(benchmark::State &state) {
  const std::string text = chainModule(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Module m = parseText(text);
    std::string out = printModule(m);
    benchmark::DoNotOptimize(out);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParsePrint)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Verify(benchmark::State &state) {
  Module m = parseText(chainModule(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify(m));
}
BENCHMARK(BM_Verify)->Arg(100)->Arg(1000)->Arg(10000);

// Filling one hole resolves and materializes the whole chain.
void BM_RauwNTChain(benchmark::State &state) {
  const Module base = parseText(holeChainModule(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    state.PauseTiming();
    Module m = base.clone();
    Value *h0 = SlotNames(*m.getFunction("f")).lookup("h0");
    state.ResumeTiming();
    benchmark::DoNotOptimize(rauwNT(m, h0, m.constant(32, 1)));
  }
}
BENCHMARK(BM_RauwNTChain)->Arg(10)->Arg(100)->Arg(1000);

void BM_InterpLoop(benchmark::State &state) {
  Module m = parseText(
      "define i32 @sum(i32 %n) {\nentry:\n  br label %head\n\n"
      "head:\n  %i = phi i32 [ 0, %entry ], [ %i.next, %body ]\n"
      "  %acc = phi i32 [ 0, %entry ], [ %acc.next, %body ]\n"
      "  %done = icmp uge i32 %i, %n\n  br i1 %done, label %exit, label %body\n\n"
      "body:\n  %acc.next = add i32 %acc, %i\n  %i.next = add i32 %i, 1\n"
      "  br label %head\n\nexit:\n  ret i32 %acc\n}\n");
  IntConst n[] = {IntConst::make(32, state.range(0))};
  std::uint64_t steps = 0;
  for (auto _ : state)
    steps += run(m, "sum", n, 100'000'000).steps;
  state.SetItemsProcessed(static_cast<int64_t>(steps));
}
BENCHMARK(BM_InterpLoop)->Arg(1000)->Arg(100000);

void BM_SuperoptAnd(benchmark::State &state) {
  Module m = parseText("declare i8 @hole0(i8, i8)\n\n"
                       "define i8 @target(i8 %x, i8 %y) {\nentry:\n"
                       "  %r = and i8 %x, %y\n  ret i8 %r\n}\n\n"
                       "define i8 @sketch(i8 %x, i8 %y) {\nentry:\n"
                       "  %r = call i8 @hole0(i8 %x, i8 %y)\n  ret i8 %r\n}\n");
  CandidatePools pools = CandidatePools::defaults(*m.getFunction("sketch"));
  for (auto _ : state) {
    SuperoptResult r = superopt(m, "target", "sketch", pools, {});
    if (!r.found())
      state.SkipWithError("no solution");
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SuperoptAnd)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
