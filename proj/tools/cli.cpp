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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "holeir/error.h"
#include "holeir/holes.h"
#include "holeir/interp.h"
#include "holeir/synth.h"
#include "holeir/textio.h"
#include "holeir/verifier.h"

namespace holeir::cli {

namespace {

/// Raised inside a subcommand to stop with kFailure after the message has
/// been written.
struct Failed {};

std::string readFile(const std::string &path, std::ostream &err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    throw Failed{};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string &text, const std::string &outPath,
          std::ostream &out, std::ostream &err) {
  if (outPath.empty()) {
    out << text;
    return;
  }
  std::ofstream file(outPath, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << outPath << "\n";
    throw Failed{};
  }
}

Module loadModule(const std::string &path, std::ostream &err) {
  ModuleParse parsed = parseModule(readFile(path, err));
  for (const Diagnostic &d : parsed.diagnostics)
    err << d.format(path) << "\n";
  if (!parsed.ok())
    throw Failed{};
  return std::move(*parsed.module);
}

void requireValid(const Module &module, const std::string &path,
                  std::ostream &err) {
  std::vector<Diagnostic> diags = verify(module);
  for (const Diagnostic &d : diags)
    err << d.format(path) << "\n";
  if (!diags.empty())
    throw Failed{};
}

std::string stripAt(std::string name) {
  if (!name.empty() && name.front() == '@')
    name.erase(0, 1);
  return name;
}

std::optional<SignedBits> parseInteger(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || text.size() > 39)
    return std::nullopt;
  Bits magnitude = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      return std::nullopt;
    Bits next = magnitude * 10 + static_cast<Bits>(c - '0');
    if (next / 10 != magnitude)
      return std::nullopt;
    magnitude = next;
  }
  const Bits limit = Bits{1} << 127;
  if (magnitude > (negative ? limit : limit - 1))
    return std::nullopt;
  return negative ? static_cast<SignedBits>(~magnitude + 1)
                  : static_cast<SignedBits>(magnitude);
}

/// Accepts anything representable as a signed or unsigned `width`-bit value.
bool representable(SignedBits value, unsigned width) {
  if (width >= 128)
    return true;
  SignedBits lo = -(SignedBits{1} << (width - 1));
  SignedBits hi = (SignedBits{1} << width) - 1;
  return value >= lo && value <= hi;
}

std::string holesTable(const Module &module) {
  std::vector<std::vector<std::string>> rows{
      {"name", "declared", "resolved", "deps"}};
  for (const HoleInfo &h : listHoles(module)) {
    std::string deps;
    if (h.callSite) {
      SlotNames names(*h.callSite->function());
      for (const Value *d : h.deps) {
        if (!deps.empty())
          deps += ", ";
        deps += d->type().str() + " " + names.ref(d);
      }
    }
    rows.push_back({"@" + h.name, h.declaredType.str(),
                    h.resolvedType ? h.resolvedType->str() : "-",
                    deps.empty() ? "-" : deps});
  }
  std::vector<std::size_t> width(3, 0);
  for (const auto &row : rows)
    for (std::size_t c = 0; c < 3; ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string text;
  for (const auto &row : rows) {
    for (std::size_t c = 0; c < 3; ++c)
      text += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
    text += row[3] + "\n";
  }
  return text;
}

} // namespace

int runCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Symbolic holes for a typed SSA IR", "holeir"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string input, outPath;
  auto addInput = [&](CLI::App *sub) {
    sub->add_option("file", input, "Input module")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto addOutput = [&](CLI::App *sub) {
    sub->add_option("-o,--output", outPath, "Write to a file instead of stdout");
  };

  CLI::App *verifyCmd = app.add_subcommand("verify", "Check a module");
  addInput(verifyCmd);

  CLI::App *printCmd = app.add_subcommand("print", "Print in canonical form");
  addInput(printCmd);
  addOutput(printCmd);

  CLI::App *holesCmd = app.add_subcommand("holes", "List the live holes");
  addInput(holesCmd);
  addOutput(holesCmd);

  std::string assignPath;
  CLI::App *fillCmd = app.add_subcommand("fill", "Apply a hole assignment file");
  addInput(fillCmd);
  addOutput(fillCmd);
  fillCmd->add_option("--assign", assignPath, "Assignment file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string fnName;
  std::vector<std::string> runArgs;
  std::uint64_t fuel = kDefaultFuel;
  bool widthCheck = false;
  CLI::App *runCmd = app.add_subcommand("run", "Interpret a function");
  addInput(runCmd);
  runCmd->add_option("--fn", fnName, "Function to run")->required();
  runCmd->add_option("--args", runArgs, "Comma-separated integer arguments")
      ->delimiter(',');
  runCmd->add_option("--fuel", fuel, "Step limit")->check(CLI::PositiveNumber);
  runCmd->add_flag("--width-check", widthCheck,
                   "Reject arguments that do not fit their parameter width");

  std::string target, sketch;
  std::vector<std::string> consts, opcodes;
  std::size_t budget = 1'000'000, samples = 0;
  std::uint64_t seed = Sampled{}.seed;
  bool noOperands = false;
  CLI::App *superCmd =
      app.add_subcommand("superopt", "Search hole assignments matching a target");
  addInput(superCmd);
  addOutput(superCmd);
  superCmd->add_option("--target", target, "Reference function")->required();
  superCmd->add_option("--sketch", sketch, "Function with holes")->required();
  superCmd->add_option("--consts", consts, "Constant seeds, instantiated at each width")
      ->delimiter(',');
  superCmd->add_option("--opcodes", opcodes, "Opcodes for dependency holes")
      ->delimiter(',');
  superCmd->add_flag("--no-operands", noOperands,
                     "Do not offer in-scope values as candidates");
  superCmd->add_option("--budget", budget, "Maximum candidate tuples")
      ->check(CLI::PositiveNumber);
  CLI::Option *sampleOpt =
      superCmd->add_option("--sample", samples, "Check N sampled inputs")
          ->check(CLI::PositiveNumber);
  superCmd->add_option("--seed", seed, "Sampling seed")->needs(sampleOpt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verifyCmd->parsed()) {
      Module m = loadModule(input, err);
      requireValid(m, input, err);
      return kOk;
    }
    if (printCmd->parsed()) {
      Module m = loadModule(input, err);
      emit(printModule(m), outPath, out, err);
      return kOk;
    }
    if (holesCmd->parsed()) {
      Module m = loadModule(input, err);
      emit(holesTable(m), outPath, out, err);
      return kOk;
    }
    if (fillCmd->parsed()) {
      Module m = loadModule(input, err);
      requireValid(m, input, err);
      AssignmentParse parsed = parseAssignments(readFile(assignPath, err));
      for (const Diagnostic &d : parsed.diagnostics)
        err << d.format(assignPath) << "\n";
      if (!parsed.ok())
        return kFailure;
      try {
        Module filled = fill(m, *parsed.assignments);
        emit(printModule(filled), outPath, out, err);
      } catch (const AssignmentError &e) {
        err << assignPath << ": error: "
            << errorCodeName(e.code()) << ": " << e.what() << "\n";
        return kFailure;
      }
      return kOk;
    }
    if (runCmd->parsed()) {
      Module m = loadModule(input, err);
      requireValid(m, input, err);
      std::string name = stripAt(fnName);
      const Function *fn = m.getFunction(name);
      if (!fn) {
        err << "error: no function @" << name << "\n";
        return kFailure;
      }
      if (runArgs.size() != fn->numArgs()) {
        err << "error: @" << name << " takes " << fn->numArgs()
            << " argument(s), got " << runArgs.size() << "\n";
        return kFailure;
      }
      std::vector<IntConst> values;
      for (std::size_t i = 0; i < runArgs.size(); ++i) {
        Type t = fn->arg(i)->type();
        std::optional<SignedBits> v = parseInteger(runArgs[i]);
        if (!v || !t.isInt()) {
          err << "error: argument " << i << " ('" << runArgs[i]
              << "') is not an integer\n";
          return kFailure;
        }
        if (widthCheck && !representable(*v, t.width())) {
          err << "error: argument " << i << " (" << runArgs[i]
              << ") does not fit " << t.str() << "\n";
          return kFailure;
        }
        values.push_back(IntConst::make(t.width(), *v));
      }
      RunResult r = run(m, name, values, fuel);
      out << (r.value ? r.value->str() : std::string("void")) << "\n";
      return kOk;
    }
    if (superCmd->parsed()) {
      Module m = loadModule(input, err);
      requireValid(m, input, err);
      const Function *sf = m.getFunction(stripAt(sketch));
      if (!sf) {
        err << "error: no function @" << stripAt(sketch) << "\n";
        return kFailure;
      }
      std::optional<std::vector<SignedBits>> seeds;
      if (!consts.empty()) {
        seeds.emplace();
        for (const std::string &c : consts) {
          std::optional<SignedBits> v = parseInteger(c);
          if (!v) {
            err << "error: --consts: '" << c << "' is not an integer\n";
            return kUsage;
          }
          seeds->push_back(*v);
        }
      }
      CandidatePools pools = CandidatePools::defaults(*sf, seeds);
      pools.operands = !noOperands;
      if (!opcodes.empty()) {
        pools.opcodes.clear();
        for (const std::string &name : opcodes) {
          std::optional<Opcode> op = parseOpcode(name);
          if (!op || !isBinaryOp(*op)) {
            err << "error: --opcodes: '" << name << "' is not a binary opcode\n";
            return kUsage;
          }
          pools.opcodes.push_back(*op);
        }
      }
      SynthConfig config;
      config.maxCandidates = budget;
      if (samples > 0)
        config.policy = Sampled{samples, seed};
      SuperoptResult result =
          superopt(m, stripAt(target), stripAt(sketch), pools, config);
      if (!result.found()) {
        err << "not found after " << result.candidatesTried
            << " candidate(s)\n";
        return kFailure;
      }
      const Solution &s = *result.solution;
      emit(printAssignments(s.assignments) + "\n" +
               printFunction(*s.filledModule.getFunction(sf->name())),
           outPath, out, err);
      return kOk;
    }
  } catch (const Failed &) {
    return kFailure;
  } catch (const Error &e) {
    err << "error: " << errorCodeName(e.code()) << ": " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

} // namespace holeir::cli
