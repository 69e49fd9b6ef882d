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

#include "holeir/textio.h"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "holeir/error.h"

namespace holeir {

std::string Diagnostic::format(std::string_view file) const {
  std::ostringstream os;
  os << file << ":" << line << ":" << column << ": "
     << (severity == Severity::Error ? "error" : "warning") << ": " << message;
  return os.str();
}

//===----------------------------------------------------------------------===//
// Lexer
//===----------------------------------------------------------------------===//

namespace {

enum class Tok {
  Eof,
  Word,   // bare identifier or keyword
  Local,  // %name
  Global, // @name
  Int,    // -?[0-9]+
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Equal,
  Colon,
  Bad,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  SourceLoc loc;
};

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$' || c == '-';
}

std::vector<Token> lex(std::string_view src, unsigned firstLine = 1) {
  std::vector<Token> out;
  unsigned line = firstLine, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ';') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.loc = {line, col};
    std::size_t start = i;
    auto single = [&](Tok kind) {
      tok.kind = kind;
      tok.text = std::string(1, c);
      advance(1);
    };
    switch (c) {
    case '(':
      single(Tok::LParen);
      break;
    case ')':
      single(Tok::RParen);
      break;
    case '{':
      single(Tok::LBrace);
      break;
    case '}':
      single(Tok::RBrace);
      break;
    case '[':
      single(Tok::LBracket);
      break;
    case ']':
      single(Tok::RBracket);
      break;
    case ',':
      single(Tok::Comma);
      break;
    case '=':
      single(Tok::Equal);
      break;
    case ':':
      single(Tok::Colon);
      break;
    case '%':
    case '@': {
      std::size_t j = i + 1;
      while (j < src.size() && isNameChar(src[j]))
        ++j;
      tok.kind = j == i + 1 ? Tok::Bad : (c == '%' ? Tok::Local : Tok::Global);
      tok.text = std::string(src.substr(i + 1, j - i - 1));
      if (tok.kind == Tok::Bad)
        tok.text = std::string(1, c);
      advance(j - start);
      break;
    }
    default:
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i + 1;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
          ++j;
        bool digits = j > i + (c == '-' ? 1 : 0);
        tok.kind = digits ? Tok::Int : Tok::Bad;
        tok.text = std::string(src.substr(i, j - i));
        advance(j - start);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i + 1;
        while (j < src.size() && isNameChar(src[j]) && src[j] != '-')
          ++j;
        tok.kind = Tok::Word;
        tok.text = std::string(src.substr(i, j - i));
        advance(j - start);
      } else {
        single(Tok::Bad);
      }
    }
    out.push_back(std::move(tok));
  }
  Token eof;
  eof.loc = {line, col};
  out.push_back(eof);
  return out;
}

/// Decimal text to bits modulo 2^128; negative values wrap.
// Empty when the magnitude does not fit in 128 bits.
std::optional<Bits> parseDecimal(std::string_view text) {
  bool negative = !text.empty() && text[0] == '-';
  Bits value = 0;
  for (char c : text.substr(negative ? 1 : 0)) {
    unsigned digit = static_cast<unsigned>(c - '0');
    if (value > (~Bits(0) - digit) / 10)
      return std::nullopt;
    value = value * 10 + digit;
  }
  return negative ? Bits(0) - value : value;
}

struct ParseFailure {
  Diagnostic diag;
};

[[noreturn]] void fail(SourceLoc loc, std::string message) {
  throw ParseFailure{Diagnostic{Diagnostic::Severity::Error, loc.line,
                                loc.column, std::move(message)}};
}

//===----------------------------------------------------------------------===//
// Syntax tree for one module
//===----------------------------------------------------------------------===//

struct POperand {
  enum class Kind { Local, Int, Bool } kind = Kind::Local;
  std::string text;
  SourceLoc loc;
};

struct PTyped {
  Type type = Type::voidTy();
  POperand value;
};

struct PLabel {
  std::string name;
  SourceLoc loc;
};

struct PInst {
  SourceLoc loc;
  std::string result;
  bool hasResult = false;
  Opcode op = Opcode::Ret;
  ICmpPred pred = ICmpPred::Eq;
  Type type = Type::voidTy();
  std::vector<PTyped> operands;
  std::vector<PLabel> labels;
  std::string callee;
  SourceLoc calleeLoc;
};

struct PBlock {
  std::string label;
  bool named = false;
  SourceLoc loc;
  std::vector<PInst> insts;
};

struct PFunction {
  bool isDefinition = false;
  std::string name;
  SourceLoc loc;
  Type ret = Type::voidTy();
  std::vector<Type> params;
  std::vector<PLabel> argNames;
  std::vector<PBlock> blocks;
};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<PFunction> parseTopLevel();
  std::vector<Diagnostic> &diagnostics() { return diags_; }

  // Shared with the assignment-file reader.
  const Token &peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token tok = peek();
    if (pos_ < toks_.size() - 1)
      ++pos_;
    return tok;
  }
  Token expect(Tok kind, const char *what) {
    if (peek().kind != kind)
      fail(peek().loc, std::string("expected ") + what + describe(peek()));
    return next();
  }
  bool accept(Tok kind) {
    if (peek().kind != kind)
      return false;
    next();
    return true;
  }
  bool atType() const;
  Type parseType(bool allowVoid);
  POperand parseValue();

private:
  static std::string describe(const Token &tok) {
    if (tok.kind == Tok::Eof)
      return " but reached end of input";
    return " but found '" + tok.text + "'";
  }

  PFunction parseFunction();
  PInst parseInst();
  PLabel parseLabelRef();
  void recoverToNextLine(unsigned line);
  void recoverToTopLevel();

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
};

bool Parser::atType() const {
  const Token &tok = peek();
  if (tok.kind == Tok::Local)
    return tok.text == "hole.t";
  if (tok.kind != Tok::Word)
    return false;
  if (tok.text == "void")
    return true;
  return tok.text.size() > 1 && tok.text[0] == 'i' &&
         std::all_of(tok.text.begin() + 1, tok.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Type Parser::parseType(bool allowVoid) {
  if (!atType())
    fail(peek().loc, "expected a type" + describe(peek()));
  Token tok = next();
  if (tok.kind == Tok::Local)
    return Type::hole();
  if (tok.text == "void") {
    if (!allowVoid)
      fail(tok.loc, "void is only allowed as a return type");
    return Type::voidTy();
  }
  unsigned long width = 0;
  for (char c : tok.text.substr(1)) {
    width = width * 10 + static_cast<unsigned>(c - '0');
    if (width > kMaxIntWidth)
      break;
  }
  if (width < 1 || width > kMaxIntWidth)
    fail(tok.loc, "integer width must be between 1 and 128 in '" + tok.text + "'");
  return Type::integer(static_cast<unsigned>(width));
}

POperand Parser::parseValue() {
  const Token &tok = peek();
  POperand v;
  v.loc = tok.loc;
  v.text = tok.text;
  if (tok.kind == Tok::Local) {
    if (tok.text == "hole.t")
      fail(tok.loc, "'%hole.t' is a type, not a value");
    v.kind = POperand::Kind::Local;
  } else if (tok.kind == Tok::Int) {
    v.kind = POperand::Kind::Int;
  } else if (tok.kind == Tok::Word && (tok.text == "true" || tok.text == "false")) {
    v.kind = POperand::Kind::Bool;
  } else {
    fail(tok.loc, "expected a value" + describe(tok));
  }
  next();
  return v;
}

PLabel Parser::parseLabelRef() {
  Token kw = next();
  if (kw.kind != Tok::Word || kw.text != "label")
    fail(kw.loc, "expected 'label'" + describe(kw));
  Token name = expect(Tok::Local, "a block reference");
  return PLabel{name.text, name.loc};
}

void Parser::recoverToNextLine(unsigned line) {
  while (peek().kind != Tok::Eof && peek().kind != Tok::RBrace &&
         peek().loc.line == line)
    next();
}

void Parser::recoverToTopLevel() {
  while (peek().kind != Tok::Eof) {
    if (peek().kind == Tok::Word &&
        (peek().text == "declare" || peek().text == "define") &&
        peek().loc.column == 1)
      return;
    next();
  }
}

std::vector<PFunction> Parser::parseTopLevel() {
  std::vector<PFunction> fns;
  while (peek().kind != Tok::Eof) {
    try {
      fns.push_back(parseFunction());
    } catch (const ParseFailure &failure) {
      diags_.push_back(failure.diag);
      next();
      recoverToTopLevel();
    }
  }
  return fns;
}

PFunction Parser::parseFunction() {
  Token kw = next();
  if (kw.kind != Tok::Word || (kw.text != "declare" && kw.text != "define"))
    fail(kw.loc, "expected 'declare' or 'define'" + describe(kw));
  PFunction fn;
  fn.isDefinition = kw.text == "define";
  fn.loc = kw.loc;
  fn.ret = parseType(/*allowVoid=*/true);
  fn.name = expect(Tok::Global, "a function name").text;
  expect(Tok::LParen, "'('");
  if (peek().kind != Tok::RParen) {
    do {
      fn.params.push_back(parseType(/*allowVoid=*/false));
      if (peek().kind == Tok::Local) {
        Token name = next();
        fn.argNames.push_back(PLabel{name.text, name.loc});
      } else {
        if (fn.isDefinition)
          fail(peek().loc, "expected a parameter name" + describe(peek()));
        fn.argNames.push_back(PLabel{});
      }
    } while (accept(Tok::Comma));
  }
  expect(Tok::RParen, "')'");
  if (!fn.isDefinition)
    return fn;

  expect(Tok::LBrace, "'{'");
  while (peek().kind != Tok::RBrace) {
    if (peek().kind == Tok::Eof)
      fail(peek().loc, "unterminated function body for @" + fn.name);
    bool isLabel = (peek().kind == Tok::Word || peek().kind == Tok::Int) &&
                   peek(1).kind == Tok::Colon;
    if (isLabel) {
      Token label = next();
      next();
      PBlock block;
      block.label = label.text;
      block.named = true;
      block.loc = label.loc;
      fn.blocks.push_back(std::move(block));
      continue;
    }
    if (fn.blocks.empty()) {
      PBlock entry;
      entry.loc = peek().loc;
      fn.blocks.push_back(std::move(entry));
    }
    unsigned line = peek().loc.line;
    try {
      fn.blocks.back().insts.push_back(parseInst());
    } catch (const ParseFailure &failure) {
      diags_.push_back(failure.diag);
      recoverToNextLine(line);
    }
  }
  next();
  if (fn.blocks.empty())
    fail(fn.loc, "function @" + fn.name + " has an empty body");
  return fn;
}

PInst Parser::parseInst() {
  PInst inst;
  inst.loc = peek().loc;
  if (peek().kind == Tok::Local && peek(1).kind == Tok::Equal) {
    Token name = next();
    if (name.text == "hole.t")
      fail(name.loc, "'%hole.t' is reserved for the hole type");
    inst.result = name.text;
    inst.hasResult = true;
    next();
  }
  Token opTok = next();
  if (opTok.kind != Tok::Word)
    fail(opTok.loc, "expected an instruction" + describe(opTok));
  const std::string &op = opTok.text;
  auto noResult = [&] {
    if (inst.hasResult)
      fail(inst.loc, "'" + op + "' does not produce a value");
  };
  auto needsResult = [&] {
    if (!inst.hasResult)
      fail(opTok.loc, "the result of '" + op + "' must be named");
  };

  if (auto code = parseOpcode(op); code && isBinaryOp(*code)) {
    needsResult();
    inst.op = *code;
    inst.type = parseType(false);
    POperand lhs = parseValue();
    expect(Tok::Comma, "','");
    POperand rhs = parseValue();
    inst.operands = {{inst.type, lhs}, {inst.type, rhs}};
  } else if (op == "icmp") {
    needsResult();
    inst.op = Opcode::ICmp;
    Token predTok = expect(Tok::Word, "a comparison predicate");
    auto pred = parsePred(predTok.text);
    if (!pred)
      fail(predTok.loc, "unknown icmp predicate '" + predTok.text + "'");
    inst.pred = *pred;
    Type ty = parseType(false);
    POperand lhs = parseValue();
    expect(Tok::Comma, "','");
    POperand rhs = parseValue();
    inst.type = Type::integer(1);
    inst.operands = {{ty, lhs}, {ty, rhs}};
  } else if (op == "select") {
    needsResult();
    inst.op = Opcode::Select;
    for (int k = 0; k < 3; ++k) {
      if (k)
        expect(Tok::Comma, "','");
      Type ty = parseType(false);
      inst.operands.push_back({ty, parseValue()});
    }
    inst.type = inst.operands[1].type;
  } else if (op == "call") {
    inst.op = Opcode::Call;
    inst.type = parseType(true);
    if (inst.type.isVoid())
      noResult();
    else
      needsResult();
    Token callee = expect(Tok::Global, "a callee");
    inst.callee = callee.text;
    inst.calleeLoc = callee.loc;
    expect(Tok::LParen, "'('");
    if (peek().kind != Tok::RParen) {
      do {
        Type ty = parseType(false);
        inst.operands.push_back({ty, parseValue()});
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')'");
  } else if (op == "phi") {
    needsResult();
    inst.op = Opcode::Phi;
    inst.type = parseType(false);
    do {
      expect(Tok::LBracket, "'['");
      POperand v = parseValue();
      expect(Tok::Comma, "','");
      Token block = expect(Tok::Local, "an incoming block");
      expect(Tok::RBracket, "']'");
      inst.operands.push_back({inst.type, v});
      inst.labels.push_back(PLabel{block.text, block.loc});
    } while (accept(Tok::Comma));
  } else if (op == "br") {
    noResult();
    if (peek().kind == Tok::Word && peek().text == "label") {
      inst.op = Opcode::Br;
      inst.labels.push_back(parseLabelRef());
    } else {
      inst.op = Opcode::CondBr;
      Type ty = parseType(false);
      inst.operands.push_back({ty, parseValue()});
      expect(Tok::Comma, "','");
      inst.labels.push_back(parseLabelRef());
      expect(Tok::Comma, "','");
      inst.labels.push_back(parseLabelRef());
    }
  } else if (op == "ret") {
    noResult();
    inst.op = Opcode::Ret;
    Type ty = parseType(true);
    if (!ty.isVoid())
      inst.operands.push_back({ty, parseValue()});
  } else {
    fail(opTok.loc, "unknown instruction '" + op + "'");
  }
  return inst;
}

//===----------------------------------------------------------------------===//
// Module construction from the syntax tree
//===----------------------------------------------------------------------===//

class ModuleBuilder {
public:
  explicit ModuleBuilder(std::vector<Diagnostic> &diags) : diags_(diags) {}

  Module build(const std::vector<PFunction> &fns);

private:
  void error(SourceLoc loc, std::string message) {
    diags_.push_back(Diagnostic{Diagnostic::Severity::Error, loc.line,
                                loc.column, std::move(message)});
  }
  void buildBody(const PFunction &pf, Function &fn);
  Value *resolveOperand(const PTyped &operand,
                        const std::unordered_map<std::string, Value *> &locals);

  Module module_;
  std::vector<Diagnostic> &diags_;
};

Module ModuleBuilder::build(const std::vector<PFunction> &fns) {
  std::vector<std::pair<const PFunction *, Function *>> defs;
  for (const PFunction &pf : fns) {
    if (module_.getFunction(pf.name)) {
      error(pf.loc, "redefinition of @" + pf.name);
      continue;
    }
    Function *fn = module_.addFunction(pf.name, FunctionType{pf.ret, pf.params});
    fn->setLoc(pf.loc);
    if (pf.isDefinition)
      defs.emplace_back(&pf, fn);
  }
  for (auto [pf, fn] : defs)
    buildBody(*pf, *fn);
  return std::move(module_);
}

Value *ModuleBuilder::resolveOperand(
    const PTyped &operand,
    const std::unordered_map<std::string, Value *> &locals) {
  const POperand &v = operand.value;
  switch (v.kind) {
  case POperand::Kind::Local: {
    auto it = locals.find(v.text);
    if (it == locals.end()) {
      error(v.loc, "use of undefined value '%" + v.text + "'");
      return nullptr;
    }
    if (it->second->type() != operand.type) {
      error(v.loc, "'%" + v.text + "' has type " + it->second->type().str() +
                       " but is used as " + operand.type.str());
      return nullptr;
    }
    return it->second;
  }
  case POperand::Kind::Int:
    if (!operand.type.isInt()) {
      error(v.loc, "integer literal needs an integer type, not " +
                       operand.type.str());
      return nullptr;
    }
    if (auto bits = parseDecimal(v.text))
      return module_.constant(operand.type, *bits);
    error(v.loc, "integer literal '" + v.text + "' does not fit in 128 bits");
    return nullptr;
  case POperand::Kind::Bool:
    if (operand.type != Type::integer(1)) {
      error(v.loc, "'" + v.text + "' needs type i1, not " + operand.type.str());
      return nullptr;
    }
    return module_.constant(operand.type, v.text == "true" ? 1 : 0);
  }
  return nullptr;
}

void ModuleBuilder::buildBody(const PFunction &pf, Function &fn) {
  std::unordered_map<std::string, Value *> locals;
  std::unordered_map<std::string, Block *> labels;
  for (std::size_t i = 0; i < pf.argNames.size(); ++i) {
    const PLabel &name = pf.argNames[i];
    if (!locals.emplace(name.name, fn.arg(i)).second)
      error(name.loc, "redefinition of '%" + name.name + "'");
    fn.arg(i)->setName(name.name);
  }

  // Pass 1: blocks and instruction shells, so forward references resolve.
  std::vector<std::vector<Instruction *>> shells;
  for (const PBlock &pb : pf.blocks) {
    Block *block = fn.addBlock(pb.label);
    block->setLoc(pb.loc);
    if (pb.named && !labels.emplace(pb.label, block).second)
      error(pb.loc, "redefinition of label '" + pb.label + "'");
    shells.emplace_back();
    for (const PInst &pi : pb.insts) {
      Instruction *inst = block->append(
          Instruction::createRaw(pi.op, pi.type, pi.operands.size(), pi.pred));
      inst->setLoc(pi.loc);
      if (pi.hasResult) {
        inst->setName(pi.result);
        if (!locals.emplace(pi.result, inst).second)
          error(pi.loc, "redefinition of '%" + pi.result + "'");
      }
      shells.back().push_back(inst);
    }
  }

  // Pass 2: operands, callees and block references.
  for (std::size_t b = 0; b < pf.blocks.size(); ++b) {
    for (std::size_t k = 0; k < pf.blocks[b].insts.size(); ++k) {
      const PInst &pi = pf.blocks[b].insts[k];
      Instruction *inst = shells[b][k];
      for (std::size_t i = 0; i < pi.operands.size(); ++i)
        inst->setOperand(i, resolveOperand(pi.operands[i], locals));
      std::vector<Block *> targets;
      for (const PLabel &label : pi.labels) {
        auto it = labels.find(label.name);
        if (it == labels.end()) {
          error(label.loc, "use of undefined label '%" + label.name + "'");
          targets.push_back(nullptr);
        } else {
          targets.push_back(it->second);
        }
      }
      inst->setBlocks(std::move(targets));
      if (pi.op == Opcode::Call) {
        Function *callee = module_.getFunction(pi.callee);
        if (!callee)
          error(pi.calleeLoc, "call to undeclared function '@" + pi.callee + "'");
        inst->setCallee(callee);
      }
    }
  }
}

} // namespace

ModuleParse parseModule(std::string_view text) {
  Parser parser(lex(text));
  std::vector<PFunction> fns = parser.parseTopLevel();
  ModuleParse result;
  result.diagnostics = std::move(parser.diagnostics());
  ModuleBuilder builder(result.diagnostics);
  Module module = builder.build(fns);
  if (result.diagnostics.empty())
    result.module.emplace(std::move(module));
  return result;
}

//===----------------------------------------------------------------------===//
// Printer
//===----------------------------------------------------------------------===//

std::string literal(const IntConst &value) {
  if (value.width() == 1)
    return value.bits ? "true" : "false";
  return toDecimal(value.toSigned());
}

SlotNames::SlotNames(const Function &fn) {
  unsigned next = 0;
  auto nameValue = [&](Value *v) {
    std::string name = v->hasName() ? v->name() : std::to_string(next++);
    names_[v] = "%" + name;
    byName_[name] = v;
  };
  for (std::size_t i = 0; i < fn.numArgs(); ++i)
    nameValue(fn.arg(i));
  for (const auto &block : fn.blocks()) {
    labels_[block.get()] =
        block->name().empty() ? std::to_string(next++) : block->name();
    for (const auto &inst : block->instructions())
      if (!inst->type().isVoid())
        nameValue(inst.get());
  }
}

std::string SlotNames::ref(const Value *value) const {
  if (value == nullptr)
    return "<null>";
  if (value->valueKind() == Value::Kind::Constant)
    return literal(static_cast<const Constant *>(value)->toIntConst());
  auto it = names_.find(value);
  return it == names_.end() ? "<badref>" : it->second;
}

std::string SlotNames::label(const Block *block) const {
  auto it = labels_.find(block);
  return it == labels_.end() ? "<badref>" : it->second;
}

Value *SlotNames::lookup(std::string_view name) const {
  auto it = byName_.find(std::string(name));
  return it == byName_.end() ? nullptr : it->second;
}

namespace {

void printInstruction(std::ostream &os, const Instruction &inst,
                      const SlotNames &names) {
  auto typed = [&](const Value *v) {
    return (v ? v->type().str() : std::string("<null>")) + " " + names.ref(v);
  };
  auto labelRef = [&](const Block *b) { return "label %" + names.label(b); };
  os << "  ";
  if (!inst.type().isVoid())
    os << names.ref(&inst) << " = ";
  switch (inst.opcode()) {
  case Opcode::ICmp:
    os << "icmp " << predName(inst.predicate()) << " " << typed(inst.operand(0))
       << ", " << names.ref(inst.operand(1));
    break;
  case Opcode::Select:
    os << "select " << typed(inst.operand(0)) << ", " << typed(inst.operand(1))
       << ", " << typed(inst.operand(2));
    break;
  case Opcode::Call: {
    os << "call " << inst.type().str() << " @"
       << (inst.callee() ? inst.callee()->name() : std::string("<null>")) << "(";
    for (std::size_t i = 0; i < inst.numOperands(); ++i)
      os << (i ? ", " : "") << typed(inst.operand(i));
    os << ")";
    break;
  }
  case Opcode::Phi:
    os << "phi " << inst.type().str();
    for (std::size_t i = 0; i < inst.numOperands(); ++i)
      os << (i ? ", " : " ") << "[ " << names.ref(inst.operand(i)) << ", %"
         << names.label(inst.blocks()[i]) << " ]";
    break;
  case Opcode::Br:
    os << "br " << labelRef(inst.blocks()[0]);
    break;
  case Opcode::CondBr:
    os << "br " << typed(inst.operand(0)) << ", " << labelRef(inst.blocks()[0])
       << ", " << labelRef(inst.blocks()[1]);
    break;
  case Opcode::Ret:
    if (inst.numOperands() == 0)
      os << "ret void";
    else
      os << "ret " << typed(inst.operand(0));
    break;
  default:
    os << opcodeName(inst.opcode()) << " " << typed(inst.operand(0)) << ", "
       << names.ref(inst.operand(1));
    break;
  }
  os << "\n";
}

} // namespace

std::string printFunction(const Function &fn) {
  std::ostringstream os;
  SlotNames names(fn);
  os << (fn.isDeclaration() ? "declare " : "define ") << fn.returnType().str()
     << " @" << fn.name() << "(";
  for (std::size_t i = 0; i < fn.numArgs(); ++i) {
    os << (i ? ", " : "") << fn.arg(i)->type().str();
    if (!fn.isDeclaration())
      os << " " << names.ref(fn.arg(i));
  }
  os << ")";
  if (fn.isDeclaration()) {
    os << "\n";
    return os.str();
  }
  os << " {\n";
  for (const auto &block : fn.blocks()) {
    if (block != fn.blocks().front())
      os << "\n";
    os << names.label(block.get()) << ":\n";
    for (const auto &inst : block->instructions())
      printInstruction(os, *inst, names);
  }
  os << "}\n";
  return os.str();
}

std::string printModule(const Module &module) {
  std::string out;
  const Function *prev = nullptr;
  for (const auto &fn : module.functions()) {
    if (prev && !(prev->isDeclaration() && fn->isDeclaration()))
      out += "\n";
    out += printFunction(*fn);
    prev = fn.get();
  }
  return out;
}

//===----------------------------------------------------------------------===//
// Assignment files
//===----------------------------------------------------------------------===//

AssignmentParse parseAssignments(std::string_view text) {
  AssignmentParse result;
  AssignmentSet set;
  std::unordered_map<std::string, unsigned> seen;
  unsigned lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size())
        break;
      continue;
    }

    std::vector<Token> toks = lex(line, lineNo);
    Parser parser(std::move(toks));
    try {
      Assignment entry;
      entry.line = lineNo;
      Token hole = parser.expect(Tok::Global, "a hole name");
      entry.hole = hole.text;
      parser.expect(Tok::Equal, "'='");
      std::optional<Type> ty;
      if (parser.atType())
        ty = parser.parseType(false);
      POperand value = parser.parseValue();
      if (value.kind == POperand::Kind::Local) {
        entry.valueRef = value.text;
        entry.refType = ty;
      } else {
        if (!ty)
          fail(value.loc, "a constant needs a type, as in 'i32 " + value.text + "'");
        if (!ty->isInt())
          fail(value.loc, "a constant needs an integer type, not " + ty->str());
        if (value.kind == POperand::Kind::Bool) {
          if (ty->width() != 1)
            fail(value.loc, "'" + value.text + "' needs type i1");
          entry.constant = IntConst{*ty, value.text == "true" ? Bits(1) : Bits(0)};
        } else {
          std::optional<Bits> bits = parseDecimal(value.text);
          if (!bits)
            fail(value.loc, "integer literal '" + value.text +
                                "' does not fit in 128 bits");
          entry.constant = IntConst{*ty, truncate(*bits, ty->width())};
        }
      }
      if (parser.peek().kind != Tok::Eof)
        fail(parser.peek().loc, "unexpected '" + parser.peek().text + "' after assignment");
      auto [it, fresh] = seen.emplace(entry.hole, lineNo);
      if (!fresh)
        fail(hole.loc, "duplicate assignment to @" + entry.hole +
                           " (first assigned on line " +
                           std::to_string(it->second) + ")");
      set.entries.push_back(std::move(entry));
    } catch (const ParseFailure &failure) {
      result.diagnostics.push_back(failure.diag);
    }
    if (end == text.size())
      break;
  }
  if (result.diagnostics.empty())
    result.assignments = std::move(set);
  return result;
}

std::string printAssignments(const AssignmentSet &set) {
  std::string out;
  for (const Assignment &entry : set.entries) {
    out += "@" + entry.hole + " = ";
    if (entry.isConstant()) {
      out += entry.constant->type.str() + " " + literal(*entry.constant);
    } else {
      if (entry.refType)
        out += entry.refType->str() + " ";
      out += "%" + entry.valueRef;
    }
    out += "\n";
  }
  return out;
}

} // namespace holeir
