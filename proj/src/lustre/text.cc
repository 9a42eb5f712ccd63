// Copyright 2026 The C-RASP Tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crasp/lustre/text.h"

#include <cctype>
#include <map>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace crasp::lustre {
namespace {

// Binding strength, loosest first.
enum Level {
  kIteLevel = 0,
  kArrowLevel = 1,
  kOrLevel = 2,
  kAndLevel = 3,
  kCmpLevel = 4,
  kNotLevel = 5,
  kAddLevel = 6,
  kModLevel = 7,
  kAtomLevel = 8,
};

int LevelOf(const Expr& e) {
  switch (e->op) {
    case Op::kIte:
      return kIteLevel;
    case Op::kArrow:
      return kArrowLevel;
    case Op::kOr:
      return kOrLevel;
    case Op::kAnd:
      return kAndLevel;
    case Op::kEq:
    case Op::kLe:
    case Op::kLt:
      return kCmpLevel;
    case Op::kNot:
      return kNotLevel;
    case Op::kAdd:
    case Op::kSub:
      return kAddLevel;
    case Op::kMod:
      return kModLevel;
    case Op::kConst:
      return e->value < 0 ? kIteLevel : kAtomLevel;
    default:
      return kAtomLevel;
  }
}

const char* Infix(Op op) {
  switch (op) {
    case Op::kArrow:
      return " -> ";
    case Op::kOr:
      return " or ";
    case Op::kAnd:
      return " and ";
    case Op::kEq:
      return " = ";
    case Op::kLe:
      return " <= ";
    case Op::kLt:
      return " < ";
    case Op::kAdd:
      return " + ";
    case Op::kSub:
      return " - ";
    case Op::kMod:
      return " mod ";
    default:
      return " ? ";
  }
}

// Prints `e` so that it parses back at binding strength `min_level`.
std::string Print(const Expr& e, int min_level) {
  std::string s;
  int level = LevelOf(e);
  switch (e->op) {
    case Op::kTrue:
      s = "true";
      break;
    case Op::kFalse:
      s = "false";
      break;
    case Op::kConst:
      s = e->value < 0 ? absl::StrCat("(", e->value, ")")
                       : absl::StrCat(e->value);
      level = kAtomLevel;
      break;
    case Op::kVar:
      s = e->name;
      break;
    case Op::kPre:
      s = absl::StrCat("pre(", Print(e->args[0], kIteLevel), ")");
      break;
    case Op::kNot:
      s = absl::StrCat("not ", Print(e->args[0], kNotLevel));
      break;
    case Op::kIte:
      s = absl::StrCat("if ", Print(e->args[0], kIteLevel), " then ",
                       Print(e->args[1], kIteLevel), " else ",
                       Print(e->args[2], kIteLevel));
      break;
    case Op::kArrow:
      s = absl::StrCat(Print(e->args[0], level + 1), Infix(e->op),
                       Print(e->args[1], level));
      break;
    case Op::kEq:
    case Op::kLe:
    case Op::kLt:
      s = absl::StrCat(Print(e->args[0], level + 1), Infix(e->op),
                       Print(e->args[1], level + 1));
      break;
    default:  // left-associative binary operators
      s = absl::StrCat(Print(e->args[0], level), Infix(e->op),
                       Print(e->args[1], level + 1));
      break;
  }
  if (level < min_level) return absl::StrCat("(", s, ")");
  return s;
}

// ---------------------------------------------------------------- reader

enum class Tok { kIdent, kInt, kString, kPunct, kPragma, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

absl::StatusOr<std::vector<Token>> Lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  size_t line_start = 0;
  size_t i = 0;
  auto err = [&](std::string msg) {
    return absl::InvalidArgumentError(
        absl::StrCat(line, ":", i - line_start + 1, ": ", msg));
  };
  while (i < src.size()) {
    char c = src[i];
    int col = static_cast<int>(i - line_start) + 1;
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (src.substr(i, 3) == "--%") {
      size_t j = i + 3;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back({Tok::kPragma, std::string(src.substr(i + 3, j - i - 3)),
                     line, col});
      i = j;
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (src.substr(i, 2) == "(*") {
      size_t end = src.find("*)", i + 2);
      if (end == std::string_view::npos) return err("unterminated comment");
      for (size_t k = i; k < end; ++k) {
        if (src[k] == '\n') {
          ++line;
          line_start = k + 1;
        }
      }
      i = end + 2;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      if (j - i > 18) return err("integer literal too large");
      out.push_back({Tok::kInt, std::string(src.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    if (c == '"') {
      size_t end = src.find('"', i + 1);
      if (end == std::string_view::npos) return err("unterminated string");
      out.push_back(
          {Tok::kString, std::string(src.substr(i + 1, end - i - 1)), line, col});
      i = end + 1;
      continue;
    }
    for (std::string_view p : {"->", "<=", "<", "=", "+", "-", "(", ")", ";",
                               ":", ",", "."}) {
      if (src.substr(i, p.size()) == p) {
        out.push_back({Tok::kPunct, std::string(p), line, col});
        i += p.size();
        goto next;
      }
    }
    return err(absl::StrCat("unexpected character '", std::string(1, c), "'"));
  next:;
  }
  out.push_back({Tok::kEnd, "", line, static_cast<int>(i - line_start) + 1});
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> toks) : toks_(std::move(toks)) {}

  absl::StatusOr<Node> Read() {
    Node node;
    if (absl::Status s = Word("node"); !s.ok()) return s;
    absl::StatusOr<std::string> name = Ident();
    if (!name.ok()) return name.status();
    node.name = *name;
    if (absl::Status s = Punct("("); !s.ok()) return s;
    absl::StatusOr<std::string> input = Ident();
    if (!input.ok()) return input.status();
    node.input = *input;
    if (absl::Status s = Punct(":"); !s.ok()) return s;
    if (absl::Status s = Word("int"); !s.ok()) return s;
    if (absl::Status s = Punct(")"); !s.ok()) return s;
    sorts_[node.input] = Sort::kInt;
    if (absl::Status s = Word("returns"); !s.ok()) return s;
    if (absl::Status s = Punct("("); !s.ok()) return s;
    if (!IsPunct(")")) {
      while (true) {
        absl::StatusOr<std::vector<VarDecl>> group = DeclGroup();
        if (!group.ok()) return group.status();
        for (const VarDecl& d : *group) {
          node.locals.push_back(d);
          node.outputs.push_back(d.name);
        }
        if (IsPunct(";")) {
          ++pos_;
          if (IsPunct(")")) break;
          continue;
        }
        break;
      }
    }
    if (absl::Status s = Punct(")"); !s.ok()) return s;
    if (absl::Status s = Punct(";"); !s.ok()) return s;
    if (IsWord("var")) {
      ++pos_;
      while (!IsWord("let")) {
        absl::StatusOr<std::vector<VarDecl>> group = DeclGroup();
        if (!group.ok()) return group.status();
        for (const VarDecl& d : *group) node.locals.push_back(d);
        if (absl::Status s = Punct(";"); !s.ok()) return s;
      }
    }
    for (const VarDecl& d : node.locals) {
      if (sorts_.count(d.name)) {
        return Error(Peek(), absl::StrCat("'", d.name, "' declared twice"));
      }
      sorts_[d.name] = d.sort;
    }
    if (absl::Status s = Word("let"); !s.ok()) return s;
    while (!IsWord("tel")) {
      const Token& t = Peek();
      if (t.kind == Tok::kPragma && t.text == "MAIN") {
        ++pos_;
        if (IsPunct(";")) ++pos_;
        continue;
      }
      if ((t.kind == Tok::kPragma && t.text == "PROPERTY") ||
          (t.kind == Tok::kIdent && t.text == "check")) {
        if (node.check) return Error(t, "only one property is supported");
        ++pos_;
        if (Peek().kind == Tok::kString) {
          node.property_name = Peek().text;
          ++pos_;
        }
        absl::StatusOr<Expr> e = ParseExpr();
        if (!e.ok()) return e.status();
        node.check = *e;
        if (absl::Status s = Punct(";"); !s.ok()) return s;
        continue;
      }
      absl::StatusOr<std::string> var = Ident();
      if (!var.ok()) return var.status();
      if (absl::Status s = Punct("="); !s.ok()) return s;
      absl::StatusOr<Expr> e = ParseExpr();
      if (!e.ok()) return e.status();
      node.equations.push_back({*var, *e});
      if (absl::Status s = Punct(";"); !s.ok()) return s;
    }
    ++pos_;
    if (IsPunct(";") || IsPunct(".")) ++pos_;
    if (Peek().kind != Tok::kEnd) {
      return Error(Peek(), "expected end of input after 'tel'");
    }
    return node;
  }

 private:
  const Token& Peek() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
  bool IsPunct(std::string_view p) const {
    return Peek().kind == Tok::kPunct && Peek().text == p;
  }
  bool IsWord(std::string_view w) const {
    return Peek().kind == Tok::kIdent && Peek().text == w;
  }
  absl::Status Error(const Token& t, std::string msg) const {
    return absl::InvalidArgumentError(
        absl::StrCat(t.line, ":", t.col, ": ", msg));
  }
  std::string Found() const {
    return Peek().kind == Tok::kEnd ? "end of input"
                                    : absl::StrCat("'", Peek().text, "'");
  }
  absl::Status Punct(std::string_view p) {
    if (!IsPunct(p)) {
      return Error(Peek(),
                   absl::StrCat("expected '", std::string(p), "' but found ",
                                Found()));
    }
    ++pos_;
    return absl::OkStatus();
  }
  absl::Status Word(std::string_view w) {
    if (!IsWord(w)) {
      return Error(Peek(),
                   absl::StrCat("expected '", std::string(w), "' but found ",
                                Found()));
    }
    ++pos_;
    return absl::OkStatus();
  }
  absl::StatusOr<std::string> Ident() {
    if (Peek().kind != Tok::kIdent) {
      return Error(Peek(), absl::StrCat("expected an identifier but found ",
                                        Found()));
    }
    return toks_[pos_++].text;
  }

  // a, b : sort
  absl::StatusOr<std::vector<VarDecl>> DeclGroup() {
    std::vector<std::string> names;
    while (true) {
      absl::StatusOr<std::string> n = Ident();
      if (!n.ok()) return n.status();
      names.push_back(*n);
      if (!IsPunct(",")) break;
      ++pos_;
    }
    if (absl::Status s = Punct(":"); !s.ok()) return s;
    Sort sort;
    if (IsWord("int")) {
      sort = Sort::kInt;
    } else if (IsWord("bool")) {
      sort = Sort::kBool;
    } else {
      return Error(Peek(), absl::StrCat("expected 'int' or 'bool' but found ",
                                        Found()));
    }
    ++pos_;
    std::vector<VarDecl> out;
    for (std::string& n : names) out.push_back({std::move(n), sort});
    return out;
  }

  absl::StatusOr<Expr> ParseExpr() {
    if (++depth_ > 512) return Error(Peek(), "nesting too deep");
    absl::StatusOr<Expr> e = ParseIte();
    --depth_;
    return e;
  }

  absl::StatusOr<Expr> ParseIte() {
    if (!IsWord("if")) return ParseArrow();
    ++pos_;
    absl::StatusOr<Expr> c = ParseExpr();
    if (!c.ok()) return c;
    if (absl::Status s = Word("then"); !s.ok()) return s;
    absl::StatusOr<Expr> t = ParseExpr();
    if (!t.ok()) return t;
    if (absl::Status s = Word("else"); !s.ok()) return s;
    absl::StatusOr<Expr> e = ParseExpr();
    if (!e.ok()) return e;
    return Ite(*c, *t, *e);
  }

  absl::StatusOr<Expr> ParseArrow() {
    absl::StatusOr<Expr> lhs = ParseOr();
    if (!lhs.ok() || !IsPunct("->")) return lhs;
    ++pos_;
    if (++depth_ > 512) return Error(Peek(), "nesting too deep");
    absl::StatusOr<Expr> rhs = IsWord("if") ? ParseIte() : ParseArrow();
    --depth_;
    if (!rhs.ok()) return rhs;
    return Arrow(*lhs, *rhs);
  }

  absl::StatusOr<Expr> ParseOr() {
    absl::StatusOr<Expr> acc = ParseAnd();
    while (acc.ok() && IsWord("or")) {
      ++pos_;
      absl::StatusOr<Expr> rhs = ParseAnd();
      if (!rhs.ok()) return rhs;
      acc = Or(*acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<Expr> ParseAnd() {
    absl::StatusOr<Expr> acc = ParseCmp();
    while (acc.ok() && IsWord("and")) {
      ++pos_;
      absl::StatusOr<Expr> rhs = ParseCmp();
      if (!rhs.ok()) return rhs;
      acc = And(*acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<Expr> ParseCmp() {
    absl::StatusOr<Expr> lhs = ParseNot();
    if (!lhs.ok()) return lhs;
    Op op;
    if (IsPunct("=")) {
      op = Op::kEq;
    } else if (IsPunct("<=")) {
      op = Op::kLe;
    } else if (IsPunct("<")) {
      op = Op::kLt;
    } else {
      return lhs;
    }
    ++pos_;
    absl::StatusOr<Expr> rhs = ParseNot();
    if (!rhs.ok()) return rhs;
    switch (op) {
      case Op::kEq:
        return Eq(*lhs, *rhs);
      case Op::kLe:
        return Le(*lhs, *rhs);
      default:
        return Lt(*lhs, *rhs);
    }
  }

  absl::StatusOr<Expr> ParseNot() {
    if (!IsWord("not")) return ParseAdd();
    ++pos_;
    if (++depth_ > 512) return Error(Peek(), "nesting too deep");
    absl::StatusOr<Expr> e = ParseNot();
    --depth_;
    if (!e.ok()) return e;
    return Not(*e);
  }

  absl::StatusOr<Expr> ParseAdd() {
    absl::StatusOr<Expr> acc = ParseMod();
    while (acc.ok() && (IsPunct("+") || IsPunct("-"))) {
      bool add = IsPunct("+");
      ++pos_;
      absl::StatusOr<Expr> rhs = ParseMod();
      if (!rhs.ok()) return rhs;
      acc = add ? Add(*acc, *rhs) : Sub(*acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<Expr> ParseMod() {
    absl::StatusOr<Expr> acc = ParseAtom();
    while (acc.ok() && IsWord("mod")) {
      ++pos_;
      absl::StatusOr<Expr> rhs = ParseAtom();
      if (!rhs.ok()) return rhs;
      acc = Mod(*acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<Expr> ParseAtom() {
    const Token& t = Peek();
    if (t.kind == Tok::kInt) {
      ++pos_;
      return Const(std::stoll(t.text));
    }
    if (IsPunct("-") && toks_[pos_ + 1].kind == Tok::kInt) {
      pos_ += 2;
      return Const(-std::stoll(toks_[pos_ - 1].text));
    }
    if (IsPunct("(")) {
      ++pos_;
      absl::StatusOr<Expr> e = ParseExpr();
      if (!e.ok()) return e;
      if (absl::Status s = Punct(")"); !s.ok()) return s;
      return e;
    }
    if (IsWord("true")) {
      ++pos_;
      return True();
    }
    if (IsWord("false")) {
      ++pos_;
      return False();
    }
    if (IsWord("pre")) {
      ++pos_;
      if (++depth_ > 512) return Error(Peek(), "nesting too deep");
      absl::StatusOr<Expr> e = ParseAtom();
      --depth_;
      if (!e.ok()) return e;
      return Pre(*e);
    }
    if (t.kind == Tok::kIdent) {
      auto it = sorts_.find(t.text);
      if (it == sorts_.end()) {
        return Error(t, absl::StrCat("undeclared variable '", t.text, "'"));
      }
      ++pos_;
      return Var(t.text, it->second);
    }
    return Error(t, absl::StrCat("expected an expression but found ", Found()));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int depth_ = 0;
  std::map<std::string, Sort> sorts_;
};

}  // namespace

std::string PrintExpr(const Expr& e) { return Print(e, kIteLevel); }

std::string PrintNode(const Node& node) {
  std::string out;
  std::vector<std::string> returns;
  for (const std::string& o : node.outputs) {
    returns.push_back(absl::StrCat(
        o, ": ", *node.SortOf(o) == Sort::kBool ? "bool" : "int"));
  }
  absl::StrAppend(&out, "node ", node.name, "(", node.input, ": int) returns (",
                  absl::StrJoin(returns, "; "), ");\n");
  std::vector<const VarDecl*> vars;
  for (const VarDecl& d : node.locals) {
    bool is_output = false;
    for (const std::string& o : node.outputs) is_output |= o == d.name;
    if (!is_output) vars.push_back(&d);
  }
  if (!vars.empty()) {
    out += "var\n";
    for (const VarDecl* d : vars) {
      absl::StrAppend(&out, "  ", d->name, ": ",
                      d->sort == Sort::kBool ? "bool" : "int", ";\n");
    }
  }
  out += "let\n";
  for (const Equation& eq : node.equations) {
    absl::StrAppend(&out, "  ", eq.var, " = ", PrintExpr(eq.rhs), ";\n");
  }
  if (node.check) {
    absl::StrAppend(&out, "  --%PROPERTY \"", node.property_name, "\" ",
                    PrintExpr(*node.check), ";\n");
  }
  out += "  --%MAIN;\ntel\n";
  return out;
}

absl::StatusOr<Node> ParseNode(std::string_view text) {
  absl::StatusOr<std::vector<Token>> toks = Lex(text);
  if (!toks.ok()) return toks.status();
  return Reader(*std::move(toks)).Read();
}

}  // namespace crasp::lustre
