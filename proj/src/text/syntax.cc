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

#include "crasp/text/syntax.h"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "crasp/core/overloaded.h"
#include "crasp/core/semantics.h"

namespace crasp {
namespace {

const std::set<std::string>& Keywords() {
  static const auto* k = new std::set<std::string>{
      "program", "over", "bool", "count", "true", "false", "not",
      "and",     "or",   "min",  "max",   "if",   "then",  "else"};
  return *k;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

enum class Tok { kIdent, kNat, kQuoted, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

absl::StatusOr<std::vector<Token>> Lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0;
  size_t line_start = 0;
  bool at_line_start = true;
  auto err = [&](size_t at, std::string msg) {
    return absl::InvalidArgumentError(absl::StrCat(
        line, ":", at - line_start + 1, ": ", msg));
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      line_start = i;
      at_line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#' && at_line_start) {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    at_line_start = false;
    int col = static_cast<int>(i - line_start) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), line, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      if (j - i > 18) return err(i, "integer literal too large");
      out.push_back({Tok::kNat, std::string(src.substr(i, j - i)), line, col});
      i = j;
    } else if (c == '\'') {
      size_t j = i + 1;
      while (j < src.size() && src[j] != '\'' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '\'') {
        return err(i, "unterminated quoted symbol");
      }
      if (j == i + 1) return err(i, "empty quoted symbol");
      out.push_back(
          {Tok::kQuoted, std::string(src.substr(i + 1, j - i - 1)), line, col});
      i = j + 1;
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::kPunct, ":=", line, col});
      i += 2;
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::kPunct, "<=", line, col});
      i += 2;
    } else if (std::string_view("<=+-()[]{},#%").find(c) !=
               std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), line, col});
      ++i;
    } else {
      return err(i, absl::StrCat("unexpected character '", std::string(1, c),
                                 "'"));
    }
  }
  out.push_back({Tok::kEnd, "", line, static_cast<int>(i - line_start) + 1});
  return out;
}

constexpr int kMaxDepth = 256;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  absl::StatusOr<Program> ParseFile() {
    Program p;
    if (absl::Status s = ExpectWord("program"); !s.ok()) return s;
    absl::StatusOr<std::string> name = Identifier("program name");
    if (!name.ok()) return name.status();
    p.name = *name;
    if (absl::Status s = ExpectWord("over"); !s.ok()) return s;
    if (absl::Status s = Expect("{"); !s.ok()) return s;
    std::vector<std::string> symbols;
    while (true) {
      const Token& t = Peek();
      if (t.kind == Tok::kQuoted ||
          (t.kind == Tok::kIdent && !Keywords().count(t.text))) {
        symbols.push_back(t.text);
        ++pos_;
      } else {
        return Error(t, "expected an alphabet symbol");
      }
      if (IsPunct(",")) {
        ++pos_;
        continue;
      }
      if (absl::Status s = Expect("}"); !s.ok()) return s;
      break;
    }
    absl::StatusOr<Alphabet> alphabet = Alphabet::Create(symbols);
    if (!alphabet.ok()) {
      return Error(toks_[pos_ - 1], std::string(alphabet.status().message()));
    }
    p.alphabet = *alphabet;
    alphabet_ = &p.alphabet;

    // Pre-pass so references to later rules still parse; ordering is
    // diagnosed by ValidateProgram.
    for (size_t i = pos_; i + 2 < toks_.size(); ++i) {
      if (toks_[i].kind == Tok::kIdent &&
          (toks_[i].text == "bool" || toks_[i].text == "count") &&
          toks_[i + 1].kind == Tok::kIdent && toks_[i + 2].text == ":=") {
        kinds_.emplace(toks_[i + 1].text, toks_[i].text == "bool");
      }
    }

    while (Peek().kind != Tok::kEnd) {
      const Token& kw = Peek();
      if (kw.kind != Tok::kIdent || (kw.text != "bool" && kw.text != "count")) {
        return Error(kw, "expected 'bool' or 'count'");
      }
      ++pos_;
      bool is_bool = kw.text == "bool";
      absl::StatusOr<std::string> rule = Identifier("rule name");
      if (!rule.ok()) return rule.status();
      if (absl::Status s = Expect(":="); !s.ok()) return s;
      if (is_bool) {
        absl::StatusOr<BExp> body = ParseBExp();
        if (!body.ok()) return body.status();
        p.rules.push_back(BoolRule(*rule, *body));
      } else {
        absl::StatusOr<CExp> body = ParseCExp();
        if (!body.ok()) return body.status();
        p.rules.push_back(CountRule(*rule, *body));
      }
    }
    if (p.rules.empty()) return Error(Peek(), "program has no rules");
    return p;
  }

 private:
  struct Memo {
    bool ok;
    std::optional<BExp> b;
    std::optional<CExp> c;
    absl::Status status;
    size_t end;
  };

  const Token& Peek(size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool IsPunct(std::string_view p, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Tok::kPunct && t.text == p;
  }
  bool IsWord(std::string_view w, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Tok::kIdent && t.text == w;
  }

  static std::string Describe(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return absl::StrCat("'", t.text, "'");
  }

  absl::Status Error(const Token& t, std::string_view msg) const {
    return absl::InvalidArgumentError(
        absl::StrCat(t.line, ":", t.col, ": ", std::string(msg)));
  }
  absl::Status Expect(std::string_view p) {
    if (!IsPunct(p)) {
      return Error(Peek(), absl::StrCat("expected '", std::string(p),
                                        "' but found ", Describe(Peek())));
    }
    ++pos_;
    return absl::OkStatus();
  }
  absl::Status ExpectWord(std::string_view w) {
    if (!IsWord(w)) {
      return Error(Peek(), absl::StrCat("expected '", std::string(w),
                                        "' but found ", Describe(Peek())));
    }
    ++pos_;
    return absl::OkStatus();
  }
  absl::StatusOr<std::string> Identifier(std::string_view what) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || Keywords().count(t.text)) {
      return Error(t, absl::StrCat("expected ", std::string(what), " but found ",
                                   Describe(t)));
    }
    ++pos_;
    return t.text;
  }
  absl::StatusOr<int64_t> Natural() {
    const Token& t = Peek();
    if (t.kind != Tok::kNat) {
      return Error(t, absl::StrCat("expected a number but found ", Describe(t)));
    }
    ++pos_;
    return std::stoll(t.text);
  }

  struct DepthGuard {
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  // bexp := and {'or' and}
  absl::StatusOr<BExp> ParseBExp() {
    size_t start = pos_;
    if (auto it = bmemo_.find(start); it != bmemo_.end()) {
      pos_ = it->second.end;
      if (!it->second.ok) return it->second.status;
      return *it->second.b;
    }
    DepthGuard g(depth_);
    absl::StatusOr<BExp> r = depth_ > kMaxDepth
                                 ? absl::StatusOr<BExp>(Error(Peek(), "nesting too deep"))
                                 : ParseOr();
    bmemo_[start] = r.ok() ? Memo{true, *r, std::nullopt, {}, pos_}
                           : Memo{false, std::nullopt, std::nullopt,
                                  r.status(), pos_};
    return r;
  }

  absl::StatusOr<BExp> ParseOr() {
    absl::StatusOr<BExp> lhs = ParseAnd();
    if (!lhs.ok()) return lhs;
    BExp acc = *lhs;
    while (IsWord("or")) {
      ++pos_;
      absl::StatusOr<BExp> rhs = ParseAnd();
      if (!rhs.ok()) return rhs;
      acc = Or(acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<BExp> ParseAnd() {
    absl::StatusOr<BExp> lhs = ParseNot();
    if (!lhs.ok()) return lhs;
    BExp acc = *lhs;
    while (IsWord("and")) {
      ++pos_;
      absl::StatusOr<BExp> rhs = ParseNot();
      if (!rhs.ok()) return rhs;
      acc = And(acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<BExp> ParseNot() {
    if (IsWord("not")) {
      ++pos_;
      DepthGuard g(depth_);
      if (depth_ > kMaxDepth) return Error(Peek(), "nesting too deep");
      absl::StatusOr<BExp> inner = ParseNot();
      if (!inner.ok()) return inner;
      return Not(*inner);
    }
    return ParseBAtom();
  }

  bool StartsCount(const Token& t) const {
    if (t.kind == Tok::kNat) return true;
    if (t.kind == Tok::kPunct) return t.text == "#" || t.text == "(";
    if (t.kind != Tok::kIdent) return false;
    if (t.text == "min" || t.text == "max" || t.text == "if") return true;
    auto it = kinds_.find(t.text);
    return it != kinds_.end() && !it->second;
  }

  absl::StatusOr<BExp> ParseComparison() {
    absl::StatusOr<CExp> lhs = ParseCExp();
    if (!lhs.ok()) return lhs.status();
    CmpOp op;
    if (IsPunct("=")) {
      op = CmpOp::kEq;
    } else if (IsPunct("<=")) {
      op = CmpOp::kLe;
    } else if (IsPunct("<")) {
      op = CmpOp::kLt;
    } else {
      return Error(Peek(), absl::StrCat("expected a comparison but found ",
                                        Describe(Peek())));
    }
    ++pos_;
    absl::StatusOr<CExp> rhs = ParseCExp();
    if (!rhs.ok()) return rhs.status();
    return Compare(op, *lhs, *rhs);
  }

  absl::StatusOr<BExp> ParseBAtom() {
    const Token& t = Peek();
    if (IsWord("true")) {
      ++pos_;
      return True();
    }
    if (IsWord("false")) {
      ++pos_;
      return False();
    }
    if (t.kind == Tok::kQuoted) {
      std::optional<Symbol> s = alphabet_->Find(t.text);
      if (!s) {
        return Error(t, absl::StrCat("'", t.text, "' is not in the alphabet"));
      }
      ++pos_;
      return Letter(*s);
    }
    if (t.kind == Tok::kNat && IsPunct("%", 1)) {
      int64_t m = std::stoll(t.text);
      pos_ += 2;
      absl::StatusOr<int64_t> o = Natural();
      if (!o.ok()) return o.status();
      if (m < 1) return Error(t, "periodic modulus must be >= 1");
      if (*o >= m) {
        return Error(t, absl::StrCat("periodic offset ", *o,
                                     " must be smaller than the modulus ", m));
      }
      return Periodic(static_cast<int>(m), static_cast<int>(*o));
    }
    if (t.kind == Tok::kIdent && !Keywords().count(t.text)) {
      auto it = kinds_.find(t.text);
      if (it == kinds_.end()) {
        return Error(t, absl::StrCat("unknown rule '", t.text, "'"));
      }
      if (it->second) {
        ++pos_;
        return BoolRef(t.text);
      }
    }
    if (IsPunct("(")) {
      size_t start = pos_;
      absl::StatusOr<BExp> cmp = ParseComparison();
      if (cmp.ok()) return cmp;
      pos_ = start + 1;
      absl::StatusOr<BExp> inner = ParseBExp();
      if (!inner.ok()) return inner;
      if (absl::Status s = Expect(")"); !s.ok()) return s;
      return inner;
    }
    if (StartsCount(t)) return ParseComparison();
    return Error(t, absl::StrCat("expected a Boolean expression but found ",
                                 Describe(t)));
  }

  // cexp := term {('+' | '-') term}
  absl::StatusOr<CExp> ParseCExp() {
    size_t start = pos_;
    if (auto it = cmemo_.find(start); it != cmemo_.end()) {
      pos_ = it->second.end;
      if (!it->second.ok) return it->second.status;
      return *it->second.c;
    }
    DepthGuard g(depth_);
    absl::StatusOr<CExp> r =
        depth_ > kMaxDepth
            ? absl::StatusOr<CExp>(Error(Peek(), "nesting too deep"))
            : ParseSum();
    cmemo_[start] = r.ok() ? Memo{true, std::nullopt, *r, {}, pos_}
                           : Memo{false, std::nullopt, std::nullopt,
                                  r.status(), pos_};
    return r;
  }

  absl::StatusOr<CExp> ParseSum() {
    absl::StatusOr<CExp> lhs = ParseTerm();
    if (!lhs.ok()) return lhs;
    CExp acc = *lhs;
    while (IsPunct("+") || IsPunct("-")) {
      ArithOp op = IsPunct("+") ? ArithOp::kAdd : ArithOp::kSub;
      ++pos_;
      absl::StatusOr<CExp> rhs = ParseTerm();
      if (!rhs.ok()) return rhs;
      acc = Arith(op, acc, *rhs);
    }
    return acc;
  }

  absl::StatusOr<CExp> ParseTerm() {
    const Token& t = Peek();
    if (t.kind == Tok::kNat) {
      ++pos_;
      return Const(std::stoll(t.text));
    }
    if (IsPunct("#")) {
      ++pos_;
      if (IsPunct("[")) {
        ++pos_;
        absl::StatusOr<int64_t> rs = Natural();
        if (!rs.ok()) return rs.status();
        if (absl::Status s = Expect(","); !s.ok()) return s;
        absl::StatusOr<int64_t> re = Natural();
        if (!re.ok()) return re.status();
        if (absl::Status s = Expect("]"); !s.ok()) return s;
        if (*rs > *re) {
          return Error(t, absl::StrCat("window bounds [", *rs, ",", *re,
                                       "] must satisfy rs <= re"));
        }
        if (*re > 1'000'000) return Error(t, "window bound too large");
        absl::StatusOr<BExp> body = ParenBExp();
        if (!body.ok()) return body.status();
        return CountWindow(static_cast<int>(*rs), static_cast<int>(*re), *body);
      }
      absl::StatusOr<BExp> body = ParenBExp();
      if (!body.ok()) return body.status();
      return CountAll(*body);
    }
    if (IsWord("min") || IsWord("max")) {
      ArithOp op = IsWord("min") ? ArithOp::kMin : ArithOp::kMax;
      ++pos_;
      if (absl::Status s = Expect("("); !s.ok()) return s;
      absl::StatusOr<CExp> a = ParseCExp();
      if (!a.ok()) return a;
      if (absl::Status s = Expect(","); !s.ok()) return s;
      absl::StatusOr<CExp> b = ParseCExp();
      if (!b.ok()) return b;
      if (absl::Status s = Expect(")"); !s.ok()) return s;
      return Arith(op, *a, *b);
    }
    if (IsWord("if")) {
      ++pos_;
      absl::StatusOr<BExp> c = ParseBExp();
      if (!c.ok()) return c.status();
      if (absl::Status s = ExpectWord("then"); !s.ok()) return s;
      absl::StatusOr<CExp> a = ParseCExp();
      if (!a.ok()) return a;
      if (absl::Status s = ExpectWord("else"); !s.ok()) return s;
      absl::StatusOr<CExp> b = ParseCExp();
      if (!b.ok()) return b;
      return Ite(*c, *a, *b);
    }
    if (IsPunct("(")) {
      ++pos_;
      absl::StatusOr<CExp> inner = ParseCExp();
      if (!inner.ok()) return inner;
      if (absl::Status s = Expect(")"); !s.ok()) return s;
      return inner;
    }
    if (t.kind == Tok::kIdent && !Keywords().count(t.text)) {
      auto it = kinds_.find(t.text);
      if (it == kinds_.end()) {
        return Error(t, absl::StrCat("unknown rule '", t.text, "'"));
      }
      if (it->second) {
        return Error(t, absl::StrCat("'", t.text,
                                     "' is a Boolean rule, expected a count"));
      }
      ++pos_;
      return CountRef(t.text);
    }
    return Error(t, absl::StrCat("expected a count expression but found ",
                                 Describe(t)));
  }

  absl::StatusOr<BExp> ParenBExp() {
    if (absl::Status s = Expect("("); !s.ok()) return s;
    absl::StatusOr<BExp> body = ParseBExp();
    if (!body.ok()) return body;
    if (absl::Status s = Expect(")"); !s.ok()) return s;
    return body;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int depth_ = 0;
  const Alphabet* alphabet_ = nullptr;
  std::map<std::string, bool> kinds_;  // rule name -> is Boolean
  std::map<size_t, Memo> bmemo_;
  std::map<size_t, Memo> cmemo_;
};

// Printer precedence levels for Boolean expressions.
constexpr int kOrLevel = 1;
constexpr int kAndLevel = 2;
constexpr int kNotLevel = 3;

class Printer {
 public:
  explicit Printer(const Alphabet& a) : alphabet_(a) {}

  std::string B(const BExp& e, int context) const {
    return std::visit(
        Overloaded{
            [](const ast::True&) -> std::string { return "true"; },
            [](const ast::False&) -> std::string { return "false"; },
            [&](const ast::Letter& l) -> std::string {
              return absl::StrCat("'", alphabet_.name(l.symbol), "'");
            },
            [](const ast::BoolRef& r) -> std::string { return r.rule; },
            [&](const ast::Not& n) -> std::string {
              return Wrap(absl::StrCat("not ", B(n.operand, kNotLevel)),
                          context > kNotLevel);
            },
            [&](const ast::Junction& j) -> std::string {
              int level = j.op == BoolOp::kAnd ? kAndLevel : kOrLevel;
              std::string s =
                  absl::StrCat(B(j.lhs, level),
                               j.op == BoolOp::kAnd ? " and " : " or ",
                               B(j.rhs, level + 1));
              return Wrap(s, context > level);
            },
            [&](const ast::Compare& c) -> std::string {
              return absl::StrCat(C(c.lhs, false), " ", ToString(c.op), " ",
                                  C(c.rhs, false));
            },
            [](const ast::Periodic& p) -> std::string {
              return absl::StrCat(p.modulus, "%", p.offset);
            }},
        e.node());
  }

  // `in_sum` marks operands of + and -, `right` the right operand.
  std::string C(const CExp& e, bool in_sum, bool right = false) const {
    return std::visit(
        Overloaded{
            [](const ast::Constant& k) -> std::string {
              return absl::StrCat(k.value);
            },
            [](const ast::CountRef& r) -> std::string { return r.rule; },
            [&](const ast::CountAll& c) -> std::string {
              return absl::StrCat("#(", B(c.operand, 0), ")");
            },
            [&](const ast::CountWindow& w) -> std::string {
              return absl::StrCat("#[", w.window_start, ",", w.window_end,
                                  "](", B(w.operand, 0), ")");
            },
            [&](const ast::Arith& a) -> std::string {
              if (a.op == ArithOp::kMin || a.op == ArithOp::kMax) {
                return absl::StrCat(ToString(a.op), "(", C(a.lhs, false), ", ",
                                    C(a.rhs, false), ")");
              }
              std::string s = absl::StrCat(C(a.lhs, true), " ", ToString(a.op),
                                           " ", C(a.rhs, true, true));
              return Wrap(s, in_sum && right);
            },
            [&](const ast::Ite& i) -> std::string {
              std::string s =
                  absl::StrCat("if ", B(i.cond, 0), " then ",
                               C(i.then_value, false), " else ",
                               C(i.else_value, false));
              return Wrap(s, in_sum);
            }},
        e.node());
  }

 private:
  static std::string Wrap(std::string s, bool paren) {
    return paren ? absl::StrCat("(", s, ")") : s;
  }
  const Alphabet& alphabet_;
};

}  // namespace

absl::StatusOr<Program> ParseProgram(std::string_view text) {
  absl::StatusOr<std::vector<Token>> toks = Lex(text);
  if (!toks.ok()) return toks.status();
  Parser parser(*std::move(toks));
  absl::StatusOr<Program> p = parser.ParseFile();
  if (!p.ok()) return p;
  if (absl::Status s = ValidateProgram(*p); !s.ok()) return s;
  return p;
}

std::string SymbolToken(const std::string& symbol) {
  if (IsIdentifier(symbol) && !Keywords().count(symbol)) return symbol;
  return absl::StrCat("'", symbol, "'");
}

std::string PrintBExp(const BExp& e, const Alphabet& alphabet) {
  return Printer(alphabet).B(e, 0);
}

std::string PrintCExp(const CExp& e, const Alphabet& alphabet) {
  return Printer(alphabet).C(e, false);
}

std::string PrintProgram(const Program& p) {
  std::string out = absl::StrCat(
      "program ", p.name, " over {",
      absl::StrJoin(p.alphabet.symbols(), ", ",
                    [](std::string* o, const std::string& s) {
                      o->append(SymbolToken(s));
                    }),
      "}\n");
  Printer printer(p.alphabet);
  for (const Rule& r : p.rules) {
    if (r.is_bool()) {
      absl::StrAppend(&out, "bool ", r.name, " := ",
                      printer.B(r.bool_body(), 0), "\n");
    } else {
      absl::StrAppend(&out, "count ", r.name, " := ",
                      printer.C(r.count_body(), false), "\n");
    }
  }
  return out;
}

}  // namespace crasp
