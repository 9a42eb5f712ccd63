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

#include "crasp/c2l/translate.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "crasp/core/overloaded.h"
#include "crasp/core/semantics.h"

namespace crasp::c2l {
namespace {

namespace l = ::crasp::lustre;

// Kind2 / Lustre reserved words that cannot be variable names.
const std::set<std::string>& Reserved() {
  static const auto* kWords = new std::set<std::string>{
      "and",     "assert",   "bool",    "const",  "contract", "current",
      "div",     "else",     "false",   "fby",    "function", "if",
      "include", "int",      "let",     "mod",    "node",     "not",
      "or",      "pre",      "real",    "returns", "tel",     "then",
      "true",    "type",     "var",     "when",   "with",     "xor",
      "merge",   "activate", "restart", "every",  "check",    "assume",
      "guarantee", "mode",   "require", "ensure", "import",   "main",
  };
  return *kWords;
}

std::string Sanitize(const std::string& base) {
  std::string out;
  for (char c : base) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    out.push_back(ok ? c : '_');
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(0, "v");
  return out;
}

class Translator {
 public:
  Translator(const Program& p, const SymbolCodec& codec,
             const TranslateOptions& options, NameRegistry& names,
             Fragment& out)
      : p_(p), codec_(codec), options_(options), names_(names), out_(out) {}

  absl::Status Run() {
    // Rule variables first so that fresh names never shadow them.
    for (const Rule& r : p_.rules) {
      out_.rule_vars[r.name] = names_.Fresh(options_.prefix + r.name);
    }
    for (const Rule& r : p_.rules) {
      const std::string& var = out_.rule_vars.at(r.name);
      if (r.is_bool()) {
        absl::StatusOr<l::Expr> e = Bool(r.bool_body());
        if (!e.ok()) return e.status();
        Define(var, l::Sort::kBool, *e);
      } else {
        absl::StatusOr<l::Expr> e = Count(r.count_body());
        if (!e.ok()) return e.status();
        Define(var, l::Sort::kInt, *e);
      }
    }
    out_.acceptor = out_.rule_vars.at(p_.acceptor().name);
    return absl::OkStatus();
  }

 private:
  void Define(const std::string& var, l::Sort sort, l::Expr rhs) {
    out_.locals.push_back({var, sort});
    out_.equations.push_back({var, std::move(rhs)});
  }

  l::Expr Input() const { return l::IntVar(options_.input); }

  l::Expr Position() {
    if (position_.empty()) {
      position_ = names_.Fresh(options_.prefix + "P");
      Define(position_, l::Sort::kInt,
             l::Arrow(l::Const(0),
                      l::Add(l::Pre(l::IntVar(position_)), l::Const(1))));
    }
    return l::IntVar(position_);
  }

  // C_e := if T(e) then 1 else 0
  absl::StatusOr<std::string> Indicator(const BExp& e) {
    absl::StatusOr<l::Expr> t = Bool(e);
    if (!t.ok()) return t.status();
    std::string n = names_.Fresh(options_.prefix + "N");
    Define(n, l::Sort::kInt, l::Ite(*t, l::Const(1), l::Const(0)));
    return n;
  }

  absl::StatusOr<l::Expr> Bool(const BExp& e) {
    using R = absl::StatusOr<l::Expr>;
    return std::visit(
        Overloaded{
            [](const ast::True&) -> R { return l::True(); },
            [](const ast::False&) -> R { return l::False(); },
            [&](const ast::Letter& x) -> R {
              std::optional<int64_t> code =
                  codec_.CodeOf(p_.alphabet.name(x.symbol));
              if (!code) {
                return absl::InvalidArgumentError(
                    absl::StrCat("symbol '", p_.alphabet.name(x.symbol),
                                 "' not in the unit alphabet"));
              }
              return l::Eq(Input(), l::Const(*code));
            },
            [&](const ast::BoolRef& x) -> R {
              return l::BoolVar(out_.rule_vars.at(x.rule));
            },
            [&](const ast::Not& x) -> R {
              R a = Bool(x.operand);
              if (!a.ok()) return a;
              return l::Not(*a);
            },
            [&](const ast::Junction& x) -> R {
              R a = Bool(x.lhs);
              if (!a.ok()) return a;
              R b = Bool(x.rhs);
              if (!b.ok()) return b;
              return x.op == BoolOp::kAnd ? l::And(*a, *b) : l::Or(*a, *b);
            },
            [&](const ast::Compare& x) -> R {
              R a = Count(x.lhs);
              if (!a.ok()) return a;
              R b = Count(x.rhs);
              if (!b.ok()) return b;
              switch (x.op) {
                case CmpOp::kEq: return l::Eq(*a, *b);
                case CmpOp::kLe: return l::Le(*a, *b);
                case CmpOp::kLt: return l::Lt(*a, *b);
              }
              return absl::InternalError("bad comparison");
            },
            [&](const ast::Periodic& x) -> R {
              return l::Eq(l::Mod(Position(), l::Const(x.modulus)),
                           l::Const(x.offset));
            },
        },
        static_cast<const BoolNode::variant&>(e.node()));
  }

  absl::StatusOr<l::Expr> Count(const CExp& e) {
    using R = absl::StatusOr<l::Expr>;
    return std::visit(
        Overloaded{
            [](const ast::Constant& x) -> R { return l::Const(x.value); },
            [&](const ast::CountRef& x) -> R {
              return l::IntVar(out_.rule_vars.at(x.rule));
            },
            [&](const ast::CountAll& x) -> R {
              absl::StatusOr<std::string> n = Indicator(x.operand);
              if (!n.ok()) return n.status();
              std::string c = names_.Fresh(options_.prefix + "C");
              Define(c, l::Sort::kInt,
                     l::Arrow(l::IntVar(*n),
                              l::Add(l::Pre(l::IntVar(c)), l::IntVar(*n))));
              return l::IntVar(c);
            },
            [&](const ast::CountWindow& x) -> R {
              if (x.window_end > options_.max_window_end) {
                return absl::InvalidArgumentError(absl::StrCat(
                    "window end ", x.window_end, " exceeds the limit ",
                    options_.max_window_end));
              }
              absl::StatusOr<std::string> n = Indicator(x.operand);
              if (!n.ok()) return n.status();
              // pre^0(e) = e, pre^i(e) = 0 -> pre(pre^{i-1}(e))
              l::Expr shifted = l::IntVar(*n);
              std::optional<l::Expr> sum;
              for (int i = 0; i <= x.window_end; ++i) {
                if (i > 0) shifted = l::Arrow(l::Const(0), l::Pre(shifted));
                if (i < x.window_start) continue;
                sum = sum ? l::Add(*sum, shifted) : shifted;
              }
              std::string w = names_.Fresh(options_.prefix + "W");
              Define(w, l::Sort::kInt, *sum);
              return l::IntVar(w);
            },
            [&](const ast::Arith& x) -> R {
              R a = Count(x.lhs);
              if (!a.ok()) return a;
              R b = Count(x.rhs);
              if (!b.ok()) return b;
              switch (x.op) {
                case ArithOp::kAdd: return l::Add(*a, *b);
                case ArithOp::kSub: return l::Sub(*a, *b);
                case ArithOp::kMin:
                case ArithOp::kMax: {
                  std::string va = names_.Fresh(options_.prefix + "A");
                  Define(va, l::Sort::kInt, *a);
                  std::string vb = names_.Fresh(options_.prefix + "A");
                  Define(vb, l::Sort::kInt, *b);
                  l::Expr ea = l::IntVar(va), eb = l::IntVar(vb);
                  return x.op == ArithOp::kMin ? l::Ite(l::Le(ea, eb), ea, eb)
                                               : l::Ite(l::Le(ea, eb), eb, ea);
                }
              }
              return absl::InternalError("bad arithmetic");
            },
            [&](const ast::Ite& x) -> R {
              R c = Bool(x.cond);
              if (!c.ok()) return c;
              R t = Count(x.then_value);
              if (!t.ok()) return t;
              R f = Count(x.else_value);
              if (!f.ok()) return f;
              return l::Ite(*c, *t, *f);
            },
        },
        static_cast<const CountNode::variant&>(e.node()));
  }

  const Program& p_;
  const SymbolCodec& codec_;
  const TranslateOptions& options_;
  NameRegistry& names_;
  Fragment& out_;
  std::string position_;
};

l::Expr InSet(const l::Expr& input, const std::vector<int64_t>& codes) {
  std::vector<l::Expr> terms;
  for (int64_t c : codes) terms.push_back(l::Eq(input, l::Const(c)));
  return l::OrAll(terms);
}

}  // namespace

SymbolCodec::SymbolCodec(const Alphabet& alphabet) : alphabet_(alphabet) {}

std::optional<int64_t> SymbolCodec::CodeOf(const std::string& symbol) const {
  std::optional<Symbol> s = alphabet_.Find(symbol);
  if (!s) return std::nullopt;
  return *s;
}

std::optional<Symbol> SymbolCodec::Decode(int64_t code) const {
  if (code < 0 || code >= alphabet_.size()) return std::nullopt;
  return static_cast<Symbol>(code);
}

absl::StatusOr<std::vector<int64_t>> EncodeWord(const SymbolCodec& codec,
                                                const Word& w, int total) {
  if (w.empty()) return absl::InvalidArgumentError("empty word");
  if (total < static_cast<int>(w.size()) + 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("stream length ", total, " < |w| + 1 = ", w.size() + 1));
  }
  std::vector<int64_t> out;
  out.reserve(total);
  for (Symbol s : w) {
    if (s < 0 || s >= codec.alphabet().size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("symbol ", s, " outside the alphabet"));
    }
    out.push_back(codec.Code(s));
  }
  out.push_back(codec.eos());
  while (static_cast<int>(out.size()) < total) out.push_back(codec.eternity());
  return out;
}

absl::StatusOr<Word> DecodeStream(const SymbolCodec& codec,
                                  std::span<const int64_t> stream) {
  Word w;
  for (size_t i = 0; i < stream.size(); ++i) {
    if (stream[i] == codec.eos()) return w;
    std::optional<Symbol> s = codec.Decode(stream[i]);
    if (!s) {
      return absl::InvalidArgumentError(absl::StrCat(
          "position ", i, ": code ", stream[i], " is not a letter"));
    }
    w.push_back(*s);
  }
  return absl::InvalidArgumentError("stream has no eos");
}

NameRegistry::NameRegistry() : taken_(Reserved()) {}

std::string NameRegistry::Fresh(const std::string& base) {
  std::string b = Sanitize(base);
  if (taken_.insert(b).second) return b;
  for (int i = 1;; ++i) {
    std::string c = absl::StrCat(b, "_", i);
    if (taken_.insert(c).second) return c;
  }
}

InputGuard BuildInputGuard(const SymbolCodec& codec, const std::string& input,
                           NameRegistry& names) {
  InputGuard g;
  g.valid = names.Fresh("B_I");
  g.valid_so_far = names.Fresh("B_Ihat");
  l::Expr in = l::IntVar(input);
  std::vector<int64_t> all;
  for (int64_t c = 0; c <= codec.eternity(); ++c) all.push_back(c);
  l::Expr is_eternity = l::Eq(in, l::Const(codec.eternity()));
  l::Expr after_end = l::Pre(InSet(in, {codec.eos(), codec.eternity()}));
  l::Expr b_i =
      l::And(InSet(in, all),
             l::Arrow(l::Not(is_eternity), l::Or(l::Not(after_end),
                                                 is_eternity)));
  l::Expr b_hat = l::Arrow(
      l::BoolVar(g.valid),
      l::And(l::BoolVar(g.valid), l::Pre(l::BoolVar(g.valid_so_far))));
  g.locals = {{g.valid, l::Sort::kBool}, {g.valid_so_far, l::Sort::kBool}};
  g.equations = {{g.valid, b_i}, {g.valid_so_far, b_hat}};
  return g;
}

absl::StatusOr<Fragment> TranslateProgram(const Program& p,
                                          const SymbolCodec& codec,
                                          const TranslateOptions& options,
                                          NameRegistry& names) {
  if (absl::Status s = ValidateProgram(p); !s.ok()) return s;
  if (!p.alphabet.SameSymbols(codec.alphabet())) {
    return absl::InvalidArgumentError(
        "program alphabet differs from the unit alphabet");
  }
  Fragment f;
  Translator t(p, codec, options, names, f);
  if (absl::Status s = t.Run(); !s.ok()) return s;
  return f;
}

std::string ToString(CheckKind kind) {
  switch (kind) {
    case CheckKind::kInclusion: return "inclusion";
    case CheckKind::kEquality: return "equality";
    case CheckKind::kUniversality: return "universality";
    case CheckKind::kEmptiness: return "emptiness";
  }
  return "?";
}

absl::StatusOr<CheckKind> ParseCheckKind(std::string_view text) {
  for (CheckKind k : {CheckKind::kInclusion, CheckKind::kEquality,
                      CheckKind::kUniversality, CheckKind::kEmptiness}) {
    if (ToString(k) == text) return k;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown check kind '", std::string(text), "'"));
}

bool IsBinary(CheckKind kind) {
  return kind == CheckKind::kInclusion || kind == CheckKind::kEquality;
}

lustre::Expr BuildCheck(CheckKind kind, const SymbolCodec& codec,
                        const std::string& input,
                        const std::string& valid_so_far, const std::string& v1,
                        const std::string& v2) {
  l::Expr at_end = l::Not(l::And(
      l::BoolVar(valid_so_far), l::Eq(l::IntVar(input), l::Const(codec.eos()))));
  l::Expr p1 = l::Pre(l::BoolVar(v1));
  l::Expr body = l::True();
  switch (kind) {
    case CheckKind::kInclusion:
      body = l::Or(l::Or(at_end, l::Not(p1)), l::Pre(l::BoolVar(v2)));
      break;
    case CheckKind::kEquality: {
      l::Expr p2 = l::Pre(l::BoolVar(v2));
      body = l::Or(l::Or(at_end, l::And(p1, p2)),
                   l::And(l::Not(p1), l::Not(p2)));
      break;
    }
    case CheckKind::kUniversality:
      body = l::Or(at_end, p1);
      break;
    case CheckKind::kEmptiness:
      body = l::Or(at_end, l::Not(p1));
      break;
  }
  return l::Arrow(l::True(), body);
}

absl::StatusOr<TranslationUnit> BuildUnit(CheckKind kind, const Program& first,
                                          const Program* second,
                                          const TranslateOptions& options) {
  if (IsBinary(kind) != (second != nullptr)) {
    return absl::InvalidArgumentError(absl::StrCat(
        ToString(kind), IsBinary(kind) ? " needs two programs"
                                       : " takes one program"));
  }
  if (second && !first.alphabet.SameSymbols(second->alphabet)) {
    return absl::InvalidArgumentError("alphabet mismatch between programs");
  }
  TranslationUnit u;
  u.kind = kind;
  u.codec = SymbolCodec(first.alphabet);
  NameRegistry names;
  std::string input = names.Fresh(options.input);
  InputGuard guard = BuildInputGuard(u.codec, input, names);
  u.valid = guard.valid;
  u.valid_so_far = guard.valid_so_far;

  std::vector<const Program*> programs = {&first};
  if (second) programs.push_back(second);
  std::vector<Fragment> fragments;
  for (size_t i = 0; i < programs.size(); ++i) {
    TranslateOptions o = options;
    o.input = input;
    // Disjoint prefixes keep the two programs' variables apart.
    if (second) o.prefix = absl::StrCat(options.prefix, "p", i + 1, "_");
    absl::StatusOr<Fragment> f = TranslateProgram(*programs[i], u.codec, o, names);
    if (!f.ok()) return f.status();
    u.programs.push_back({programs[i]->name, programs[i]->acceptor().name,
                          f->acceptor, f->rule_vars});
    fragments.push_back(*std::move(f));
  }

  l::Node& n = u.node;
  n.name = names.Fresh(first.name + "_" + ToString(kind));
  n.input = input;
  n.property_name = ToString(kind);
  // Outputs lead the locals; the text reader lists them first as well.
  for (const Fragment& f : fragments) {
    if (std::find(n.outputs.begin(), n.outputs.end(), f.acceptor) ==
        n.outputs.end()) {
      n.outputs.push_back(f.acceptor);
      n.locals.push_back({f.acceptor, l::Sort::kBool});
    }
  }
  auto is_output = [&](const std::string& v) {
    return std::find(n.outputs.begin(), n.outputs.end(), v) != n.outputs.end();
  };
  n.locals.insert(n.locals.end(), guard.locals.begin(), guard.locals.end());
  n.equations = guard.equations;
  for (const Fragment& f : fragments) {
    for (const l::VarDecl& d : f.locals) {
      if (!is_output(d.name)) n.locals.push_back(d);
    }
    n.equations.insert(n.equations.end(), f.equations.begin(),
                       f.equations.end());
  }
  n.check = BuildCheck(kind, u.codec, input, u.valid_so_far,
                       u.programs[0].acceptor_var,
                       second ? u.programs[1].acceptor_var : "");
  return u;
}

}  // namespace crasp::c2l
