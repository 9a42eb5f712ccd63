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

#include "crasp/core/semantics.h"

#include <algorithm>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "crasp/core/overloaded.h"

namespace crasp {
namespace {

// Walks one rule body. `limit` is the number of rules that may be
// referenced (rules before the current one); pass rules.size() for free
// expressions.
class ExprChecker {
 public:
  ExprChecker(const Program& p, std::string rule, size_t limit,
              std::vector<Violation>& out)
      : p_(p), rule_(std::move(rule)), limit_(limit), out_(out) {}

  void Check(const BExp& e) {
    std::visit(
        Overloaded{
            [](const ast::True&) {}, [](const ast::False&) {},
            [&](const ast::Letter& l) {
              if (l.symbol < 0 || l.symbol >= p_.alphabet.size()) {
                Add(absl::StrCat("letter index ", l.symbol,
                                 " outside the alphabet"));
              }
            },
            [&](const ast::BoolRef& r) { CheckRef(r.rule, true); },
            [&](const ast::Not& n) { Check(n.operand); },
            [&](const ast::Junction& j) {
              Check(j.lhs);
              Check(j.rhs);
            },
            [&](const ast::Compare& c) {
              Check(c.lhs);
              Check(c.rhs);
            },
            [&](const ast::Periodic& per) {
              if (per.modulus < 1) Add("periodic modulus must be >= 1");
              if (per.offset < 0 || per.offset >= per.modulus) {
                Add(absl::StrCat("periodic offset ", per.offset,
                                 " must satisfy 0 <= o < m = ", per.modulus));
              }
            }},
        e.node());
  }

  void Check(const CExp& e) {
    std::visit(
        Overloaded{
            [&](const ast::Constant& k) {
              if (k.value < 0) Add("constants must be natural numbers");
            },
            [&](const ast::CountRef& r) { CheckRef(r.rule, false); },
            [&](const ast::CountAll& c) { Check(c.operand); },
            [&](const ast::CountWindow& w) {
              if (w.window_start < 0 || w.window_start > w.window_end) {
                Add(absl::StrCat("window bounds [", w.window_start, ",",
                                 w.window_end, "] must satisfy 0 <= rs <= re"));
              }
              Check(w.operand);
            },
            [&](const ast::Arith& a) {
              Check(a.lhs);
              Check(a.rhs);
            },
            [&](const ast::Ite& i) {
              Check(i.cond);
              Check(i.then_value);
              Check(i.else_value);
            }},
        e.node());
  }

 private:
  void Add(std::string msg) { out_.push_back({rule_, std::move(msg)}); }

  void CheckRef(const std::string& target, bool want_bool) {
    std::optional<int> idx = p_.IndexOf(target);
    if (!idx) {
      Add(absl::StrCat("unknown rule '", target, "'"));
      return;
    }
    if (static_cast<size_t>(*idx) >= limit_) {
      Add(absl::StrCat("forward reference to '", target, "'"));
      return;
    }
    if (p_.rules[*idx].is_bool() != want_bool) {
      Add(absl::StrCat("'", target, "' is a ",
                       p_.rules[*idx].is_bool() ? "Boolean" : "count",
                       " rule but is used as a ",
                       want_bool ? "Boolean" : "count", " expression"));
    }
  }

  const Program& p_;
  std::string rule_;
  size_t limit_;
  std::vector<Violation>& out_;
};

std::vector<Violation> CheckFreeExpr(const Program& p, const Expr& e) {
  std::vector<Violation> out;
  ExprChecker checker(p, "", p.rules.size(), out);
  std::visit([&](const auto& x) { checker.Check(x); }, e);
  return out;
}

std::string JoinViolations(const std::vector<Violation>& vs) {
  return absl::StrJoin(vs, "; ", [](std::string* out, const Violation& v) {
    if (v.rule.empty()) {
      absl::StrAppend(out, v.message);
    } else {
      absl::StrAppend(out, "rule ", v.rule, ": ", v.message);
    }
  });
}

}  // namespace

std::vector<Violation> CheckWellFormed(const Program& p) {
  std::vector<Violation> out;
  if (p.alphabet.size() == 0) out.push_back({"", "alphabet is empty"});
  if (p.rules.empty()) {
    out.push_back({"", "program has no rules"});
    return out;
  }
  std::set<std::string> names;
  for (size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& r = p.rules[i];
    if (r.name.empty()) out.push_back({"", "rule with empty name"});
    if (!names.insert(r.name).second) {
      out.push_back({r.name, "duplicate rule name"});
    }
    ExprChecker checker(p, r.name, i, out);
    std::visit([&](const auto& body) { checker.Check(body); }, r.body);
  }
  if (!p.acceptor().is_bool()) {
    out.push_back({p.acceptor().name, "last rule not Boolean"});
  }
  return out;
}

absl::Status ValidateProgram(const Program& p) {
  std::vector<Violation> vs = CheckWellFormed(p);
  if (vs.empty()) return absl::OkStatus();
  return absl::InvalidArgumentError(JoinViolations(vs));
}

std::string FormatValue(const Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "T" : "F";
  return absl::StrCat(std::get<int64_t>(v));
}

absl::StatusOr<Evaluator> Evaluator::Create(const Program& program,
                                            Word word) {
  if (absl::Status s = ValidateProgram(program); !s.ok()) return s;
  if (word.empty()) {
    return absl::InvalidArgumentError("empty words are not accepted inputs");
  }
  for (Symbol s : word) {
    if (s < 0 || s >= program.alphabet.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("symbol index ", s, " outside the alphabet"));
    }
  }
  return Evaluator(program, std::move(word));
}

Evaluator::Evaluator(Program program, Word word)
    : program_(std::move(program)), word_(std::move(word)) {
  for (size_t i = 0; i < program_.rules.size(); ++i) {
    index_.emplace(program_.rules[i].name, static_cast<int>(i));
  }
  memo_.assign(program_.rules.size(),
               std::vector<std::optional<Value>>(word_.size()));
}

absl::Status Evaluator::CheckPosition(int position) const {
  if (position < 1 || position > length()) {
    return absl::OutOfRangeError(absl::StrCat(
        "position ", position, " outside 1..", length()));
  }
  return absl::OkStatus();
}

const Value& Evaluator::RuleValue(int rule, int j) {
  std::optional<Value>& slot = memo_[rule][j - 1];
  if (!slot) {
    const Rule& r = program_.rules[rule];
    if (r.is_bool()) {
      slot = Value(B(r.bool_body(), j));
    } else {
      slot = Value(C(r.count_body(), j));
    }
  }
  return *slot;
}

bool Evaluator::B(const BExp& e, int j) {
  return std::visit(
      Overloaded{
          [](const ast::True&) { return true; },
          [](const ast::False&) { return false; },
          [&](const ast::Letter& l) { return word_[j - 1] == l.symbol; },
          [&](const ast::BoolRef& r) {
            return std::get<bool>(RuleValue(index_.at(r.rule), j));
          },
          [&](const ast::Not& n) { return !B(n.operand, j); },
          [&](const ast::Junction& x) {
            bool a = B(x.lhs, j);
            bool b = B(x.rhs, j);
            return x.op == BoolOp::kAnd ? (a && b) : (a || b);
          },
          [&](const ast::Compare& c) {
            int64_t a = C(c.lhs, j);
            int64_t b = C(c.rhs, j);
            switch (c.op) {
              case CmpOp::kEq:
                return a == b;
              case CmpOp::kLe:
                return a <= b;
              case CmpOp::kLt:
                return a < b;
            }
            return false;
          },
          [&](const ast::Periodic& per) {
            return (j - 1) % per.modulus == per.offset;
          }},
      e.node());
}

int64_t Evaluator::C(const CExp& e, int j) {
  return std::visit(
      Overloaded{
          [](const ast::Constant& k) { return k.value; },
          [&](const ast::CountRef& r) {
            return std::get<int64_t>(RuleValue(index_.at(r.rule), j));
          },
          [&](const ast::CountAll& c) {
            int64_t sum = 0;
            for (int i = 1; i <= j; ++i) sum += B(c.operand, i) ? 1 : 0;
            return sum;
          },
          [&](const ast::CountWindow& w) {
            int64_t sum = 0;
            int lo = std::max(1, j - w.window_end);
            for (int i = lo; i <= j - w.window_start; ++i) {
              sum += B(w.operand, i) ? 1 : 0;
            }
            return sum;
          },
          [&](const ast::Arith& a) -> int64_t {
            int64_t x = C(a.lhs, j);
            int64_t y = C(a.rhs, j);
            int64_t r = 0;
            switch (a.op) {
              case ArithOp::kAdd:
                if (__builtin_add_overflow(x, y, &r)) {
                  error_ = "integer overflow in addition";
                }
                return r;
              case ArithOp::kSub:
                if (__builtin_sub_overflow(x, y, &r)) {
                  error_ = "integer overflow in subtraction";
                }
                return r;
              case ArithOp::kMin:
                return std::min(x, y);
              case ArithOp::kMax:
                return std::max(x, y);
            }
            return 0;
          },
          [&](const ast::Ite& i) {
            return B(i.cond, j) ? C(i.then_value, j) : C(i.else_value, j);
          }},
      e.node());
}

absl::StatusOr<Value> Evaluator::EvalRule(std::string_view rule,
                                          int position) {
  auto it = index_.find(std::string(rule));
  if (it == index_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown rule '", std::string(rule), "'"));
  }
  if (absl::Status s = CheckPosition(position); !s.ok()) return s;
  Value v = RuleValue(it->second, position);
  if (!error_.empty()) return absl::OutOfRangeError(error_);
  return v;
}

absl::StatusOr<Value> Evaluator::Eval(const Expr& e, int position) {
  std::vector<Violation> vs = CheckFreeExpr(program_, e);
  if (!vs.empty()) return absl::InvalidArgumentError(JoinViolations(vs));
  if (absl::Status s = CheckPosition(position); !s.ok()) return s;
  Value v = std::visit(
      Overloaded{[&](const BExp& b) { return Value(B(b, position)); },
                 [&](const CExp& c) { return Value(C(c, position)); }},
      e);
  if (!error_.empty()) return absl::OutOfRangeError(error_);
  return v;
}

absl::StatusOr<bool> Evaluator::Accepts() {
  absl::StatusOr<Value> v = EvalRule(program_.acceptor().name, length());
  if (!v.ok()) return v.status();
  return std::get<bool>(*v);
}

absl::StatusOr<Value> EvalRule(const Program& p, const Word& w,
                               std::string_view rule, int position) {
  absl::StatusOr<Evaluator> ev = Evaluator::Create(p, w);
  if (!ev.ok()) return ev.status();
  return ev->EvalRule(rule, position);
}

absl::StatusOr<Value> EvalExpr(const Program& p, const Word& w, const Expr& e,
                               int position) {
  absl::StatusOr<Evaluator> ev = Evaluator::Create(p, w);
  if (!ev.ok()) return ev.status();
  return ev->Eval(e, position);
}

absl::StatusOr<bool> Accepts(const Program& p, const Word& w) {
  absl::StatusOr<Evaluator> ev = Evaluator::Create(p, w);
  if (!ev.ok()) return ev.status();
  return ev->Accepts();
}

absl::StatusOr<std::vector<std::vector<Value>>> RuleTable(const Program& p,
                                                          const Word& w) {
  absl::StatusOr<Evaluator> ev = Evaluator::Create(p, w);
  if (!ev.ok()) return ev.status();
  std::vector<std::vector<Value>> table(p.rules.size());
  for (size_t r = 0; r < p.rules.size(); ++r) {
    for (int j = 1; j <= ev->length(); ++j) {
      absl::StatusOr<Value> v = ev->EvalRule(p.rules[r].name, j);
      if (!v.ok()) return v.status();
      table[r].push_back(*v);
    }
  }
  return table;
}

}  // namespace crasp
