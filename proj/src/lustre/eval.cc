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

#include "crasp/lustre/eval.h"

#include <functional>
#include <map>
#include <set>

#include "absl/strings/str_cat.h"

namespace crasp::lustre {
namespace {

const char* SortName(Sort s) { return s == Sort::kBool ? "bool" : "int"; }

class NodeChecker {
 public:
  explicit NodeChecker(const Node& node) : node_(node) {}

  absl::Status Run() {
    std::set<std::string> names = {node_.input};
    for (const VarDecl& d : node_.locals) {
      if (!names.insert(d.name).second) {
        return absl::InvalidArgumentError(
            absl::StrCat("variable '", d.name, "' declared twice"));
      }
    }
    for (const std::string& out : node_.outputs) {
      if (!node_.SortOf(out) || out == node_.input) {
        return absl::InvalidArgumentError(
            absl::StrCat("output '", out, "' is not a local variable"));
      }
    }
    std::map<std::string, int> defined;
    for (const Equation& eq : node_.equations) {
      where_ = absl::StrCat("equation for '", eq.var, "'");
      std::optional<Sort> s = node_.SortOf(eq.var);
      if (!s || eq.var == node_.input) {
        return Fail(absl::StrCat("'", eq.var, "' is not a local variable"));
      }
      if (++defined[eq.var] > 1) return Fail("more than one equation");
      if (absl::Status st = Expression(eq.rhs, false); !st.ok()) return st;
      if (eq.rhs->sort != *s) {
        return Fail(absl::StrCat("right-hand side has sort ",
                                 SortName(eq.rhs->sort), " but '", eq.var,
                                 "' is ", SortName(*s)));
      }
    }
    for (const VarDecl& d : node_.locals) {
      if (!defined.count(d.name)) {
        return absl::InvalidArgumentError(
            absl::StrCat("no equation for '", d.name, "'"));
      }
    }
    if (node_.check) {
      where_ = "check";
      if (absl::Status st = Expression(*node_.check, false); !st.ok()) {
        return st;
      }
      if ((*node_.check)->sort != Sort::kBool) {
        return Fail("check expression must be Boolean");
      }
    }
    return absl::OkStatus();
  }

 private:
  absl::Status Fail(std::string msg) const {
    return absl::InvalidArgumentError(absl::StrCat(where_, ": ", msg));
  }

  absl::Status Expect(const Expr& e, Sort s) const {
    if (e->sort != s) {
      return Fail(absl::StrCat("expected ", SortName(s), " operand but found ",
                               SortName(e->sort)));
    }
    return absl::OkStatus();
  }

  absl::Status Expression(const Expr& e, bool guarded) {
    for (size_t i = 0; i < e->args.size(); ++i) {
      bool g = guarded;
      if (e->op == Op::kArrow && i == 1) g = true;
      if (e->op == Op::kPre) g = false;
      if (absl::Status s = Expression(e->args[i], g); !s.ok()) return s;
    }
    switch (e->op) {
      case Op::kTrue:
      case Op::kFalse:
      case Op::kConst:
        return absl::OkStatus();
      case Op::kVar: {
        std::optional<Sort> s = node_.SortOf(e->name);
        if (!s) return Fail(absl::StrCat("undeclared variable '", e->name, "'"));
        if (*s != e->sort) {
          return Fail(absl::StrCat("variable '", e->name, "' used as ",
                                   SortName(e->sort)));
        }
        return absl::OkStatus();
      }
      case Op::kNot:
        return Expect(e->args[0], Sort::kBool);
      case Op::kAnd:
      case Op::kOr:
        if (absl::Status s = Expect(e->args[0], Sort::kBool); !s.ok()) return s;
        return Expect(e->args[1], Sort::kBool);
      case Op::kEq:
      case Op::kLe:
      case Op::kLt:
      case Op::kAdd:
      case Op::kSub:
        if (absl::Status s = Expect(e->args[0], Sort::kInt); !s.ok()) return s;
        return Expect(e->args[1], Sort::kInt);
      case Op::kMod:
        if (absl::Status s = Expect(e->args[0], Sort::kInt); !s.ok()) return s;
        if (e->args[1]->op != Op::kConst || e->args[1]->value == 0) {
          return Fail("mod divisor must be a nonzero constant");
        }
        return absl::OkStatus();
      case Op::kIte:
        if (absl::Status s = Expect(e->args[0], Sort::kBool); !s.ok()) return s;
        if (e->args[1]->sort != e->args[2]->sort) {
          return Fail("if-then-else branches have different sorts");
        }
        return absl::OkStatus();
      case Op::kPre:
        if (!guarded) {
          return Fail("pre is not guarded by '->', so its value at position 0 "
                      "is undefined");
        }
        return absl::OkStatus();
      case Op::kArrow:
        if (e->args[0]->sort != e->args[1]->sort) {
          return Fail("'->' operands have different sorts");
        }
        return absl::OkStatus();
    }
    return absl::OkStatus();
  }

  const Node& node_;
  std::string where_;
};

// Variables read at the current position, i.e. outside every pre.
void InstantDeps(const Expr& e, std::set<std::string>& out) {
  if (e->op == Op::kPre) return;
  if (e->op == Op::kVar) out.insert(e->name);
  for (const Expr& a : e->args) InstantDeps(a, out);
}

int64_t EuclidMod(int64_t a, int64_t m) {
  int64_t r = a % m;
  if (r < 0) r += m < 0 ? -m : m;
  return r;
}

}  // namespace

absl::Status CheckNode(const Node& node) { return NodeChecker(node).Run(); }

const std::vector<int64_t>* Trace::Find(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return &values[i];
  }
  return nullptr;
}

absl::StatusOr<CompiledNode> CompiledNode::Compile(const Node& node) {
  if (absl::Status s = CheckNode(node); !s.ok()) return s;
  CompiledNode c;
  // Variable 0 is the input; locals follow in declaration order.
  std::vector<std::string> vars = {node.input};
  for (const VarDecl& d : node.locals) {
    vars.push_back(d.name);
    c.local_names_.push_back(d.name);
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < c.local_names_.size(); ++i) {
    index[c.local_names_[i]] = static_cast<int>(i);
  }
  c.roots_.assign(c.local_names_.size(), -1);
  std::vector<std::set<std::string>> deps(c.local_names_.size());
  for (const Equation& eq : node.equations) {
    int i = index.at(eq.var);
    c.roots_[i] = c.Lower(eq.rhs, vars);
    InstantDeps(eq.rhs, deps[i]);
  }
  if (node.check) c.check_root_ = c.Lower(*node.check, vars);

  // Depth-first topological sort over instantaneous dependencies.
  std::vector<int> mark(c.local_names_.size(), 0);  // 0 new, 1 open, 2 done
  std::function<absl::Status(int)> visit = [&](int v) -> absl::Status {
    if (mark[v] == 2) return absl::OkStatus();
    if (mark[v] == 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "causality cycle through '", c.local_names_[v], "'"));
    }
    mark[v] = 1;
    for (const std::string& d : deps[v]) {
      auto it = index.find(d);
      if (it == index.end()) continue;  // the input
      if (absl::Status s = visit(it->second); !s.ok()) return s;
    }
    mark[v] = 2;
    c.order_.push_back(v);
    return absl::OkStatus();
  };
  for (size_t v = 0; v < c.local_names_.size(); ++v) {
    if (absl::Status s = visit(static_cast<int>(v)); !s.ok()) return s;
  }
  return c;
}

int CompiledNode::Lower(const Expr& e, const std::vector<std::string>& vars) {
  Cell cell{e->op};
  std::vector<int> kids;
  for (const Expr& a : e->args) kids.push_back(Lower(a, vars));
  if (kids.size() > 0) cell.a = kids[0];
  if (kids.size() > 1) cell.b = kids[1];
  if (kids.size() > 2) cell.c = kids[2];
  switch (e->op) {
    case Op::kConst:
      cell.value = e->value;
      break;
    case Op::kVar:
      for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == e->name) cell.value = static_cast<int64_t>(i);
      }
      break;
    case Op::kPre:
      cell.value = static_cast<int64_t>(pre_operands_.size());
      pre_operands_.push_back(cell.a);
      break;
    default:
      break;
  }
  cells_.push_back(cell);
  return static_cast<int>(cells_.size()) - 1;
}

int64_t CompiledNode::Eval(int idx, std::span<const int64_t> env,
                           const std::vector<int64_t>& slots, bool first,
                           bool& overflow) const {
  const Cell& c = cells_[idx];
  auto ev = [&](int k) { return Eval(k, env, slots, first, overflow); };
  switch (c.op) {
    case Op::kTrue:
      return 1;
    case Op::kFalse:
      return 0;
    case Op::kConst:
      return c.value;
    case Op::kVar:
      return env[c.value];
    case Op::kNot:
      return ev(c.a) ? 0 : 1;
    case Op::kAnd:
      return (ev(c.a) && ev(c.b)) ? 1 : 0;
    case Op::kOr:
      return (ev(c.a) || ev(c.b)) ? 1 : 0;
    case Op::kEq:
      return ev(c.a) == ev(c.b) ? 1 : 0;
    case Op::kLe:
      return ev(c.a) <= ev(c.b) ? 1 : 0;
    case Op::kLt:
      return ev(c.a) < ev(c.b) ? 1 : 0;
    case Op::kAdd: {
      int64_t r;
      if (__builtin_add_overflow(ev(c.a), ev(c.b), &r)) overflow = true;
      return r;
    }
    case Op::kSub: {
      int64_t r;
      if (__builtin_sub_overflow(ev(c.a), ev(c.b), &r)) overflow = true;
      return r;
    }
    case Op::kMod:
      return EuclidMod(ev(c.a), cells_[c.b].value);
    case Op::kIte:
      return ev(c.a) ? ev(c.b) : ev(c.c);
    case Op::kPre:
      return slots[c.value];
    case Op::kArrow:
      return first ? ev(c.a) : ev(c.b);
  }
  return 0;
}

CompiledNode::State CompiledNode::Initial() const {
  State s;
  s.slots.assign(pre_operands_.size(), 0);
  return s;
}

std::optional<int> CompiledNode::LocalIndex(const std::string& name) const {
  for (size_t i = 0; i < local_names_.size(); ++i) {
    if (local_names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

absl::StatusOr<bool> CompiledNode::Step(State& state, int64_t input,
                                        std::span<int64_t> locals) const {
  // env[0] is the input, env[1 + i] local i.
  thread_local std::vector<int64_t> env;
  env.resize(local_names_.size() + 1);
  env[0] = input;
  bool first = state.position == 0;
  bool overflow = false;
  for (int v : order_) {
    env[v + 1] = Eval(roots_[v], env, state.slots, first, overflow);
  }
  bool check = true;
  if (check_root_ >= 0) {
    check = Eval(check_root_, env, state.slots, first, overflow) != 0;
  }
  thread_local std::vector<int64_t> next;
  next.resize(pre_operands_.size());
  for (size_t s = 0; s < pre_operands_.size(); ++s) {
    next[s] = Eval(pre_operands_[s], env, state.slots, first, overflow);
  }
  if (overflow) {
    return absl::OutOfRangeError(
        absl::StrCat("integer overflow at position ", state.position));
  }
  state.slots.swap(next);
  ++state.position;
  for (size_t i = 0; i < locals.size() && i < local_names_.size(); ++i) {
    locals[i] = env[i + 1];
  }
  return check;
}

absl::StatusOr<Trace> RunNode(const Node& node, std::span<const int64_t> input) {
  if (input.empty()) return absl::InvalidArgumentError("empty input");
  absl::StatusOr<CompiledNode> c = CompiledNode::Compile(node);
  if (!c.ok()) return c.status();
  Trace t;
  t.input.assign(input.begin(), input.end());
  for (const VarDecl& d : node.locals) {
    t.names.push_back(d.name);
    t.sorts.push_back(d.sort);
  }
  t.values.assign(t.names.size(), {});
  CompiledNode::State state = c->Initial();
  std::vector<int64_t> row(c->num_locals());
  for (int64_t x : input) {
    absl::StatusOr<bool> ok = c->Step(state, x, row);
    if (!ok.ok()) return ok.status();
    for (size_t i = 0; i < row.size(); ++i) t.values[i].push_back(row[i]);
    if (c->has_check()) t.check.push_back(*ok);
  }
  return t;
}

absl::StatusOr<std::optional<CheckViolation>> BoundedCheck(
    const Node& node, const std::vector<std::vector<int64_t>>& inputs) {
  if (!node.check) return absl::InvalidArgumentError("node has no check");
  absl::StatusOr<CompiledNode> c = CompiledNode::Compile(node);
  if (!c.ok()) return c.status();
  std::vector<int64_t> row(c->num_locals());
  for (size_t k = 0; k < inputs.size(); ++k) {
    CompiledNode::State state = c->Initial();
    for (size_t i = 0; i < inputs[k].size(); ++i) {
      absl::StatusOr<bool> ok = c->Step(state, inputs[k][i], row);
      if (!ok.ok()) return ok.status();
      if (!*ok) {
        return CheckViolation{static_cast<int>(k), static_cast<int>(i)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace crasp::lustre
