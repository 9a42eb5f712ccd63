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

#include "crasp/lustre/ast.h"

namespace crasp::lustre {
namespace {

Expr Make(Op op, Sort sort, std::vector<Expr> args, int64_t value = 0,
          std::string name = "") {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->sort = sort;
  n->value = value;
  n->name = std::move(name);
  n->args = std::move(args);
  return Expr(std::move(n));
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  return a->op == b->op && a->sort == b->sort && a->value == b->value &&
         a->name == b->name && a->args == b->args;
}

Expr True() { return Make(Op::kTrue, Sort::kBool, {}); }
Expr False() { return Make(Op::kFalse, Sort::kBool, {}); }
Expr Const(int64_t k) { return Make(Op::kConst, Sort::kInt, {}, k); }
Expr BoolVar(std::string name) { return Var(std::move(name), Sort::kBool); }
Expr IntVar(std::string name) { return Var(std::move(name), Sort::kInt); }
Expr Var(std::string name, Sort sort) {
  return Make(Op::kVar, sort, {}, 0, std::move(name));
}
Expr Not(Expr e) { return Make(Op::kNot, Sort::kBool, {std::move(e)}); }
Expr And(Expr a, Expr b) {
  return Make(Op::kAnd, Sort::kBool, {std::move(a), std::move(b)});
}
Expr Or(Expr a, Expr b) {
  return Make(Op::kOr, Sort::kBool, {std::move(a), std::move(b)});
}
Expr Eq(Expr a, Expr b) {
  return Make(Op::kEq, Sort::kBool, {std::move(a), std::move(b)});
}
Expr Le(Expr a, Expr b) {
  return Make(Op::kLe, Sort::kBool, {std::move(a), std::move(b)});
}
Expr Lt(Expr a, Expr b) {
  return Make(Op::kLt, Sort::kBool, {std::move(a), std::move(b)});
}
Expr Add(Expr a, Expr b) {
  return Make(Op::kAdd, Sort::kInt, {std::move(a), std::move(b)});
}
Expr Sub(Expr a, Expr b) {
  return Make(Op::kSub, Sort::kInt, {std::move(a), std::move(b)});
}
Expr Mod(Expr a, Expr b) {
  return Make(Op::kMod, Sort::kInt, {std::move(a), std::move(b)});
}
Expr Ite(Expr c, Expr t, Expr e) {
  Sort s = t->sort;
  return Make(Op::kIte, s, {std::move(c), std::move(t), std::move(e)});
}
Expr Pre(Expr e) {
  Sort s = e->sort;
  return Make(Op::kPre, s, {std::move(e)});
}
Expr Arrow(Expr a, Expr b) {
  Sort s = b->sort;
  return Make(Op::kArrow, s, {std::move(a), std::move(b)});
}

Expr AndAll(const std::vector<Expr>& es) {
  Expr acc = es.front();
  for (size_t i = 1; i < es.size(); ++i) acc = And(acc, es[i]);
  return acc;
}

Expr OrAll(const std::vector<Expr>& es) {
  Expr acc = es.front();
  for (size_t i = 1; i < es.size(); ++i) acc = Or(acc, es[i]);
  return acc;
}

std::optional<Sort> Node::SortOf(const std::string& var) const {
  if (var == input) return Sort::kInt;
  for (const VarDecl& d : locals) {
    if (d.name == var) return d.sort;
  }
  return std::nullopt;
}

int ExprSize(const Expr& e) {
  int n = 1;
  for (const Expr& a : e->args) n += ExprSize(a);
  return n;
}

}  // namespace crasp::lustre
