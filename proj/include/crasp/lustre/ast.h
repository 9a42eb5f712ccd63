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

#ifndef CRASP_LUSTRE_AST_H_
#define CRASP_LUSTRE_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crasp::lustre {

enum class Sort { kBool, kInt };

enum class Op {
  kTrue,
  kFalse,
  kConst,
  kVar,
  kNot,
  kAnd,
  kOr,
  kEq,
  kLe,
  kLt,
  kAdd,
  kSub,
  kMod,
  kIte,
  kPre,
  kArrow,
};

struct ExprNode;

// Immutable expression handle. Sorts are computed by the builders; the
// builders do not reject ill-sorted operands so that parsed text can be
// diagnosed by CheckNode instead.
class Expr {
 public:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  const ExprNode& operator*() const { return *node_; }
  const ExprNode* operator->() const { return node_.get(); }
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  Op op;
  Sort sort;
  int64_t value = 0;   // kConst
  std::string name;    // kVar
  std::vector<Expr> args;
};

Expr True();
Expr False();
Expr Const(int64_t k);
Expr BoolVar(std::string name);
Expr IntVar(std::string name);
Expr Var(std::string name, Sort sort);
Expr Not(Expr e);
Expr And(Expr a, Expr b);
Expr Or(Expr a, Expr b);
Expr Eq(Expr a, Expr b);
Expr Le(Expr a, Expr b);
Expr Lt(Expr a, Expr b);
Expr Add(Expr a, Expr b);
Expr Sub(Expr a, Expr b);
Expr Mod(Expr a, Expr b);
Expr Ite(Expr c, Expr t, Expr e);
Expr Pre(Expr e);
// a -> b: a at position 0, b afterwards. Takes the sort of `b`.
Expr Arrow(Expr a, Expr b);

// Left-nested conjunction/disjunction of a nonempty list.
Expr AndAll(const std::vector<Expr>& es);
Expr OrAll(const std::vector<Expr>& es);

struct VarDecl {
  std::string name;
  Sort sort;
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct Equation {
  std::string var;
  Expr rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// One node with a single integer input. `outputs` names locals that are
// emitted in the returns clause; every local, output or not, has exactly one
// equation.
struct Node {
  std::string name = "main";
  std::string input = "I";
  std::vector<VarDecl> locals;
  std::vector<std::string> outputs;
  std::vector<Equation> equations;
  std::optional<Expr> check;
  std::string property_name = "check";

  std::optional<Sort> SortOf(const std::string& var) const;
  friend bool operator==(const Node&, const Node&) = default;
};

int ExprSize(const Expr& e);

}  // namespace crasp::lustre

#endif  // CRASP_LUSTRE_AST_H_
