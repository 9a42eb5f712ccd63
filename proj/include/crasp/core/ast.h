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

#ifndef CRASP_CORE_AST_H_
#define CRASP_CORE_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"

namespace crasp {

// Symbols are indices into the program's alphabet, in declaration order.
using Symbol = int;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;

  // Rejects empty alphabets, empty symbol names and duplicates.
  static absl::StatusOr<Alphabet> Create(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(Symbol s) const { return symbols_[s]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Symbol> Find(std::string_view name) const;

  // True when every symbol is exactly one character, which lets words be
  // written without separators.
  bool single_char() const;

  bool SameSymbols(const Alphabet& other) const;
  bool operator==(const Alphabet& other) const = default;

 private:
  explicit Alphabet(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {}
  std::vector<std::string> symbols_;
};

enum class CmpOp { kEq, kLe, kLt };
enum class BoolOp { kAnd, kOr };
enum class ArithOp { kAdd, kSub, kMin, kMax };

struct BoolNode;
struct CountNode;

// Immutable handles to shared expression trees. Copies share structure, so a
// program copy costs one pointer per rule.
class BExp {
 public:
  explicit BExp(std::shared_ptr<const BoolNode> node) : node_(std::move(node)) {}
  const BoolNode& node() const { return *node_; }
  const BoolNode* get() const { return node_.get(); }
  friend bool operator==(const BExp& a, const BExp& b);

 private:
  std::shared_ptr<const BoolNode> node_;
};

class CExp {
 public:
  explicit CExp(std::shared_ptr<const CountNode> node)
      : node_(std::move(node)) {}
  const CountNode& node() const { return *node_; }
  const CountNode* get() const { return node_.get(); }
  friend bool operator==(const CExp& a, const CExp& b);

 private:
  std::shared_ptr<const CountNode> node_;
};

namespace ast {

struct True {
  friend bool operator==(const True&, const True&) = default;
};
struct False {
  friend bool operator==(const False&, const False&) = default;
};
struct Letter {
  Symbol symbol;
  friend bool operator==(const Letter&, const Letter&) = default;
};
struct BoolRef {
  std::string rule;
  friend bool operator==(const BoolRef&, const BoolRef&) = default;
};
struct Not {
  BExp operand;
  friend bool operator==(const Not&, const Not&) = default;
};
struct Junction {
  BoolOp op;
  BExp lhs, rhs;
  friend bool operator==(const Junction&, const Junction&) = default;
};
struct Compare {
  CmpOp op;
  CExp lhs, rhs;
  friend bool operator==(const Compare&, const Compare&) = default;
};
// Holds at 1-based position j iff (j - 1) mod modulus == offset.
struct Periodic {
  int modulus;
  int offset;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

struct Constant {
  int64_t value;
  friend bool operator==(const Constant&, const Constant&) = default;
};
struct CountRef {
  std::string rule;
  friend bool operator==(const CountRef&, const CountRef&) = default;
};
struct CountAll {
  BExp operand;
  friend bool operator==(const CountAll&, const CountAll&) = default;
};
// Counts positions i with j - window_end <= i <= j - window_start.
struct CountWindow {
  int window_start;
  int window_end;
  BExp operand;
  friend bool operator==(const CountWindow&, const CountWindow&) = default;
};
struct Arith {
  ArithOp op;
  CExp lhs, rhs;
  friend bool operator==(const Arith&, const Arith&) = default;
};
struct Ite {
  BExp cond;
  CExp then_value, else_value;
  friend bool operator==(const Ite&, const Ite&) = default;
};

}  // namespace ast

struct BoolNode
    : std::variant<ast::True, ast::False, ast::Letter, ast::BoolRef, ast::Not,
                   ast::Junction, ast::Compare, ast::Periodic> {
  using variant::variant;
};

struct CountNode
    : std::variant<ast::Constant, ast::CountRef, ast::CountAll,
                   ast::CountWindow, ast::Arith, ast::Ite> {
  using variant::variant;
};

BExp True();
BExp False();
BExp Letter(Symbol s);
BExp BoolRef(std::string rule);
BExp Not(BExp e);
BExp And(BExp a, BExp b);
BExp Or(BExp a, BExp b);
BExp Junction(BoolOp op, BExp a, BExp b);
BExp Compare(CmpOp op, CExp a, CExp b);
BExp Periodic(int modulus, int offset);

CExp Const(int64_t k);
CExp CountRef(std::string rule);
CExp CountAll(BExp e);
CExp CountWindow(int window_start, int window_end, BExp e);
CExp Arith(ArithOp op, CExp a, CExp b);
CExp Add(CExp a, CExp b);
CExp Sub(CExp a, CExp b);
CExp Min(CExp a, CExp b);
CExp Max(CExp a, CExp b);
CExp Ite(BExp c, CExp t, CExp e);

using Expr = std::variant<BExp, CExp>;

struct Rule {
  std::string name;
  Expr body;

  bool is_bool() const { return std::holds_alternative<BExp>(body); }
  const BExp& bool_body() const { return std::get<BExp>(body); }
  const CExp& count_body() const { return std::get<CExp>(body); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

inline Rule BoolRule(std::string name, BExp body) {
  return Rule{std::move(name), std::move(body)};
}
inline Rule CountRule(std::string name, CExp body) {
  return Rule{std::move(name), std::move(body)};
}

// A C-RASP program. The last rule is the acceptor. Invariants are checked by
// CheckWellFormed rather than at construction so that malformed programs can
// be represented and diagnosed.
struct Program {
  std::string name = "main";
  Alphabet alphabet;
  std::vector<Rule> rules;

  const Rule& acceptor() const { return rules.back(); }
  std::optional<int> IndexOf(std::string_view rule) const;
  friend bool operator==(const Program&, const Program&) = default;
};

std::string ToString(CmpOp op);
std::string ToString(ArithOp op);

}  // namespace crasp

#endif  // CRASP_CORE_AST_H_
