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

#include "crasp/core/ast.h"

#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace crasp {

absl::StatusOr<Alphabet> Alphabet::Create(std::vector<std::string> symbols) {
  if (symbols.empty()) {
    return absl::InvalidArgumentError("alphabet must be nonempty");
  }
  std::set<std::string> seen;
  for (const std::string& s : symbols) {
    if (s.empty()) return absl::InvalidArgumentError("empty symbol name");
    if (!seen.insert(s).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate symbol '", s, "'"));
    }
  }
  return Alphabet(std::move(symbols));
}

std::optional<Symbol> Alphabet::Find(std::string_view name) const {
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

bool Alphabet::single_char() const {
  for (const std::string& s : symbols_) {
    if (s.size() != 1) return false;
  }
  return true;
}

bool Alphabet::SameSymbols(const Alphabet& other) const {
  return std::set<std::string>(symbols_.begin(), symbols_.end()) ==
         std::set<std::string>(other.symbols_.begin(), other.symbols_.end());
}

bool operator==(const BExp& a, const BExp& b) {
  if (a.node_ == b.node_) return true;
  return static_cast<const BoolNode::variant&>(*a.node_) ==
         static_cast<const BoolNode::variant&>(*b.node_);
}

bool operator==(const CExp& a, const CExp& b) {
  if (a.node_ == b.node_) return true;
  return static_cast<const CountNode::variant&>(*a.node_) ==
         static_cast<const CountNode::variant&>(*b.node_);
}

namespace {
template <typename T>
BExp MakeB(T node) {
  return BExp(std::make_shared<const BoolNode>(std::move(node)));
}
template <typename T>
CExp MakeC(T node) {
  return CExp(std::make_shared<const CountNode>(std::move(node)));
}
}  // namespace

BExp True() { return MakeB(ast::True{}); }
BExp False() { return MakeB(ast::False{}); }
BExp Letter(Symbol s) { return MakeB(ast::Letter{s}); }
BExp BoolRef(std::string rule) { return MakeB(ast::BoolRef{std::move(rule)}); }
BExp Not(BExp e) { return MakeB(ast::Not{std::move(e)}); }
BExp And(BExp a, BExp b) {
  return Junction(BoolOp::kAnd, std::move(a), std::move(b));
}
BExp Or(BExp a, BExp b) {
  return Junction(BoolOp::kOr, std::move(a), std::move(b));
}
BExp Junction(BoolOp op, BExp a, BExp b) {
  return MakeB(ast::Junction{op, std::move(a), std::move(b)});
}
BExp Compare(CmpOp op, CExp a, CExp b) {
  return MakeB(ast::Compare{op, std::move(a), std::move(b)});
}
BExp Periodic(int modulus, int offset) {
  return MakeB(ast::Periodic{modulus, offset});
}

CExp Const(int64_t k) { return MakeC(ast::Constant{k}); }
CExp CountRef(std::string rule) { return MakeC(ast::CountRef{std::move(rule)}); }
CExp CountAll(BExp e) { return MakeC(ast::CountAll{std::move(e)}); }
CExp CountWindow(int window_start, int window_end, BExp e) {
  return MakeC(ast::CountWindow{window_start, window_end, std::move(e)});
}
CExp Arith(ArithOp op, CExp a, CExp b) {
  return MakeC(ast::Arith{op, std::move(a), std::move(b)});
}
CExp Add(CExp a, CExp b) { return Arith(ArithOp::kAdd, std::move(a), std::move(b)); }
CExp Sub(CExp a, CExp b) { return Arith(ArithOp::kSub, std::move(a), std::move(b)); }
CExp Min(CExp a, CExp b) { return Arith(ArithOp::kMin, std::move(a), std::move(b)); }
CExp Max(CExp a, CExp b) { return Arith(ArithOp::kMax, std::move(a), std::move(b)); }
CExp Ite(BExp c, CExp t, CExp e) {
  return MakeC(ast::Ite{std::move(c), std::move(t), std::move(e)});
}

std::optional<int> Program::IndexOf(std::string_view rule) const {
  for (size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].name == rule) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string ToString(CmpOp op) {
  switch (op) {
    case CmpOp::kEq:
      return "=";
    case CmpOp::kLe:
      return "<=";
    case CmpOp::kLt:
      return "<";
  }
  return "?";
}

std::string ToString(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return "+";
    case ArithOp::kSub:
      return "-";
    case ArithOp::kMin:
      return "min";
    case ArithOp::kMax:
      return "max";
  }
  return "?";
}

}  // namespace crasp
