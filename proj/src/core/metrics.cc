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

#include "crasp/core/metrics.h"

#include <algorithm>
#include <functional>

#include "crasp/core/overloaded.h"

namespace crasp {
namespace {

// Generic pre-order walk over both sorts.
struct Walker {
  std::function<void(const BExp&)> on_bool;
  std::function<void(const CExp&)> on_count;

  void Walk(const BExp& e) const {
    if (on_bool) on_bool(e);
    std::visit(Overloaded{[](const ast::True&) {}, [](const ast::False&) {},
                          [](const ast::Letter&) {}, [](const ast::BoolRef&) {},
                          [&](const ast::Not& n) { Walk(n.operand); },
                          [&](const ast::Junction& j) {
                            Walk(j.lhs);
                            Walk(j.rhs);
                          },
                          [&](const ast::Compare& c) {
                            Walk(c.lhs);
                            Walk(c.rhs);
                          },
                          [](const ast::Periodic&) {}},
               e.node());
  }

  void Walk(const CExp& e) const {
    if (on_count) on_count(e);
    std::visit(Overloaded{[](const ast::Constant&) {},
                          [](const ast::CountRef&) {},
                          [&](const ast::CountAll& c) { Walk(c.operand); },
                          [&](const ast::CountWindow& w) { Walk(w.operand); },
                          [&](const ast::Arith& a) {
                            Walk(a.lhs);
                            Walk(a.rhs);
                          },
                          [&](const ast::Ite& i) {
                            Walk(i.cond);
                            Walk(i.then_value);
                            Walk(i.else_value);
                          }},
               e.node());
  }

  void Walk(const Expr& e) const {
    std::visit([&](const auto& x) { Walk(x); }, e);
  }
};

}  // namespace

std::vector<std::string> ReferencedRules(const Expr& e) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
    }
  };
  Walker w;
  w.on_bool = [&](const BExp& b) {
    if (const auto* r = std::get_if<ast::BoolRef>(&b.node())) add(r->rule);
  };
  w.on_count = [&](const CExp& c) {
    if (const auto* r = std::get_if<ast::CountRef>(&c.node())) add(r->rule);
  };
  w.Walk(e);
  return out;
}

std::vector<bool> ReachableRuleMask(const Program& p) {
  std::vector<bool> mask(p.rules.size(), false);
  if (p.rules.empty()) return mask;
  mask.back() = true;
  // References only point backwards, so one reverse sweep closes the set.
  for (int i = static_cast<int>(p.rules.size()) - 1; i >= 0; --i) {
    if (!mask[i]) continue;
    for (const std::string& name : ReferencedRules(p.rules[i].body)) {
      if (std::optional<int> j = p.IndexOf(name)) mask[*j] = true;
    }
  }
  return mask;
}

std::set<std::string> ReachableRules(const Program& p) {
  std::set<std::string> out;
  std::vector<bool> mask = ReachableRuleMask(p);
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (mask[i]) out.insert(p.rules[i].name);
  }
  return out;
}

int UnreachableRuleCount(const Program& p) {
  std::vector<bool> mask = ReachableRuleMask(p);
  return static_cast<int>(std::count(mask.begin(), mask.end(), false));
}

int AstSize(const BExp& e) {
  int n = 0;
  Walker w;
  w.on_bool = [&](const BExp&) { ++n; };
  w.on_count = [&](const CExp&) { ++n; };
  w.Walk(e);
  return n;
}

int AstSize(const CExp& e) {
  int n = 0;
  Walker w;
  w.on_bool = [&](const BExp&) { ++n; };
  w.on_count = [&](const CExp&) { ++n; };
  w.Walk(e);
  return n;
}

int AstSize(const Expr& e) {
  return std::visit([](const auto& x) { return AstSize(x); }, e);
}

int AstSize(const Program& p) {
  int n = 0;
  for (const Rule& r : p.rules) n += AstSize(r.body);
  return n;
}

int64_t MaxConstant(const Program& p) {
  int64_t k = 0;
  Walker w;
  w.on_count = [&](const CExp& c) {
    if (const auto* x = std::get_if<ast::Constant>(&c.node())) {
      k = std::max(k, x->value);
    }
  };
  for (const Rule& r : p.rules) w.Walk(r.body);
  return k;
}

int MaxWindowEnd(const Program& p) {
  int m = -1;
  Walker w;
  w.on_count = [&](const CExp& c) {
    if (const auto* x = std::get_if<ast::CountWindow>(&c.node())) {
      m = std::max(m, x->window_end);
    }
  };
  for (const Rule& r : p.rules) w.Walk(r.body);
  return m;
}

Program PruneUnreachable(const Program& p) {
  Program out;
  out.name = p.name;
  out.alphabet = p.alphabet;
  std::vector<bool> mask = ReachableRuleMask(p);
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (mask[i]) out.rules.push_back(p.rules[i]);
  }
  return out;
}

namespace {

BExp RelabelB(const BExp& e, const std::vector<Symbol>& map);

CExp RelabelC(const CExp& e, const std::vector<Symbol>& map) {
  return std::visit(
      Overloaded{
          [&](const ast::Constant&) { return e; },
          [&](const ast::CountRef&) { return e; },
          [&](const ast::CountAll& c) {
            return CountAll(RelabelB(c.operand, map));
          },
          [&](const ast::CountWindow& w) {
            return CountWindow(w.window_start, w.window_end,
                               RelabelB(w.operand, map));
          },
          [&](const ast::Arith& a) {
            return Arith(a.op, RelabelC(a.lhs, map), RelabelC(a.rhs, map));
          },
          [&](const ast::Ite& i) {
            return Ite(RelabelB(i.cond, map), RelabelC(i.then_value, map),
                       RelabelC(i.else_value, map));
          }},
      e.node());
}

BExp RelabelB(const BExp& e, const std::vector<Symbol>& map) {
  return std::visit(
      Overloaded{[&](const ast::Letter& l) { return Letter(map[l.symbol]); },
                 [&](const ast::Not& n) { return Not(RelabelB(n.operand, map)); },
                 [&](const ast::Junction& j) {
                   return Junction(j.op, RelabelB(j.lhs, map),
                                   RelabelB(j.rhs, map));
                 },
                 [&](const ast::Compare& c) {
                   return Compare(c.op, RelabelC(c.lhs, map),
                                  RelabelC(c.rhs, map));
                 },
                 [&](const auto&) { return e; }},
      e.node());
}

}  // namespace

absl::StatusOr<Program> Relabel(const Program& p, const Alphabet& target) {
  if (!p.alphabet.SameSymbols(target)) {
    return absl::InvalidArgumentError("alphabets hold different symbols");
  }
  if (p.alphabet == target) return p;
  std::vector<Symbol> map(p.alphabet.size());
  for (Symbol s = 0; s < p.alphabet.size(); ++s) {
    map[s] = *target.Find(p.alphabet.name(s));
  }
  Program out = p;
  out.alphabet = target;
  for (Rule& r : out.rules) {
    if (r.is_bool()) {
      r.body = RelabelB(r.bool_body(), map);
    } else {
      r.body = RelabelC(r.count_body(), map);
    }
  }
  return out;
}

}  // namespace crasp
