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

#include "crasp/synth/fragment.h"

#include <algorithm>
#include <functional>
#include <optional>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"

namespace crasp::synth {
namespace {

// What a rule body may mention at its position.
struct Slot {
  const Alphabet* alphabet;
  std::vector<std::string> bools;   // earlier Boolean rules
  std::vector<std::string> counts;  // earlier count rules
  int max_const;
};

Slot SlotOf(const Program& p, int rule, const Shape& s) {
  Slot slot{&p.alphabet, {}, {}, s.max_const};
  for (int i = 0; i < rule; ++i) {
    (p.rules[i].is_bool() ? slot.bools : slot.counts)
        .push_back(p.rules[i].name);
  }
  return slot;
}

bool Has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

template <typename T>
const T& Pick(const std::vector<T>& v, Rng& rng) {
  return v[rng.Index(v.size())];
}

// ---- membership

bool IsPhi(const BExp& e, const Slot& slot) {
  const BoolNode& n = e.node();
  if (const auto* l = std::get_if<ast::Letter>(&n)) {
    return l->symbol >= 0 && l->symbol < slot.alphabet->size();
  }
  if (const auto* r = std::get_if<ast::BoolRef>(&n)) {
    return Has(slot.bools, r->rule);
  }
  if (const auto* m = std::get_if<ast::Periodic>(&n)) {
    return m->modulus >= kMinModulus && m->modulus <= kMaxModulus &&
           m->offset >= 0 && m->offset < m->modulus;
  }
  return false;
}

bool IsCountAtom(const CExp& e, const Slot& slot) {
  const CountNode& n = e.node();
  if (const auto* c = std::get_if<ast::Constant>(&n)) {
    return c->value >= 0 && c->value <= slot.max_const;
  }
  if (const auto* r = std::get_if<ast::CountRef>(&n)) {
    return Has(slot.counts, r->rule);
  }
  if (const auto* a = std::get_if<ast::CountAll>(&n)) {
    return IsPhi(a->operand, slot);
  }
  if (const auto* w = std::get_if<ast::CountWindow>(&n)) {
    return w->window_start >= 0 && w->window_start <= w->window_end &&
           w->window_end <= kMaxWindow && IsPhi(w->operand, slot);
  }
  return false;
}

bool IsBoolAtom(const BExp& e, const Slot& slot) {
  if (const auto* c = std::get_if<ast::Compare>(&e.node())) {
    return IsCountAtom(c->lhs, slot) && IsCountAtom(c->rhs, slot);
  }
  return IsPhi(e, slot);
}

struct Lit {
  bool negated = false;
  BExp atom = True();
};

std::optional<Lit> AsLit(const BExp& e, const Slot& slot) {
  if (const auto* n = std::get_if<ast::Not>(&e.node())) {
    if (IsBoolAtom(n->operand, slot)) return Lit{true, n->operand};
    return std::nullopt;
  }
  if (IsBoolAtom(e, slot)) return Lit{false, e};
  return std::nullopt;
}

BExp Build(const Lit& l) { return l.negated ? Not(l.atom) : l.atom; }

struct BoolBody {
  Lit a;
  std::optional<BoolOp> op;
  Lit b;
};

std::optional<BoolBody> AsBoolBody(const BExp& e, const Slot& slot) {
  if (const auto* j = std::get_if<ast::Junction>(&e.node())) {
    std::optional<Lit> a = AsLit(j->lhs, slot), b = AsLit(j->rhs, slot);
    if (!a || !b) return std::nullopt;
    return BoolBody{*a, j->op, *b};
  }
  std::optional<Lit> a = AsLit(e, slot);
  if (!a) return std::nullopt;
  return BoolBody{*a, std::nullopt, {}};
}

BExp Build(const BoolBody& b) {
  if (!b.op) return Build(b.a);
  return Junction(*b.op, Build(b.a), Build(b.b));
}

struct CountBody {
  enum Form { kAtom, kArith, kIte } form = kAtom;
  ArithOp op = ArithOp::kAdd;
  Lit cond;
  CExp x = Const(0), y = Const(0);
};

std::optional<CountBody> AsCountBody(const CExp& e, const Slot& slot) {
  const CountNode& n = e.node();
  if (const auto* a = std::get_if<ast::Arith>(&n)) {
    if (!IsCountAtom(a->lhs, slot) || !IsCountAtom(a->rhs, slot)) {
      return std::nullopt;
    }
    return CountBody{CountBody::kArith, a->op, {}, a->lhs, a->rhs};
  }
  if (const auto* i = std::get_if<ast::Ite>(&n)) {
    std::optional<Lit> c = AsLit(i->cond, slot);
    if (!c || !IsCountAtom(i->then_value, slot) ||
        !IsCountAtom(i->else_value, slot)) {
      return std::nullopt;
    }
    return CountBody{CountBody::kIte, ArithOp::kAdd, *c, i->then_value,
                     i->else_value};
  }
  if (!IsCountAtom(e, slot)) return std::nullopt;
  return CountBody{CountBody::kAtom, ArithOp::kAdd, {}, e, Const(0)};
}

CExp Build(const CountBody& b) {
  switch (b.form) {
    case CountBody::kAtom: return b.x;
    case CountBody::kArith: return Arith(b.op, b.x, b.y);
    case CountBody::kIte: return Ite(Build(b.cond), b.x, b.y);
  }
  return b.x;
}

// ---- sampling

BExp SamplePhi(const Slot& slot, Rng& rng) {
  int cats = slot.bools.empty() ? 2 : 3;
  switch (rng.Index(cats)) {
    case 0: return Letter(rng.Index(slot.alphabet->size()));
    case 1: {
      int m = static_cast<int>(rng.Uniform(kMinModulus, kMaxModulus));
      return Periodic(m, rng.Index(m));
    }
    default: return BoolRef(Pick(slot.bools, rng));
  }
}

CExp SampleCountAtom(const Slot& slot, Rng& rng) {
  int cats = slot.counts.empty() ? 3 : 4;
  switch (rng.Index(cats)) {
    case 0: return Const(rng.Uniform(0, slot.max_const));
    case 1: return CountAll(SamplePhi(slot, rng));
    case 2: {
      int rs = rng.Index(kMaxWindow + 1);
      int re = static_cast<int>(rng.Uniform(rs, kMaxWindow));
      return CountWindow(rs, re, SamplePhi(slot, rng));
    }
    default: return CountRef(Pick(slot.counts, rng));
  }
}

CmpOp SampleCmp(Rng& rng) {
  static constexpr CmpOp kOps[] = {CmpOp::kEq, CmpOp::kLe, CmpOp::kLt};
  return kOps[rng.Index(3)];
}

BExp SampleBoolAtom(const Slot& slot, Rng& rng) {
  int cats = slot.bools.empty() ? 3 : 4;
  switch (rng.Index(cats)) {
    case 0: return Letter(rng.Index(slot.alphabet->size()));
    case 1: {
      int m = static_cast<int>(rng.Uniform(kMinModulus, kMaxModulus));
      return Periodic(m, rng.Index(m));
    }
    case 2: {
      CmpOp op = SampleCmp(rng);
      CExp lhs = SampleCountAtom(slot, rng);
      return Compare(op, lhs, SampleCountAtom(slot, rng));
    }
    default: return BoolRef(Pick(slot.bools, rng));
  }
}

Lit SampleLit(const Slot& slot, Rng& rng) {
  bool negated = rng.Bernoulli(0.5);
  return Lit{negated, SampleBoolAtom(slot, rng)};
}

BExp SampleBoolBody(const Slot& slot, Rng& rng) {
  BoolBody b;
  b.a = SampleLit(slot, rng);
  if (rng.Bernoulli(0.5)) {
    b.op = rng.Bernoulli(0.5) ? BoolOp::kAnd : BoolOp::kOr;
    b.b = SampleLit(slot, rng);
  }
  return Build(b);
}

ArithOp SampleArith(Rng& rng) {
  static constexpr ArithOp kOps[] = {ArithOp::kAdd, ArithOp::kSub,
                                     ArithOp::kMin, ArithOp::kMax};
  return kOps[rng.Index(4)];
}

CExp SampleCountBody(const Slot& slot, Rng& rng) {
  CountBody b;
  b.form = static_cast<CountBody::Form>(rng.Index(3));
  if (b.form == CountBody::kArith) b.op = SampleArith(rng);
  if (b.form == CountBody::kIte) b.cond = SampleLit(slot, rng);
  b.x = SampleCountAtom(slot, rng);
  if (b.form != CountBody::kAtom) b.y = SampleCountAtom(slot, rng);
  return Build(b);
}

// ---- micro-mutations

using Edit = std::function<void()>;

// Leaf edits of a literal: its atom, and the operands of a comparison atom.
void LitLeaves(Lit& l, const Slot& slot, Rng& rng, std::vector<Edit>& out) {
  out.push_back([&l, &slot, &rng] { l.atom = SampleBoolAtom(slot, rng); });
  if (const auto* c = std::get_if<ast::Compare>(&l.atom.node())) {
    ast::Compare cmp = *c;
    out.push_back([&l, &slot, &rng, cmp] {
      l.atom = Compare(cmp.op, SampleCountAtom(slot, rng), cmp.rhs);
    });
    out.push_back([&l, &slot, &rng, cmp] {
      l.atom = Compare(cmp.op, cmp.lhs, SampleCountAtom(slot, rng));
    });
  }
}

bool Flippable(const Lit& l) {
  const auto* c = std::get_if<ast::Compare>(&l.atom.node());
  return c != nullptr && c->op != CmpOp::kEq;
}

void Flip(Lit& l) {
  const auto& c = std::get<ast::Compare>(l.atom.node());
  l.atom =
      Compare(c.op == CmpOp::kLt ? CmpOp::kLe : CmpOp::kLt, c.lhs, c.rhs);
}

struct Move {
  std::string name;
  std::function<void(Rng&)> apply;
};

BExp MicroBool(BoolBody b, const Slot& slot, Rng& rng, std::string& name) {
  std::vector<Lit*> lits = {&b.a};
  if (b.op) lits.push_back(&b.b);
  std::vector<Move> moves;
  if (b.op) {
    moves.push_back({"swap-junction", [&](Rng&) {
                       b.op = *b.op == BoolOp::kAnd ? BoolOp::kOr
                                                    : BoolOp::kAnd;
                     }});
  }
  moves.push_back({"toggle-negation", [&](Rng& r) {
                     Lit* l = Pick(lits, r);
                     l->negated = !l->negated;
                   }});
  std::vector<Lit*> flippable;
  for (Lit* l : lits) {
    if (Flippable(*l)) flippable.push_back(l);
  }
  if (!flippable.empty()) {
    moves.push_back({"flip-strictness", [&](Rng& r) { Flip(*Pick(flippable, r)); }});
  }
  moves.push_back({"resample-leaf", [&](Rng& r) {
                     std::vector<Edit> leaves;
                     for (Lit* l : lits) LitLeaves(*l, slot, r, leaves);
                     Pick(leaves, r)();
                   }});
  const Move& m = Pick(moves, rng);
  name = m.name;
  m.apply(rng);
  return Build(b);
}

CExp MicroCount(CountBody b, const Slot& slot, Rng& rng, std::string& name) {
  std::vector<Move> moves;
  if (b.form == CountBody::kArith) {
    moves.push_back({"change-op", [&](Rng& r) {
                       ArithOp op;
                       do {
                         op = SampleArith(r);
                       } while (op == b.op);
                       b.op = op;
                     }});
  }
  if (b.form == CountBody::kIte) {
    moves.push_back({"swap-branches", [&](Rng&) { std::swap(b.x, b.y); }});
    moves.push_back(
        {"toggle-negation", [&](Rng&) { b.cond.negated = !b.cond.negated; }});
    if (Flippable(b.cond)) {
      moves.push_back({"flip-strictness", [&](Rng&) { Flip(b.cond); }});
    }
  }
  moves.push_back({"resample-leaf", [&](Rng& r) {
                     std::vector<Edit> leaves;
                     leaves.push_back([&] { b.x = SampleCountAtom(slot, r); });
                     if (b.form != CountBody::kAtom) {
                       leaves.push_back([&] { b.y = SampleCountAtom(slot, r); });
                     }
                     if (b.form == CountBody::kIte) {
                       LitLeaves(b.cond, slot, r, leaves);
                     }
                     Pick(leaves, r)();
                   }});
  const Move& m = Pick(moves, rng);
  name = m.name;
  m.apply(rng);
  return Build(b);
}

}  // namespace

absl::Status CheckShape(const Shape& s) {
  if (s.num_bool < 1) return absl::InvalidArgumentError("N_b must be >= 1");
  if (s.num_count < 0) return absl::InvalidArgumentError("N_c must be >= 0");
  if (s.max_const < 0) return absl::InvalidArgumentError("K must be >= 0");
  return absl::OkStatus();
}

std::string ToString(const Shape& s) {
  return absl::StrCat(s.num_bool, ",", s.num_count, ",", s.max_const);
}

absl::StatusOr<Shape> ParseShape(std::string_view text) {
  std::vector<std::string> parts = absl::StrSplit(std::string(text), ',');
  Shape s;
  if (parts.size() != 3 || !absl::SimpleAtoi(parts[0], &s.num_bool) ||
      !absl::SimpleAtoi(parts[1], &s.num_count) ||
      !absl::SimpleAtoi(parts[2], &s.max_const)) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad shape '", std::string(text), "', expected Nb,Nc,K"));
  }
  if (absl::Status st = CheckShape(s); !st.ok()) return st;
  return s;
}

std::vector<bool> Layout(const Shape& s) {
  std::vector<bool> out;
  int b = s.num_bool - 1, c = s.num_count;
  bool next_bool = true;
  while (b > 0 || c > 0) {
    if ((next_bool && b > 0) || c == 0) {
      out.push_back(true);
      --b;
    } else {
      out.push_back(false);
      --c;
    }
    next_bool = !next_bool;
  }
  out.push_back(true);
  return out;
}

std::vector<std::string> RuleNames(const Shape& s) {
  std::vector<bool> layout = Layout(s);
  std::vector<std::string> names;
  int b = 0, c = 0;
  for (size_t i = 0; i + 1 < layout.size(); ++i) {
    names.push_back(layout[i] ? absl::StrCat("B", ++b) : absl::StrCat("C", ++c));
  }
  names.push_back("Out");
  return names;
}

Shape ShapeOf(const Program& p) {
  Shape s{0, 0, static_cast<int>(MaxConstant(p))};
  for (const Rule& r : p.rules) (r.is_bool() ? s.num_bool : s.num_count)++;
  return s;
}

bool ConformsToShape(const Program& p, const Shape& s) {
  if (p.rules.empty() || !p.acceptor().is_bool()) return false;
  if (!ValidateProgram(p).ok()) return false;
  Shape got = ShapeOf(p);
  if (got.num_bool != s.num_bool || got.num_count != s.num_count) return false;
  return got.max_const <= s.max_const;
}

absl::Status CheckRuleBody(const Program& p, int rule, const Shape& s) {
  Slot slot = SlotOf(p, rule, s);
  const Rule& r = p.rules[rule];
  bool ok = r.is_bool() ? AsBoolBody(r.bool_body(), slot).has_value()
                        : AsCountBody(r.count_body(), slot).has_value();
  if (!ok) {
    return absl::InvalidArgumentError(
        absl::StrCat("rule ", r.name, " is outside the search fragment"));
  }
  return absl::OkStatus();
}

absl::Status CheckFragment(const Program& p, const Shape& s) {
  if (absl::Status st = CheckShape(s); !st.ok()) return st;
  if (!ConformsToShape(p, s)) {
    return absl::InvalidArgumentError(
        absl::StrCat("program does not conform to shape ", ToString(s)));
  }
  std::vector<bool> layout = Layout(s);
  std::vector<std::string> names = RuleNames(s);
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (p.rules[i].is_bool() != layout[i] || p.rules[i].name != names[i]) {
      return absl::InvalidArgumentError(
          absl::StrCat("rule ", i + 1, " breaks the layout of shape ",
                       ToString(s)));
    }
    if (absl::Status st = CheckRuleBody(p, i, s); !st.ok()) return st;
  }
  return absl::OkStatus();
}

Program SampleInitial(const Shape& s, const Alphabet& alphabet, Rng& rng,
                      std::string name) {
  Program p;
  p.name = std::move(name);
  p.alphabet = alphabet;
  std::vector<bool> layout = Layout(s);
  std::vector<std::string> names = RuleNames(s);
  for (size_t i = 0; i < layout.size(); ++i) {
    // Placeholder so SlotOf sees the kind; replaced right away.
    p.rules.push_back(layout[i] ? BoolRule(names[i], True())
                                : CountRule(names[i], Const(0)));
    p.rules[i].body = ResampleBody(p, i, s, rng);
  }
  return p;
}

Expr ResampleBody(const Program& p, int rule, const Shape& s, Rng& rng) {
  Slot slot = SlotOf(p, rule, s);
  if (p.rules[rule].is_bool()) return SampleBoolBody(slot, rng);
  return SampleCountBody(slot, rng);
}

Program Mutate(const Program& p, const Shape& s, Rng& rng, MutationInfo* info) {
  Program out = p;
  int rule = rng.Index(p.rules.size());
  Slot slot = SlotOf(p, rule, s);
  const Rule& old = p.rules[rule];
  std::string move;
  // Redraw until the body actually changes; every body has many neighbours,
  // so this terminates after a handful of tries.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    bool resample = rng.Bernoulli(0.5);
    Expr body = old.body;
    if (old.is_bool()) {
      std::optional<BoolBody> b = AsBoolBody(old.bool_body(), slot);
      if (resample || !b) {
        move = "resample";
        body = SampleBoolBody(slot, rng);
      } else {
        body = MicroBool(*b, slot, rng, move);
      }
    } else {
      std::optional<CountBody> b = AsCountBody(old.count_body(), slot);
      if (resample || !b) {
        move = "resample";
        body = SampleCountBody(slot, rng);
      } else {
        body = MicroCount(*b, slot, rng, move);
      }
    }
    if (!(body == old.body)) {
      out.rules[rule].body = std::move(body);
      break;
    }
  }
  if (info) *info = {rule, move};
  return out;
}

}  // namespace crasp::synth
