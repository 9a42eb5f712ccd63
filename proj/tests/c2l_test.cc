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

#include <set>
#include <string>
#include <vector>

#include "crasp/benchlang/languages.h"
#include "crasp/c2l/emit.h"
#include "crasp/c2l/translate.h"
#include "crasp/core/metrics.h"
#include "crasp/core/rng.h"
#include "crasp/core/semantics.h"
#include "crasp/lustre/eval.h"
#include "crasp/lustre/text.h"
#include "crasp/text/syntax.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace crasp::c2l {
namespace {

using ::crasp::testing::AllWords;
using ::crasp::testing::ReadFile;
using ::crasp::testing::W;

constexpr char kDyck[] = R"(program dyck over {'[', ']'}
count C_lb := #('[')
count C_rb := #(']')
bool V := C_lb < C_rb
bool D := #(V) = 0 and C_lb = C_rb
)";

constexpr char kBalanced[] = R"(program balanced over {'[', ']'}
bool Out := #('[') = #(']')
)";

// The hand-written node from the Lustre examples, over the same codes.
constexpr char kDyckCounters[] = R"(
node DyckCounters(I: int) returns (D: bool);
var Nl, Nr, Cl, Cr, Nv, Cv : int; V : bool;
let
  Nl = if I = 0 then 1 else 0;
  Nr = if I = 1 then 1 else 0;
  Cl = (0 -> pre(Cl)) + Nl;
  Cr = (0 -> pre(Cr)) + Nr;
  V  = Cl < Cr;
  Nv = if V then 1 else 0;
  Cv = (0 -> pre(Cv)) + Nv;
  D  = (Cv = 0) and (Cl = Cr);
tel
)";

Program Parse(const std::string& text) {
  auto p = ParseProgram(text);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

Word RandomWord(Rng& rng, int k, int max_len) {
  Word w(rng.Uniform(1, max_len));
  for (Symbol& s : w) s = rng.Index(k);
  return w;
}

TEST(CodecTest, EncodeExamples) {
  SymbolCodec codec(*Alphabet::Create({"[", "]"}));
  EXPECT_EQ(codec.eos(), 2);
  EXPECT_EQ(codec.eternity(), 3);
  EXPECT_EQ(*EncodeWord(codec, W("[]", "[]"), 5),
            (std::vector<int64_t>{0, 1, 2, 3, 3}));
  EXPECT_EQ(*EncodeWord(codec, W("]", "[]"), 2),
            (std::vector<int64_t>{1, 2}));
  EXPECT_FALSE(EncodeWord(codec, W("[]", "[]"), 2).ok());
  EXPECT_FALSE(EncodeWord(codec, {}, 3).ok());
  EXPECT_FALSE(EncodeWord(codec, {5}, 3).ok());
}

TEST(CodecTest, DecodeInvertsEncode) {
  SymbolCodec codec(*Alphabet::Create({"a", "b", "c"}));
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Word w = RandomWord(rng, 3, 15);
    auto s = EncodeWord(codec, w, w.size() + 1 + rng.Index(4));
    ASSERT_TRUE(s.ok());
    EXPECT_EQ(*DecodeStream(codec, *s), w);
  }
  std::vector<int64_t> no_eos = {0, 1};
  EXPECT_FALSE(DecodeStream(codec, no_eos).ok());
  std::vector<int64_t> eternity_first = {4, 3};
  EXPECT_FALSE(DecodeStream(codec, eternity_first).ok());
}

TEST(GuardTest, ValidityStreams) {
  auto unit = BuildUnit(CheckKind::kUniversality,
                        Parse("program t over {'[', ']'}\nbool Out := true\n"),
                        nullptr);
  ASSERT_TRUE(unit.ok()) << unit.status();
  auto run = [&](std::vector<int64_t> in) {
    auto t = lustre::RunNode(unit->node, in);
    EXPECT_TRUE(t.ok()) << t.status();
    return std::make_pair(*t->Find(unit->valid), *t->Find(unit->valid_so_far));
  };
  auto [v1, h1] = run({0, 1, 2, 3, 3});
  EXPECT_EQ(h1, (std::vector<int64_t>{1, 1, 1, 1, 1}));
  auto [v2, h2] = run({3, 3});
  EXPECT_EQ(v2[0], 0);
  EXPECT_EQ(h2, (std::vector<int64_t>{0, 0}));
  auto [v3, h3] = run({0, 2, 1, 3});
  EXPECT_EQ(h3, (std::vector<int64_t>{1, 1, 0, 0}));
  auto [v4, h4] = run({0, 2, 2});
  EXPECT_EQ(h4, (std::vector<int64_t>{1, 1, 0}));
  auto [v5, h5] = run({0, 7});
  EXPECT_EQ(h5, (std::vector<int64_t>{1, 0}));
}

TEST(TranslateTest, UnitWindowIsSafePre) {
  Program p = Parse(
      "program w over {a, b}\ncount X := #[1,1]('a')\nbool Out := 1 <= X\n");
  NameRegistry names;
  names.Fresh("I");
  SymbolCodec codec(p.alphabet);
  auto f = TranslateProgram(p, codec, {}, names);
  ASSERT_TRUE(f.ok()) << f.status();
  // N := if I = 0 then 1 else 0; W := 0 -> pre(N); X := W; Out := 1 <= X
  ASSERT_EQ(f->equations.size(), 4u);
  const std::string& n = f->equations[0].var;
  EXPECT_EQ(f->equations[0].rhs,
            lustre::Ite(lustre::Eq(lustre::IntVar("I"), lustre::Const(0)),
                        lustre::Const(1), lustre::Const(0)));
  EXPECT_EQ(f->equations[1].rhs,
            lustre::Arrow(lustre::Const(0), lustre::Pre(lustre::IntVar(n))));
  EXPECT_EQ(f->rule_vars.at("X"), "X");
}

TEST(TranslateTest, WindowLimit) {
  Program p = Parse(
      "program w over {a}\ncount X := #[0,65]('a')\nbool Out := 1 <= X\n");
  EXPECT_FALSE(BuildUnit(CheckKind::kUniversality, p, nullptr).ok());
  TranslateOptions o;
  o.max_window_end = 65;
  EXPECT_TRUE(BuildUnit(CheckKind::kUniversality, p, nullptr, o).ok());
}

TEST(TranslateTest, ReservedAndClashingNames) {
  Program p = Parse(
      "program w over {a}\nbool I := 'a'\nbool pre := I\nbool P := 2%0\n"
      "bool Out := pre and P\n");
  auto unit = BuildUnit(CheckKind::kUniversality, p, nullptr);
  ASSERT_TRUE(unit.ok()) << unit.status();
  EXPECT_TRUE(lustre::CheckNode(unit->node).ok());
  const auto& vars = unit->programs[0].rule_vars;
  EXPECT_NE(vars.at("I"), "I");
  EXPECT_NE(vars.at("pre"), "pre");
  auto t = lustre::RunNode(unit->node,
                           *EncodeWord(unit->codec, Word(3, 0), 4));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(*t->Find(vars.at("Out")), (std::vector<int64_t>{1, 0, 1, 0}));
}

TEST(TranslateTest, MatchesHandWrittenExampleNode) {
  auto unit = BuildUnit(CheckKind::kUniversality, Parse(kDyck), nullptr);
  ASSERT_TRUE(unit.ok());
  auto hand = lustre::ParseNode(kDyckCounters);
  ASSERT_TRUE(hand.ok());
  const auto& vars = unit->programs[0].rule_vars;
  for (const Word& w : AllWords(2, 8)) {
    auto in = *EncodeWord(unit->codec, w, w.size() + 1);
    auto a = lustre::RunNode(unit->node, in);
    auto b = lustre::RunNode(*hand, in);
    ASSERT_TRUE(a.ok() && b.ok());
    for (size_t j = 0; j < w.size(); ++j) {
      ASSERT_EQ((*a->Find(vars.at("C_lb")))[j], (*b->Find("Cl"))[j]);
      ASSERT_EQ((*a->Find(vars.at("C_rb")))[j], (*b->Find("Cr"))[j]);
      ASSERT_EQ((*a->Find(vars.at("V")))[j], (*b->Find("V"))[j]);
      ASSERT_EQ((*a->Find(vars.at("D")))[j], (*b->Find("D"))[j]);
    }
  }
}

// Acceptor value at the last letter, and the universality check at eos.
void ExpectAgreement(const Program& p, const std::vector<Word>& words) {
  auto unit = BuildUnit(CheckKind::kUniversality, p, nullptr);
  ASSERT_TRUE(unit.ok()) << unit.status();
  auto compiled = lustre::CompiledNode::Compile(unit->node);
  ASSERT_TRUE(compiled.ok()) << compiled.status();
  int acc = *compiled->LocalIndex(unit->programs[0].acceptor_var);
  std::vector<int64_t> locals(compiled->num_locals());
  for (const Word& w : words) {
    auto want = Accepts(p, w);
    ASSERT_TRUE(want.ok());
    auto in = *EncodeWord(unit->codec, w, w.size() + 2);
    auto state = compiled->Initial();
    for (size_t j = 0; j < in.size(); ++j) {
      auto check = compiled->Step(state, in[j], locals);
      ASSERT_TRUE(check.ok()) << check.status();
      if (j + 1 == w.size()) {
        ASSERT_EQ(locals[acc] != 0, *want) << p.name;
      }
      if (j == w.size()) {
        ASSERT_EQ(*check, *want) << p.name;
      }
      if (j > w.size()) {
        ASSERT_TRUE(*check);
      }
    }
  }
}

TEST(TranslateTest, FixturesAgreeWithInterpreter) {
  Rng rng(2024);
  for (const benchlang::Language& l : benchlang::Catalog()) {
    if (!l.fixture) continue;
    Program p = *benchlang::ReferenceProgram(l);
    std::vector<Word> words;
    for (int i = 0; i < 200; ++i) {
      words.push_back(RandomWord(rng, p.alphabet.size(), 20));
    }
    ExpectAgreement(p, words);
  }
}

TEST(TranslateTest, RandomProgramsAgreeWithInterpreter) {
  Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    Program p = ::crasp::testing::RandomProgram(rng);
    ASSERT_TRUE(ValidateProgram(p).ok()) << PrintProgram(p);
    std::vector<Word> words;
    for (int j = 0; j < 30; ++j) words.push_back(RandomWord(rng, 2, 12));
    ExpectAgreement(p, words);
  }
}

int WindowEnds(const Program& p) {
  int total = 0;
  std::function<void(const BExp&)> b;
  std::function<void(const CExp&)> c;
  b = [&](const BExp& e) {
    if (auto* x = std::get_if<ast::Not>(&e.node())) b(x->operand);
    if (auto* x = std::get_if<ast::Junction>(&e.node())) b(x->lhs), b(x->rhs);
    if (auto* x = std::get_if<ast::Compare>(&e.node())) c(x->lhs), c(x->rhs);
  };
  c = [&](const CExp& e) {
    if (auto* x = std::get_if<ast::CountAll>(&e.node())) b(x->operand);
    if (auto* x = std::get_if<ast::CountWindow>(&e.node())) {
      total += x->window_end;
      b(x->operand);
    }
    if (auto* x = std::get_if<ast::Arith>(&e.node())) c(x->lhs), c(x->rhs);
    if (auto* x = std::get_if<ast::Ite>(&e.node())) {
      b(x->cond), c(x->then_value), c(x->else_value);
    }
  };
  for (const Rule& r : p.rules) {
    if (r.is_bool()) b(r.bool_body()); else c(r.count_body());
  }
  return total;
}

TEST(TranslateTest, SizeIsPolynomial) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Program p = ::crasp::testing::RandomProgram(rng);
    auto unit = BuildUnit(CheckKind::kUniversality, p, nullptr);
    ASSERT_TRUE(unit.ok());
    int eqs = static_cast<int>(unit->node.equations.size());
    EXPECT_LE(eqs, 3 * AstSize(p) + 3);
    int expr = 0;
    for (const auto& e : unit->node.equations) expr += lustre::ExprSize(e.rhs);
    int r = WindowEnds(p);
    EXPECT_LE(expr, 40 + 12 * AstSize(p) + 4 * (r + 1) * (r + 1));
  }
}

void CollectVars(const lustre::Expr& e, std::set<std::string>& out) {
  if (e->op == lustre::Op::kVar) out.insert(e->name);
  for (const lustre::Expr& a : e->args) CollectVars(a, out);
}

TEST(TranslateTest, BinaryUnitsShareOnlyInput) {
  Program p1 = Parse(kDyck);
  Program p2 = Parse(kDyck);  // same rule names on purpose
  auto unit = BuildUnit(CheckKind::kEquality, p1, &p2);
  ASSERT_TRUE(unit.ok()) << unit.status();
  std::set<std::string> defined[2], used[2];
  for (const lustre::Equation& eq : unit->node.equations) {
    int side = eq.var.rfind("p1_", 0) == 0 ? 0
               : eq.var.rfind("p2_", 0) == 0 ? 1 : -1;
    if (side < 0) continue;
    defined[side].insert(eq.var);
    CollectVars(eq.rhs, used[side]);
  }
  EXPECT_FALSE(defined[0].empty());
  EXPECT_FALSE(defined[1].empty());
  std::set<std::string> shared;
  for (const std::string& v : used[0]) {
    if (used[1].count(v) || defined[1].count(v)) shared.insert(v);
  }
  for (const std::string& v : used[1]) {
    if (defined[0].count(v)) shared.insert(v);
  }
  EXPECT_EQ(shared, (std::set<std::string>{unit->node.input}));
  EXPECT_EQ(defined[0].size() + defined[1].size() + 2,
            unit->node.equations.size());
}

TEST(TranslateTest, UnitArgumentErrors) {
  Program p = Parse(kDyck);
  EXPECT_FALSE(BuildUnit(CheckKind::kInclusion, p, nullptr).ok());
  EXPECT_FALSE(BuildUnit(CheckKind::kEmptiness, p, &p).ok());
  Program q = Parse("program q over {a, b}\nbool Out := 'a'\n");
  auto mismatch = BuildUnit(CheckKind::kEquality, p, &q);
  EXPECT_NE(mismatch.status().message().find("alphabet"), std::string::npos);
}

// Streams for all words up to max_len, shortest first.
std::vector<std::vector<int64_t>> Streams(const SymbolCodec& codec,
                                          int max_len) {
  std::vector<std::vector<int64_t>> out;
  for (const Word& w : AllWords(codec.alphabet().size(), max_len)) {
    out.push_back(*EncodeWord(codec, w, w.size() + 2));
  }
  return out;
}

TEST(CheckTest, InclusionBetweenDyckAndBalanced) {
  Program dyck = Parse(kDyck), balanced = Parse(kBalanced);
  auto forward = BuildUnit(CheckKind::kInclusion, dyck, &balanced);
  ASSERT_TRUE(forward.ok());
  auto streams = Streams(forward->codec, 12);
  auto v = lustre::BoundedCheck(forward->node, streams);
  ASSERT_TRUE(v.ok()) << v.status();
  EXPECT_FALSE(v->has_value());

  auto backward = BuildUnit(CheckKind::kInclusion, balanced, &dyck);
  ASSERT_TRUE(backward.ok());
  auto b = lustre::BoundedCheck(backward->node, streams);
  ASSERT_TRUE(b.ok() && b->has_value());
  auto word = DecodeStream(backward->codec, streams[(*b)->input_index]);
  EXPECT_EQ(*word, W("][", "[]"));
  EXPECT_EQ((*b)->position, 2);
}

TEST(CheckTest, AllKindsOnSmallPrograms) {
  Program top = Parse("program t over {a, b}\nbool Out := true\n");
  Program bottom = Parse("program f over {a, b}\nbool Out := false\n");
  Program a = Parse("program a over {a, b}\nbool Out := 'a'\n");
  SymbolCodec codec(top.alphabet);
  auto streams = Streams(codec, 6);
  auto violated = [&](CheckKind k, const Program& p, const Program* q) {
    auto u = BuildUnit(k, p, q);
    EXPECT_TRUE(u.ok()) << u.status();
    auto v = lustre::BoundedCheck(u->node, streams);
    EXPECT_TRUE(v.ok());
    return v->has_value();
  };
  EXPECT_FALSE(violated(CheckKind::kUniversality, top, nullptr));
  EXPECT_TRUE(violated(CheckKind::kUniversality, a, nullptr));
  EXPECT_FALSE(violated(CheckKind::kEmptiness, bottom, nullptr));
  EXPECT_TRUE(violated(CheckKind::kEmptiness, a, nullptr));
  EXPECT_FALSE(violated(CheckKind::kInclusion, a, &top));
  EXPECT_TRUE(violated(CheckKind::kInclusion, top, &a));
  EXPECT_FALSE(violated(CheckKind::kEquality, a, &a));
  EXPECT_TRUE(violated(CheckKind::kEquality, a, &top));
}

TEST(CheckTest, InvalidInputsNeverViolate) {
  Program bottom = Parse("program f over {a, b}\nbool Out := false\n");
  auto u = BuildUnit(CheckKind::kUniversality, bottom, nullptr);
  ASSERT_TRUE(u.ok());
  std::vector<std::vector<int64_t>> junk = {
      {2, 3, 3}, {3, 0, 2}, {0, 3, 2}, {0, 9, 2}, {1, 3, 2, 3}, {7, 2}};
  auto v = lustre::BoundedCheck(u->node, junk);
  ASSERT_TRUE(v.ok());
  EXPECT_FALSE(v->has_value());
}

TEST(EmitTest, DeterministicAndRoundTrips) {
  Program dyck = Parse(kDyck), balanced = Parse(kBalanced);
  for (CheckKind k : {CheckKind::kInclusion, CheckKind::kEquality,
                      CheckKind::kUniversality, CheckKind::kEmptiness}) {
    auto u = BuildUnit(k, dyck, IsBinary(k) ? &balanced : nullptr);
    ASSERT_TRUE(u.ok());
    auto again = BuildUnit(k, dyck, IsBinary(k) ? &balanced : nullptr);
    std::string text = EmitLustre(*u);
    EXPECT_EQ(text, EmitLustre(*again));
    auto back = lustre::ParseNode(text);
    ASSERT_TRUE(back.ok()) << back.status() << "\n" << text;
    EXPECT_EQ(*back, u->node) << text;
  }
}

TEST(EmitTest, GoldenFile) {
  auto u = BuildUnit(CheckKind::kUniversality, Parse(kDyck), nullptr);
  ASSERT_TRUE(u.ok());
  EXPECT_EQ(EmitLustre(*u),
            ReadFile(std::string(CRASP_DATA_DIR) + "/golden/dyck_universality.lus"));
  EXPECT_EQ(EmitSidecar(*u),
            ReadFile(std::string(CRASP_DATA_DIR) + "/golden/dyck_universality.json"));
}

TEST(EmitTest, SidecarRoundTrip) {
  Program dyck = Parse(kDyck), balanced = Parse(kBalanced);
  auto u = BuildUnit(CheckKind::kInclusion, dyck, &balanced);
  ASSERT_TRUE(u.ok());
  auto s = ParseSidecar(EmitSidecar(*u));
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->kind, "inclusion");
  EXPECT_EQ(s->node, u->node.name);
  EXPECT_EQ(s->codec.alphabet(), u->codec.alphabet());
  ASSERT_EQ(s->programs.size(), 2u);
  EXPECT_EQ(s->programs[1].acceptor_var, u->programs[1].acceptor_var);
  EXPECT_EQ(s->programs[0].rule_vars, u->programs[0].rule_vars);
  EXPECT_FALSE(ParseSidecar("{}").ok());
  EXPECT_FALSE(ParseSidecar("not json").ok());
}

}  // namespace
}  // namespace crasp::c2l
