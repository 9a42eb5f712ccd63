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

#include <string>
#include <vector>

#include "crasp/core/ast.h"
#include "crasp/core/dataset.h"
#include "crasp/core/metrics.h"
#include "crasp/core/rng.h"
#include "crasp/core/semantics.h"
#include "gtest/gtest.h"

namespace crasp {
namespace {

// Dyck over {[, ]}: C_lb counts '[', C_rb counts ']'.
Program DyckProgram() {
  Program p;
  p.name = "dyck";
  p.alphabet = *Alphabet::Create({"[", "]"});
  p.rules = {
      CountRule("C_lb", CountAll(Letter(0))),
      CountRule("C_rb", CountAll(Letter(1))),
      BoolRule("V", Compare(CmpOp::kLt, CountRef("C_lb"), CountRef("C_rb"))),
      BoolRule("D", And(Compare(CmpOp::kEq, CountAll(BoolRef("V")), Const(0)),
                        Compare(CmpOp::kEq, CountRef("C_lb"),
                                CountRef("C_rb")))),
  };
  return p;
}

Word W(const std::string& s, const std::string& letters) {
  Word w;
  for (char c : s) w.push_back(static_cast<Symbol>(letters.find(c)));
  return w;
}

TEST(SemanticsTest, ReproducesDyckRuleTrace) {
  Program p = DyckProgram();
  ASSERT_TRUE(ValidateProgram(p).ok());
  auto table = RuleTable(p, W("[[][]]][]", "[]"));
  ASSERT_TRUE(table.ok()) << table.status();
  std::vector<int64_t> lb = {1, 2, 2, 3, 3, 3, 3, 4, 4};
  std::vector<int64_t> rb = {0, 0, 1, 1, 2, 3, 4, 4, 5};
  for (int j = 0; j < 9; ++j) {
    EXPECT_EQ(std::get<int64_t>((*table)[0][j]), lb[j]) << j;
    EXPECT_EQ(std::get<int64_t>((*table)[1][j]), rb[j]) << j;
    // At j = 9 the counts are 4 and 5, so V holds there as well.
    EXPECT_EQ(std::get<bool>((*table)[2][j]), j == 6 || j == 8) << j;
    EXPECT_EQ(std::get<bool>((*table)[3][j]), j == 5) << j;
  }
}

TEST(SemanticsTest, AcceptsDyckExamples) {
  Program p = DyckProgram();
  EXPECT_TRUE(*Accepts(p, W("[]", "[]")));
  EXPECT_TRUE(*Accepts(p, W("[[]]", "[]")));
  EXPECT_TRUE(*Accepts(p, W("[[][]]", "[]")));
  EXPECT_FALSE(*Accepts(p, W("[]]", "[]")));
  EXPECT_FALSE(*Accepts(p, W("][", "[]")));
  EXPECT_FALSE(*Accepts(p, W("[[][]]][]", "[]")));
}

TEST(SemanticsTest, ConstantEverywhere) {
  Program p = DyckProgram();
  for (int j = 1; j <= 3; ++j) {
    auto v = EvalExpr(p, W("[][", "[]"), Const(5), j);
    ASSERT_TRUE(v.ok());
    EXPECT_EQ(std::get<int64_t>(*v), 5);
  }
}

TEST(SemanticsTest, WindowOfWidthOne) {
  Program p;
  p.alphabet = *Alphabet::Create({"a", "b"});
  p.rules = {BoolRule("Out", True())};
  CExp win = CountWindow(1, 1, Letter(0));
  EXPECT_EQ(std::get<int64_t>(*EvalExpr(p, {0, 1}, win, 2)), 1);
  EXPECT_EQ(std::get<int64_t>(*EvalExpr(p, {0, 1}, win, 1)), 0);
}

TEST(SemanticsTest, PeriodicUsesZeroBasedOffset) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {BoolRule("Out", True())};
  Word w(6, 0);
  for (int j = 1; j <= 6; ++j) {
    EXPECT_EQ(std::get<bool>(*EvalExpr(p, w, Periodic(2, 1), j)), j % 2 == 0);
    EXPECT_EQ(std::get<bool>(*EvalExpr(p, w, Periodic(3, 0), j)),
              (j - 1) % 3 == 0);
  }
}

TEST(SemanticsTest, SubtractionGoesNegative) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {BoolRule("Out", True())};
  auto v = EvalExpr(p, {0, 0}, Sub(Const(1), CountAll(Letter(0))), 2);
  EXPECT_EQ(std::get<int64_t>(*v), -1);
}

TEST(SemanticsTest, OverflowIsAnError) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {BoolRule("Out", True())};
  auto v = EvalExpr(p, {0}, Add(Const(INT64_MAX), Const(1)), 1);
  EXPECT_EQ(v.status().code(), absl::StatusCode::kOutOfRange);
}

TEST(SemanticsTest, RejectsBadInputs) {
  Program p = DyckProgram();
  EXPECT_FALSE(Accepts(p, {}).ok());
  EXPECT_FALSE(EvalRule(p, {0}, "D", 2).ok());
  EXPECT_FALSE(EvalRule(p, {0}, "D", 0).ok());
  EXPECT_EQ(EvalRule(p, {0}, "Nope", 1).status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_FALSE(Accepts(p, {2}).ok());
}

TEST(WellFormedTest, DyckIsWellFormed) {
  EXPECT_TRUE(CheckWellFormed(DyckProgram()).empty());
}

TEST(WellFormedTest, LastRuleMustBeBoolean) {
  Program p = DyckProgram();
  p.rules.pop_back();
  p.rules.pop_back();
  auto vs = CheckWellFormed(p);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].message, "last rule not Boolean");
  EXPECT_EQ(vs[0].rule, "C_rb");
}

TEST(WellFormedTest, ForwardReference) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {BoolRule("X", BoolRef("Z")), BoolRule("Y", Letter(0)),
             BoolRule("Z", BoolRef("X"))};
  auto vs = CheckWellFormed(p);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].rule, "X");
  EXPECT_NE(vs[0].message.find("forward reference"), std::string::npos);
}

TEST(WellFormedTest, SideConditions) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {CountRule("C", CountWindow(2, 1, Letter(0))),
             BoolRule("B", CountRef("C") == CountRef("C") ? Periodic(3, 5)
                                                          : True()),
             BoolRule("Out", Letter(3))};
  auto vs = CheckWellFormed(p);
  EXPECT_EQ(vs.size(), 3u);
}

TEST(WellFormedTest, KindMismatchAndDuplicates) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {CountRule("C", CountAll(Letter(0))), BoolRule("C", BoolRef("C"))};
  auto vs = CheckWellFormed(p);
  EXPECT_EQ(vs.size(), 2u);
}

TEST(AlphabetTest, Invariants) {
  EXPECT_FALSE(Alphabet::Create({}).ok());
  EXPECT_FALSE(Alphabet::Create({"a", "a"}).ok());
  EXPECT_TRUE(Alphabet::Create({"lb", "rb"}).ok());
  EXPECT_FALSE(Alphabet::Create({"lb", "rb"})->single_char());
}

TEST(MetricsTest, ReachableRules) {
  EXPECT_EQ(ReachableRules(DyckProgram()),
            (std::set<std::string>{"C_lb", "C_rb", "V", "D"}));
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {BoolRule("A", Letter(0)), BoolRule("Out", True())};
  EXPECT_EQ(ReachableRules(p), (std::set<std::string>{"Out"}));
  EXPECT_EQ(UnreachableRuleCount(p), 1);
  EXPECT_EQ(PruneUnreachable(p).rules.size(), 1u);
}

TEST(MetricsTest, AstSize) {
  Program t;
  t.alphabet = *Alphabet::Create({"a"});
  t.rules = {BoolRule("Out", True())};
  EXPECT_EQ(AstSize(t), 1);

  Program eq;
  eq.alphabet = *Alphabet::Create({"a", "b"});
  eq.rules = {CountRule("C_a", CountAll(Letter(0))),
              CountRule("C_b", CountAll(Letter(1))),
              BoolRule("Out", Compare(CmpOp::kEq, CountRef("C_a"),
                                      CountRef("C_b")))};
  EXPECT_EQ(AstSize(eq), 7);

  // Regression value from a hand count: 2 + 2 + 3 + 8.
  EXPECT_EQ(AstSize(DyckProgram()), 15);
}

TEST(MetricsTest, ConstantsAndWindows) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {CountRule("C", Add(Const(3), CountWindow(0, 2, Letter(0)))),
             BoolRule("Out", Compare(CmpOp::kLe, Const(7), CountRef("C")))};
  EXPECT_EQ(MaxConstant(p), 7);
  EXPECT_EQ(MaxWindowEnd(p), 2);
}

// Random words over {[, ]} for the semantic properties below.
std::vector<Word> RandomWords(uint64_t seed, int count, int max_len) {
  Rng rng(seed);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) {
    Word w(rng.Uniform(1, max_len));
    for (Symbol& s : w) s = static_cast<Symbol>(rng.Uniform(0, 1));
    out.push_back(w);
  }
  return out;
}

TEST(SemanticsPropertyTest, PrefixLocality) {
  Program p = DyckProgram();
  for (const Word& w : RandomWords(1, 50, 12)) {
    Word ext = w;
    ext.push_back(0);
    ext.push_back(1);
    auto a = RuleTable(p, w);
    auto b = RuleTable(p, ext);
    for (size_t r = 0; r < p.rules.size(); ++r) {
      for (size_t j = 0; j < w.size(); ++j) {
        EXPECT_EQ((*a)[r][j], (*b)[r][j]);
      }
    }
  }
}

TEST(SemanticsPropertyTest, CountingConsistencyAndWindowAgreement) {
  Program p = DyckProgram();
  BExp e = BoolRef("V");
  for (const Word& w : RandomWords(2, 50, 12)) {
    int n = static_cast<int>(w.size());
    int64_t prev = 0;
    for (int j = 1; j <= n; ++j) {
      int64_t c = std::get<int64_t>(*EvalExpr(p, w, CountAll(e), j));
      bool holds = std::get<bool>(*EvalExpr(p, w, e, j));
      EXPECT_EQ(c - prev, holds ? 1 : 0);
      EXPECT_LE(c, j);
      EXPECT_EQ(std::get<int64_t>(*EvalExpr(p, w, CountWindow(0, j - 1, e), j)),
                c);
      prev = c;
    }
  }
}

TEST(DatasetTest, Consistency) {
  Dataset d;
  d.alphabet = *Alphabet::Create({"a", "b"});
  d.Add({0, 1}, true);
  d.Add({0, 1}, true);
  EXPECT_TRUE(CheckDataset(d).ok());
  EXPECT_EQ(d.positives(), 2);
  d.Add({0, 1}, false);
  EXPECT_NE(CheckDataset(d).message().find("contradictory labels"),
            std::string::npos);
  Dataset e;
  e.alphabet = d.alphabet;
  e.Add({}, true);
  EXPECT_FALSE(CheckDataset(e).ok());
}

TEST(RngTest, Deterministic) {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.Uniform(0, 9), b.Uniform(0, 9));
  }
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    int64_t x = c.Uniform(-2, 2);
    EXPECT_GE(x, -2);
    EXPECT_LE(x, 2);
    double r = c.UniformReal();
    EXPECT_GE(r, 0.0);
    EXPECT_LT(r, 1.0);
  }
}

}  // namespace
}  // namespace crasp
