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

#include "crasp/core/rng.h"
#include "crasp/lustre/ast.h"
#include "crasp/lustre/eval.h"
#include "crasp/lustre/text.h"
#include "gtest/gtest.h"

namespace crasp::lustre {
namespace {

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

Node Single(Expr rhs, Sort sort = Sort::kInt) {
  Node n;
  n.locals = {{"X", sort}};
  n.equations = {{"X", rhs}};
  return n;
}

std::vector<int64_t> RunX(const Node& n, int len) {
  std::vector<int64_t> input(len, 0);
  auto t = RunNode(n, input);
  EXPECT_TRUE(t.ok()) << t.status();
  return *t->Find("X");
}

TEST(LustreRunTest, ReproducesDyckCounterTrace) {
  auto node = ParseNode(kDyckCounters);
  ASSERT_TRUE(node.ok()) << node.status();
  std::vector<int64_t> input = {0, 0, 1, 0, 1, 1, 1};
  auto t = RunNode(*node, input);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(*t->Find("Nl"), (std::vector<int64_t>{1, 1, 0, 1, 0, 0, 0}));
  EXPECT_EQ(*t->Find("Nr"), (std::vector<int64_t>{0, 0, 1, 0, 1, 1, 1}));
  EXPECT_EQ(*t->Find("Cl"), (std::vector<int64_t>{1, 2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(*t->Find("Cr"), (std::vector<int64_t>{0, 0, 1, 1, 2, 3, 4}));
  EXPECT_EQ(*t->Find("V"), (std::vector<int64_t>{0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(*t->Find("Nv"), (std::vector<int64_t>{0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(*t->Find("Cv"), (std::vector<int64_t>{0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(*t->Find("D"), (std::vector<int64_t>{0, 0, 0, 0, 0, 1, 0}));
}

TEST(LustreRunTest, ArrowAndPreStreams) {
  EXPECT_EQ(RunX(Single(Arrow(Const(1), Const(2))), 4),
            (std::vector<int64_t>{1, 2, 2, 2}));
  EXPECT_EQ(RunX(Single(Arrow(Const(1), Arrow(Const(1), Const(2)))), 4),
            (std::vector<int64_t>{1, 2, 2, 2}));
  EXPECT_EQ(RunX(Single(Arrow(Const(1), Add(Pre(IntVar("X")), Const(1)))), 4),
            (std::vector<int64_t>{1, 2, 3, 4}));
  Expr nested =
      Arrow(Const(1), Pre(Arrow(Const(2), Pre(Arrow(Const(3), Const(4))))));
  EXPECT_EQ(RunX(Single(nested), 6),
            (std::vector<int64_t>{1, 2, 3, 4, 4, 4}));
}

TEST(LustreRunTest, EuclideanMod) {
  Node n = Single(Mod(Sub(Const(0), Arrow(Const(0), Add(Pre(IntVar("X")),
                                                          Const(0)))),
                      Const(3)));
  // X = (0 - (0 -> pre X)) mod 3 stays 0.
  EXPECT_EQ(RunX(n, 3), (std::vector<int64_t>{0, 0, 0}));
  Node m = Single(Mod(Sub(Const(0), Const(4)), Const(3)));
  EXPECT_EQ(RunX(m, 1), (std::vector<int64_t>{2}));
}

TEST(LustreCheckTest, DyckCounterProperty) {
  auto node = ParseNode(kDyckCounters);
  ASSERT_TRUE(node.ok());
  node->check = Or(Not(Eq(IntVar("Cr"), Const(3))), BoolVar("D"));
  auto ok = BoundedCheck(*node, {{0, 0, 1, 0, 1, 1, 1}});
  ASSERT_TRUE(ok.ok()) << ok.status();
  EXPECT_FALSE(ok->has_value());
  auto bad = BoundedCheck(*node, {{0, 0, 1, 0, 1, 1, 1}, {1, 1, 1}});
  ASSERT_TRUE(bad.ok());
  ASSERT_TRUE(bad->has_value());
  // Cr reaches 3 at 0-based position 2 while D is false.
  EXPECT_EQ(**bad, (CheckViolation{1, 2}));
}

TEST(LustreCheckTest, TrueCheckNeverFails) {
  Node n = Single(Const(0));
  n.check = True();
  std::vector<std::vector<int64_t>> inputs = {{1, 2, 3}, {5}, {0, 0}};
  EXPECT_FALSE(BoundedCheck(n, inputs)->has_value());
}

TEST(LustreCheckNodeTest, UnguardedPre) {
  Node n = Single(Add(Pre(IntVar("X")), Const(1)));
  absl::Status s = CheckNode(n);
  EXPECT_NE(s.message().find("equation for 'X'"), std::string::npos) << s;
  EXPECT_NE(s.message().find("not guarded"), std::string::npos) << s;
  // pre(pre(X)) under one arrow: the inner pre is unguarded.
  Node m = Single(Arrow(Const(0), Pre(Pre(IntVar("X")))));
  EXPECT_FALSE(CheckNode(m).ok());
  Node ok = Single(Arrow(Const(0), Pre(Arrow(Const(0), Pre(IntVar("X"))))));
  EXPECT_TRUE(CheckNode(ok).ok());
}

TEST(LustreCheckNodeTest, StructuralErrors) {
  EXPECT_FALSE(CheckNode(Single(True())).ok());  // sort
  EXPECT_FALSE(CheckNode(Single(Mod(Const(1), IntVar("I")))).ok());
  EXPECT_FALSE(CheckNode(Single(Mod(Const(1), Const(0)))).ok());
  EXPECT_FALSE(CheckNode(Single(IntVar("Y"))).ok());
  Node dup = Single(Const(1));
  dup.equations.push_back({"X", Const(2)});
  EXPECT_FALSE(CheckNode(dup).ok());
  Node missing = Single(Const(1));
  missing.locals.push_back({"Y", Sort::kInt});
  EXPECT_FALSE(CheckNode(missing).ok());
  Node cyc;
  cyc.locals = {{"X", Sort::kInt}, {"Y", Sort::kInt}};
  cyc.equations = {{"X", IntVar("Y")}, {"Y", Add(IntVar("X"), Const(1))}};
  EXPECT_TRUE(CheckNode(cyc).ok());
  EXPECT_NE(CompiledNode::Compile(cyc).status().message().find("causality"),
            std::string::npos);
}

TEST(LustreTextTest, PrintParseRoundTrip) {
  auto node = ParseNode(kDyckCounters);
  ASSERT_TRUE(node.ok());
  node->check = Arrow(True(), Or(Not(Eq(IntVar("Cr"), Const(3))),
                                 Pre(BoolVar("D"))));
  node->property_name = "dyck3";
  std::string text = PrintNode(*node);
  auto again = ParseNode(text);
  ASSERT_TRUE(again.ok()) << again.status() << "\n" << text;
  EXPECT_EQ(*again, *node) << text;
  EXPECT_EQ(PrintNode(*again), text);
  EXPECT_NE(text.find("  Cl = (0 -> pre(Cl)) + Nl;\n"), std::string::npos)
      << text;
  EXPECT_NE(text.find("--%PROPERTY \"dyck3\" "), std::string::npos);
}

TEST(LustreTextTest, ParseErrorsAreLocated) {
  auto bad = ParseNode("node n(I: int) returns (X: int);\nlet\n  X = Y;\ntel\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("3:7:"), std::string::npos)
      << bad.status();
  EXPECT_FALSE(ParseNode("node n(I: int) returns (X: int); let X = 1 tel").ok());
}

// lval straight from its definition, reading variables from a finished
// trace. Independent of the compiled stepper.
int64_t Lval(const Expr& e, int i, const Trace& t) {
  auto v = [&](int k) { return Lval(e->args[k], i, t); };
  switch (e->op) {
    case Op::kTrue:
      return 1;
    case Op::kFalse:
      return 0;
    case Op::kConst:
      return e->value;
    case Op::kVar:
      return e->name == "I" ? t.input[i] : (*t.Find(e->name))[i];
    case Op::kNot:
      return !v(0);
    case Op::kAnd:
      return v(0) && v(1);
    case Op::kOr:
      return v(0) || v(1);
    case Op::kEq:
      return v(0) == v(1);
    case Op::kLe:
      return v(0) <= v(1);
    case Op::kLt:
      return v(0) < v(1);
    case Op::kAdd:
      return v(0) + v(1);
    case Op::kSub:
      return v(0) - v(1);
    case Op::kMod: {
      int64_t m = v(1), r = v(0) % m;
      return r < 0 ? r + m : r;
    }
    case Op::kIte:
      return v(0) ? v(1) : v(2);
    case Op::kPre:
      return Lval(e->args[0], i - 1, t);
    case Op::kArrow:
      return i == 0 ? v(0) : v(1);
  }
  return 0;
}

TEST(LustrePropertyTest, TracesSatisfyEquationsAndArePrefixClosed) {
  auto node = ParseNode(kDyckCounters);
  ASSERT_TRUE(node.ok());
  // Extra equations exercising mod, nested arrows and windows.
  node->locals.push_back({"P", Sort::kInt});
  node->equations.push_back(
      {"P", Arrow(Const(0), Add(Pre(IntVar("P")), Const(1)))});
  node->locals.push_back({"W", Sort::kInt});
  node->equations.push_back(
      {"W", Add(IntVar("Nl"),
                Arrow(Const(0), Pre(Add(IntVar("Nl"),
                                        Arrow(Const(0), Pre(IntVar("Nl")))))))});
  node->locals.push_back({"E", Sort::kBool});
  node->equations.push_back({"E", Eq(Mod(IntVar("P"), Const(3)), Const(1))});
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    std::vector<int64_t> input(rng.Uniform(1, 15));
    for (int64_t& x : input) x = rng.Uniform(0, 2);
    auto t = RunNode(*node, input);
    ASSERT_TRUE(t.ok());
    for (const Equation& eq : node->equations) {
      for (size_t i = 0; i < input.size(); ++i) {
        EXPECT_EQ((*t->Find(eq.var))[i], Lval(eq.rhs, static_cast<int>(i), *t))
            << eq.var << " at " << i;
      }
    }
    std::vector<int64_t> longer = input;
    longer.push_back(rng.Uniform(0, 2));
    auto t2 = RunNode(*node, longer);
    for (size_t v = 0; v < t->values.size(); ++v) {
      std::vector<int64_t> prefix(t2->values[v].begin(),
                                  t2->values[v].begin() + input.size());
      EXPECT_EQ(prefix, t->values[v]);
    }
  }
}

}  // namespace
}  // namespace crasp::lustre
