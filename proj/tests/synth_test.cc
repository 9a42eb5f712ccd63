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

#include <cmath>
#include <fstream>
#include <map>
#include <string>

#include "crasp/benchlang/languages.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"
#include "crasp/synth/anneal.h"
#include "crasp/synth/fragment.h"
#include "crasp/text/syntax.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace crasp::synth {
namespace {

Program Parse(const std::string& text) {
  auto p = ParseProgram(text);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

Dataset Sample(const std::string& lang, int count, int max_length = 30,
               uint64_t seed = 1) {
  benchlang::SamplerConfig cfg;
  cfg.count = count;
  cfg.max_length = max_length;
  cfg.seed = seed;
  auto r = benchlang::SampleDataset(**benchlang::FindLanguage(lang), cfg);
  EXPECT_TRUE(r.ok()) << r.status();
  return r->dataset;
}

Alphabet AB() { return *Alphabet::Create({"a", "b"}); }

int DifferingRules(const Program& a, const Program& b) {
  int n = 0;
  for (size_t i = 0; i < a.rules.size(); ++i) n += !(a.rules[i] == b.rules[i]);
  return n;
}

TEST(ShapeTest, LayoutAndParsing) {
  auto names = [](Shape s) { return RuleNames(s); };
  using V = std::vector<std::string>;
  EXPECT_EQ(names({1, 0, 0}), (V{"Out"}));
  EXPECT_EQ(names({2, 1, 0}), (V{"B1", "C1", "Out"}));
  EXPECT_EQ(names({1, 2, 0}), (V{"C1", "C2", "Out"}));
  EXPECT_EQ(names({4, 1, 0}), (V{"B1", "C1", "B2", "B3", "Out"}));
  EXPECT_EQ(Layout({3, 2, 0}), (std::vector<bool>{1, 0, 1, 0, 1}));
  EXPECT_EQ(*ParseShape("2,1,3"), (Shape{2, 1, 3}));
  EXPECT_FALSE(ParseShape("0,1,0").ok());
  EXPECT_FALSE(ParseShape("1,-1,0").ok());
  EXPECT_FALSE(ParseShape("1,1").ok());
  EXPECT_EQ(ToString(Shape{2, 1, 3}), "2,1,3");
}

TEST(ShapeTest, ShapeOfAndConformance) {
  Program dyck = *benchlang::ReferenceProgram(
      **benchlang::FindLanguage("dyck1"));
  EXPECT_EQ(ShapeOf(dyck), (Shape{6, 4, 0}));
  EXPECT_TRUE(ConformsToShape(dyck, {6, 4, 0}));
  EXPECT_FALSE(ConformsToShape(dyck, {5, 4, 0}));
  Program k = Parse("program k over {a}\nbool Out := #('a') = 2\n");
  EXPECT_FALSE(ConformsToShape(k, {1, 0, 1}));
  EXPECT_TRUE(ConformsToShape(k, {1, 0, 2}));
  // Conforming but outside the fragment: nested connectives.
  Program nested =
      Parse("program n over {a, b}\nbool Out := 'a' and 'b' and 'a'\n");
  EXPECT_TRUE(ConformsToShape(nested, {1, 0, 0}));
  EXPECT_FALSE(CheckFragment(nested, {1, 0, 0}).ok());
}

TEST(SampleInitialTest, SmallestShape) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    Program p = SampleInitial({1, 0, 2}, AB(), rng);
    ASSERT_EQ(p.rules.size(), 1u);
    EXPECT_TRUE(p.rules[0].is_bool());
    EXPECT_EQ(p.rules[0].name, "Out");
  }
}

TEST(SampleInitialTest, AlwaysInFragmentAndDeterministic) {
  Rng rng(2);
  const Shape shapes[] = {{1, 0, 0}, {2, 1, 1}, {3, 2, 2}, {1, 3, 0}, {5, 0, 1}};
  for (int i = 0; i < 1000; ++i) {
    const Shape& s = shapes[i % 5];
    Program p = SampleInitial(s, AB(), rng);
    ASSERT_TRUE(CheckFragment(p, s).ok()) << PrintProgram(p);
    auto round = ParseProgram(PrintProgram(p));
    ASSERT_TRUE(round.ok());
    ASSERT_EQ(*round, p);
  }
  Rng r1(42), r2(42);
  EXPECT_EQ(SampleInitial({3, 2, 2}, AB(), r1),
            SampleInitial({3, 2, 2}, AB(), r2));
}

TEST(MutateTest, StaysInFragmentAndChangesOneRule) {
  Rng rng(3);
  Shape s{3, 2, 2};
  Program p = SampleInitial(s, AB(), rng);
  std::map<std::string, int> moves;
  for (int i = 0; i < 10000; ++i) {
    MutationInfo info;
    Program q = Mutate(p, s, rng, &info);
    ASSERT_TRUE(CheckFragment(q, s).ok()) << PrintProgram(q);
    ASSERT_EQ(DifferingRules(p, q), 1);
    ASSERT_FALSE(q.rules[info.rule] == p.rules[info.rule]);
    ++moves[info.move];
    p = q;
  }
  for (const char* m : {"resample", "swap-junction", "toggle-negation",
                        "flip-strictness", "resample-leaf", "change-op",
                        "swap-branches"}) {
    EXPECT_GT(moves[m], 0) << m;
  }
}

TEST(MutateTest, SwapJunction) {
  Shape s{1, 0, 0};
  Program p = Parse("program p over {a, b}\nbool Out := 'a' and 'b'\n");
  ASSERT_TRUE(CheckFragment(p, s).ok());
  Program want = Parse("program p over {a, b}\nbool Out := 'a' or 'b'\n");
  Rng rng(4);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    MutationInfo info;
    Program q = Mutate(p, s, rng, &info);
    if (info.move != "swap-junction") continue;
    ++seen;
    EXPECT_EQ(q, want);
  }
  EXPECT_GT(seen, 0);
}

TEST(MutateTest, FlipStrictness) {
  Shape s{1, 0, 0};
  Program p = Parse("program p over {a, b}\nbool Out := #('a') < #('b')\n");
  Program want = Parse("program p over {a, b}\nbool Out := #('a') <= #('b')\n");
  Rng rng(5);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    MutationInfo info;
    Program q = Mutate(p, s, rng, &info);
    if (info.move != "flip-strictness") continue;
    ++seen;
    EXPECT_EQ(q, want);
  }
  EXPECT_GT(seen, 0);
}

// Replacing each body in order by the target's is a chain of resample
// moves, each inside the support of the resampling grammar.
TEST(MutateTest, NeighbourhoodIsConnected) {
  Rng rng(6);
  Shape s{3, 2, 1};
  for (int i = 0; i < 10; ++i) {
    Program from = SampleInitial(s, AB(), rng);
    for (int j = 0; j < 10; ++j) {
      Program to = SampleInitial(s, AB(), rng);
      Program cur = from;
      for (size_t r = 0; r < cur.rules.size(); ++r) {
        cur.rules[r].body = to.rules[r].body;
        ASSERT_TRUE(CheckRuleBody(cur, r, s).ok());
        ASSERT_TRUE(CheckFragment(cur, s).ok());
      }
      EXPECT_EQ(cur, to);
    }
  }
}

TEST(ScoreTest, Examples) {
  Dataset d = Sample("dyck1", 1000, 40);
  Weights w;
  auto top = ScoreProgram(Parse("program t over {l, r}\nbool Out := true\n"),
                          d, w);
  EXPECT_EQ(top->mis, d.negatives());
  auto bottom =
      ScoreProgram(Parse("program t over {l, r}\nbool Out := false\n"), d, w);
  EXPECT_EQ(bottom->mis, d.positives());
  Program ref = *benchlang::ReferenceProgram(**benchlang::FindLanguage("dyck1"));
  auto s = ScoreProgram(ref, d, w);
  EXPECT_EQ(s->mis, 0);
  EXPECT_EQ(s->unreach, 2);  // L and R are never used
  EXPECT_EQ(s->size, AstSize(ref));
  EXPECT_EQ(s->energy, 5 * 2 + AstSize(ref));
}

TEST(ScoreTest, WeightsMustSeparateMis) {
  EXPECT_TRUE(CheckWeights({}).ok());
  EXPECT_FALSE(CheckWeights({10, 5, 1}).ok());
  EXPECT_FALSE(CheckWeights({1000, -1, 1}).ok());
}

TEST(AcceptanceRuleTest, MonteCarlo) {
  EXPECT_TRUE(AcceptMove(0, 1e-9, 0.999999));
  EXPECT_TRUE(AcceptMove(-5, 1, 0.999999));
  Rng rng(7);
  int hits = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) hits += AcceptMove(2.5, 2.5, rng.UniformReal());
  EXPECT_NEAR(static_cast<double>(hits) / n, std::exp(-1.0), 0.01);
}

AnnealConfig SmallConfig(Shape s, int64_t budget) {
  AnnealConfig c;
  c.shape = s;
  c.schedule.budget = budget;
  c.schedule.stall_iters = 2000;
  c.log_stride = 1;
  return c;
}

TEST(AnnealTest, MajorityReachesZero) {
  Dataset d = Sample("majority", 300);
  auto r = Synthesize(d, SmallConfig({1, 0, 0}, 6000), 1);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->best_score.mis, 0) << PrintProgram(r->best);
  auto check = ScoreProgram(r->best, d, {});
  EXPECT_EQ(check->mis, r->best_score.mis);
  EXPECT_EQ(check->energy, r->best_score.energy);
  EXPECT_EQ(ScoreProgram(r->answer, d, {})->mis, 0);
}

TEST(AnnealTest, LogInvariants) {
  Dataset d = Sample("astarbstar", 200);
  AnnealConfig c = SmallConfig({2, 1, 1}, 4000);
  auto r = Synthesize(d, c, 3);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(static_cast<int64_t>(r->log.size()), r->iterations);
  double best = 1e300;
  for (const LogEntry& e : r->log) {
    EXPECT_LE(e.best_energy, best);
    best = e.best_energy;
    if (e.delta <= 0 && !(e.refining && e.mis > 0)) {
      EXPECT_TRUE(e.accepted);
    }
  }
  for (const Program* p : {&r->best}) {
    EXPECT_TRUE(CheckFragment(*p, c.shape).ok());
  }
}

TEST(AnnealTest, Deterministic) {
  Dataset d = Sample("tomita7", 200);
  AnnealConfig c = SmallConfig({2, 1, 1}, 3000);
  auto a = Synthesize(d, c, 11);
  auto b = Synthesize(d, c, 11);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->best, b->best);
  EXPECT_EQ(LogJsonLines(a->log), LogJsonLines(b->log));
  auto other = Synthesize(d, c, 12);
  EXPECT_NE(LogJsonLines(a->log), LogJsonLines(other->log));
}

TEST(AnnealTest, ErrorsAndReheat) {
  Dataset d = Sample("tomita1", 50);
  AnnealConfig c = SmallConfig({1, 0, 0}, 10);
  c.schedule.alpha = 1.5;
  EXPECT_FALSE(Synthesize(d, c, 1).ok());
  c = SmallConfig({1, 0, 0}, 10);
  Rng rng(1);
  Program wrong = SampleInitial({2, 0, 0}, d.alphabet, rng);
  EXPECT_FALSE(Anneal(wrong, d, c, rng).ok());

  // T follows alpha each step and rho at multiples of the interval.
  c.schedule.reheat_every = 4;
  c.schedule.alpha = 0.5;
  c.schedule.reheat = 3;
  c.refine = false;
  auto r = Synthesize(d, c, 1);
  ASSERT_TRUE(r.ok());
  std::vector<double> want = {1, 0.5, 0.25, 0.125, 0.1875};
  for (size_t i = 0; i < want.size(); ++i) {
    EXPECT_DOUBLE_EQ(r->log[i].temperature, want[i]) << i;
  }
}

TEST(RefineTest, RemovesDeadRule) {
  Dataset d = Sample("tomita1", 200);
  Shape s{2, 0, 0};
  Program p0 = Parse(
      "program synth over {a, b}\nbool B1 := 'a'\nbool Out := #('b') = 0\n");
  ASSERT_TRUE(CheckFragment(p0, s).ok());
  AnnealConfig c = SmallConfig(s, 20000);
  Rng rng(9);
  auto r = Anneal(p0, d, c, rng);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->first_zero_iter, 0);
  EXPECT_EQ(r->refine_start.unreach, 1);
  EXPECT_EQ(r->best_score.mis, 0);
  EXPECT_LT(r->best_score.unreach, 1) << PrintProgram(r->best);
  for (const LogEntry& e : r->log) ASSERT_TRUE(e.refining);
  for (const LogEntry& e : r->log) {
    if (e.accepted) {
      ASSERT_EQ(e.mis, 0);
    }
  }
}

TEST(RefineTest, NeverGrowsAcrossSeeds) {
  Dataset d = Sample("existential", 200);
  AnnealConfig c = SmallConfig({2, 1, 1}, 3000);
  c.log_stride = 0;
  int refined = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto r = Synthesize(d, c, seed);
    ASSERT_TRUE(r.ok());
    if (r->first_zero_iter < 0) continue;
    ++refined;
    EXPECT_EQ(r->best_score.mis, 0);
    EXPECT_LE(r->best_score.size, r->refine_start.size);
    EXPECT_LE(r->best_score.unreach, r->refine_start.unreach);
  }
  EXPECT_GT(refined, 10);
}

TEST(RestartTest, PicksBestSeed) {
  Dataset d = Sample("existential", 200);
  AnnealConfig c = SmallConfig({1, 0, 1}, 2000);
  c.log_stride = 0;
  auto r = SynthesizeRestarts(d, c, {1, 2, 3});
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->runs.size(), 3u);
  for (const AnnealResult& run : r->runs) {
    EXPECT_LE(r->runs[r->best].best_score.energy, run.best_score.energy);
  }
  auto single = Synthesize(d, c, 2);
  EXPECT_EQ(single->best, r->runs[1].best);
}

TEST(ConfigTest, LoadAnnealConfig) {
  std::string path = ::testing::TempDir() + "/synth_config.json";
  std::ofstream(path) << R"({"verifier": {"bound": 4},
    "synthesis": {"shape": "3,1,2", "alpha": 0.99, "budget": 77,
                  "lambda_size": 2, "refine": false}})";
  AnnealConfig c;
  ASSERT_TRUE(LoadAnnealConfig(path, c).ok());
  EXPECT_EQ(c.shape, (Shape{3, 1, 2}));
  EXPECT_DOUBLE_EQ(c.schedule.alpha, 0.99);
  EXPECT_EQ(c.schedule.budget, 77);
  EXPECT_DOUBLE_EQ(c.weights.size, 2);
  EXPECT_FALSE(c.refine);
  EXPECT_EQ(c.schedule.reheat_every, 4000);

  std::ofstream(path) << R"({"synthesis": {"alpha": 2}})";
  EXPECT_FALSE(LoadAnnealConfig(path, c).ok());
  std::ofstream(path) << R"({"synthesis": {"temperature": 2}})";
  EXPECT_FALSE(LoadAnnealConfig(path, c).ok());
  std::ofstream(path) << R"({"synthesis": {"lambda_mis": 10}})";
  EXPECT_FALSE(LoadAnnealConfig(path, c).ok());
  EXPECT_FALSE(LoadAnnealConfig(path + ".missing", c).ok());
}

}  // namespace
}  // namespace crasp::synth
