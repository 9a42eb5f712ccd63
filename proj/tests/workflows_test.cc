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

#include "crasp/benchlang/languages.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"
#include "crasp/text/samples.h"
#include "crasp/text/syntax.h"
#include "crasp/workflows/workflows.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace crasp::workflows {
namespace {

Program Parse(const std::string& text) {
  auto p = ParseProgram(text);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

Program Reference(const std::string& lang) {
  return *benchlang::ReferenceProgram(**benchlang::FindLanguage(lang));
}

TEST(ShapeScheduleTest, ShrinkAndGrow) {
  using S = synth::Shape;
  EXPECT_EQ(*Shrink({3, 2, 1}), (S{2, 2, 1}));
  EXPECT_EQ(*Shrink({1, 2, 1}), (S{1, 1, 1}));
  EXPECT_EQ(*Shrink({1, 0, 1}), (S{1, 0, 0}));
  EXPECT_FALSE(Shrink({1, 0, 0}).has_value());
  EXPECT_EQ(Grow({1, 0, 0}, {3, 1, 2}), (S{2, 1, 2}));
  EXPECT_EQ(Grow({3, 1, 2}, {3, 1, 2}), (S{3, 1, 2}));
  EXPECT_EQ(Grow({4, 0, 0}, {3, 1, 0}), (S{4, 1, 0}));
}

TEST(DefaultShapeTest, ValidForEveryLanguage) {
  for (const benchlang::Language& l : benchlang::Catalog()) {
    synth::Shape s = DefaultShape(l.name);
    EXPECT_TRUE(synth::CheckShape(s).ok()) << l.name;
  }
  EXPECT_EQ(DefaultShape("not-a-language"), (synth::Shape{2, 1, 1}));
}

TEST(SampleForSpecTest, LabelsComeFromSpec) {
  Program spec = Reference("tomita1");
  MinimizeOptions o;
  o.samples = 100;
  o.max_length = 12;
  Dataset d = *SampleForSpec(spec, o);
  EXPECT_EQ(d.size(), 100);
  EXPECT_EQ(d.positives(), 50);
  for (const LabeledWord& e : d.examples) {
    EXPECT_EQ(*Accepts(spec, e.word), e.positive);
  }
  o.language = *benchlang::FindLanguage("tomita1");
  Dataset d2 = *SampleForSpec(spec, o);
  EXPECT_EQ(d2.size(), 100);
  for (const LabeledWord& e : d2.examples) {
    EXPECT_EQ(*Accepts(spec, e.word), e.positive);
  }
  o.language = *benchlang::FindLanguage("pt3");
  EXPECT_FALSE(SampleForSpec(spec, o).ok());
}

TEST(SampleForSpecTest, ToleratesOneSidedSpecs) {
  Program top = Parse("program top over {a, b}\nbool Out := true\n");
  MinimizeOptions o;
  o.samples = 40;
  o.max_length = 5;
  Dataset d = *SampleForSpec(top, o);
  EXPECT_EQ(d.size(), 40);
  EXPECT_EQ(d.positives(), 40);
}

TEST(MinimizeTest, UniversalSpecStopsAfterOneRound) {
  Program top = Parse("program top over {a, b}\nbool Out := true\n");
  MinimizeOptions o;
  o.max_length = 20;
  o.anneal.schedule.budget = 5000;
  auto r = Minimize(top, o);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->run.rounds.size(), 1u);
  EXPECT_EQ(r->run.termination, Termination::kVerified);
  EXPECT_EQ(r->program, top);
  EXPECT_FALSE(r->improved);
  EXPECT_FALSE(r->run.note.empty());
}

TEST(MinimizeTest, Tomita1) {
  Program spec = Reference("tomita1");
  MinimizeOptions o;
  o.language = *benchlang::FindLanguage("tomita1");
  auto r = Minimize(spec, o);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->run.termination, Termination::kVerified);
  EXPECT_EQ(r->run.confidence, Confidence::kTentative);
  EXPECT_LE(AstSize(r->program), AstSize(spec));
  // Independent check: agreement on every word up to length 12.
  for (int n = 1; n <= 12; ++n) {
    for (int bits = 0; bits < (1 << n); ++bits) {
      Word w;
      for (int i = 0; i < n; ++i) w.push_back((bits >> i) & 1);
      ASSERT_EQ(*Accepts(r->program, w), *Accepts(spec, w));
    }
  }
  // Rounds record their timings and the dataset never shrinks.
  int last = 0;
  for (const Round& round : r->run.rounds) {
    EXPECT_GE(round.dataset_size, last);
    last = round.dataset_size;
    EXPECT_GT(round.synth_s, 0);
  }
  auto again = Minimize(spec, o);
  EXPECT_EQ(again->program, r->program);
}

TEST(MinimizeTest, CounterexamplesAreDistinctAndLabeledBySpec) {
  // A spec whose positives are rare under the sampler forces refinement.
  Program spec = Parse(
      "program s over {a, b}\n"
      "bool Out := #('a') = 3 and #('b') = 0\n");
  MinimizeOptions o;
  o.samples = 20;
  o.max_length = 3;
  o.max_rounds = 6;
  o.anneal.schedule.budget = 3000;
  auto r = Minimize(spec, o);
  ASSERT_TRUE(r.ok()) << r.status();
  std::set<Word> seen;
  EXPECT_FALSE(r->run.added().empty());
  for (const LabeledWord& e : r->run.added()) {
    EXPECT_TRUE(seen.insert(e.word).second);
    EXPECT_EQ(*Accepts(spec, e.word), e.positive);
  }
  EXPECT_LE(AstSize(r->program), AstSize(spec));
}

TEST(LearnTest, InfeasibleDatasetIsRejected) {
  Program spec = Reference("tomita1");
  Dataset d;
  d.alphabet = spec.alphabet;
  d.Add({0, 0}, true);
  d.Add({0, 1, 0}, true);
  auto r = LearnConstrained(d, spec, {});
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(absl::IsInvalidArgument(r.status()));
  EXPECT_NE(r.status().message().find("'aba'"), std::string::npos);
}

TEST(LearnTest, AddedWordsAreOutsideSpec) {
  // Positives a, aa, aaa; spec additionally forbids length > 4 so a
  // candidate fitting the data alone tends to overshoot.
  Program spec = Parse(
      "program s over {a, b}\n"
      "bool Out := #('b') = 0 and #('a') <= 4\n");
  Dataset d;
  d.alphabet = spec.alphabet;
  d.Add({0}, true);
  d.Add({0, 0}, true);
  d.Add({0, 0, 0}, true);
  d.Add({1}, false);
  d.Add({0, 1}, false);
  LoopOptions o;
  o.anneal.shape = {1, 0, 4};
  o.anneal.schedule.budget = 5000;
  o.verify.bound = 8;
  auto r = LearnConstrained(d, spec, o);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->run.termination, Termination::kVerified);
  EXPECT_FALSE(r->run.added().empty());
  for (const Round& round : r->run.rounds) {
    if (!round.added) continue;
    EXPECT_FALSE(round.added->positive);
    EXPECT_FALSE(*Accepts(spec, round.added->word));
    EXPECT_TRUE(*Accepts(round.candidate, round.added->word));
  }
  for (const LabeledWord& e : r->dataset.examples) {
    EXPECT_EQ(*Accepts(r->program, e.word), e.positive);
  }
  EXPECT_EQ(r->dataset.size(),
            d.size() + static_cast<int>(r->run.added().size()));
}

TEST(LearnTest, AlphabetOrderOfSpecDoesNotMatter) {
  Program spec = Parse("program s over {b, a}\nbool Out := #('b') = 0\n");
  Dataset d;
  d.alphabet = *Alphabet::Create({"a", "b"});
  d.Add({0}, true);
  d.Add({1}, false);
  d.Add({0, 1}, false);
  LoopOptions o;
  o.anneal.shape = {1, 0, 0};
  o.anneal.schedule.budget = 3000;
  auto r = LearnConstrained(d, spec, o);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->run.termination, Termination::kVerified);
}

TEST(VerifierChoiceTest, MissingKind2FallsBackToInternal) {
  verifier::Options o;
  o.backend = verifier::Backend::kKind2;
  o.kind2_path = "/nonexistent/kind2";
  EXPECT_EQ(ResolveVerifier(o).backend, verifier::Backend::kInternal);
  o.backend = verifier::Backend::kLustre;
  EXPECT_EQ(ResolveVerifier(o).backend, verifier::Backend::kLustre);
}

TEST(VerifierChoiceTest, UndecidedExternalRunFallsBack) {
  Program p = Reference("tomita1");
  verifier::Query q{verifier::CheckKind::kEquality, p, p, {}};
  q.options.backend = verifier::Backend::kKind2;
  q.options.kind2_path = "/nonexistent/kind2";
  auto v = CheckWithFallback(q);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v->backend, verifier::Backend::kInternal);
  EXPECT_EQ(v->reason, verifier::Reason::kBoundExhausted);
  EXPECT_NE(v->note.find("tool-missing"), std::string::npos);
}

TEST(ReportTest, RunJson) {
  RefinementRun run;
  Round r;
  r.candidate = Reference("tomita1");
  r.added = LabeledWord{{0, 1}, false};
  r.synth_s = 1.5;
  r.verif_s = 0.25;
  run.rounds = {r, r};
  run.termination = Termination::kTimeout;
  auto j = nlohmann::json::parse(RunJson(run));
  EXPECT_EQ(j["termination"], "timeout");
  EXPECT_EQ(j["confidence"], "none");
  EXPECT_DOUBLE_EQ(j["synth_s"].get<double>(), 3.0);
  EXPECT_DOUBLE_EQ(j["verif_s"].get<double>(), 0.5);
  EXPECT_EQ(j["rounds"][1]["added"]["word"], "ab");
}

TEST(BenchTest, SmallSuite) {
  BenchOptions o;
  o.languages = {"aastar", "parity"};
  o.seeds = 1;
  o.samples = 200;
  o.heldout = 200;
  o.anneal.schedule.budget = 2000;
  o.timeout_s = 60;
  auto rows = RunBench(o);
  ASSERT_TRUE(rows.ok()) << rows.status();
  ASSERT_EQ(rows->size(), 2u);
  const BenchRow& aa = (*rows)[0];
  EXPECT_TRUE(aa.found);
  EXPECT_DOUBLE_EQ(aa.train_accuracy, 1.0);
  EXPECT_TRUE(aa.minimize.ran);
  EXPECT_TRUE(aa.learn.ran);
  const BenchRow& parity = (*rows)[1];
  EXPECT_FALSE(parity.found);
  EXPECT_EQ(parity.minimize.status, "no-reference");
  std::string table = BenchTable(*rows);
  EXPECT_NE(table.find("Parity"), std::string::npos);
  auto j = nlohmann::json::parse(BenchJson(*rows));
  for (const char* key :
       {"language", "accuracy", "status", "minimize", "learn"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_EQ(j[1]["status"], "-");
  for (const char* key : {"rounds", "synth_s", "verif_s", "status"}) {
    EXPECT_TRUE(j[0]["minimize"].contains(key)) << key;
  }
}

}  // namespace
}  // namespace crasp::workflows
