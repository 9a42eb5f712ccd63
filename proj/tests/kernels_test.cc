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

#include <omp.h>

#include <string>
#include <vector>

#include "crasp/benchlang/languages.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/c2l/translate.h"
#include "crasp/core/rng.h"
#include "crasp/core/semantics.h"
#include "crasp/kernels/compiled_program.h"
#include "crasp/kernels/corpus.h"
#include "crasp/kernels/scorer.h"
#include "crasp/kernels/search.h"
#include "crasp/text/syntax.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace crasp::kernels {
namespace {

using ::crasp::testing::AllWords;
using ::crasp::testing::RandomProgram;
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

Program Parse(const std::string& text) {
  auto p = ParseProgram(text);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

CompiledProgram Compile(const Program& p) {
  auto c = CompiledProgram::Compile(p);
  EXPECT_TRUE(c.ok()) << c.status();
  return *c;
}

TEST(CompiledProgramTest, MatchesInterpreterOnFixtures) {
  for (const benchlang::Language& l : benchlang::Catalog()) {
    if (!l.fixture) continue;
    Program p = *benchlang::ReferenceProgram(l);
    CompiledProgram c = Compile(p);
    int k = p.alphabet.size();
    for (const Word& w : AllWords(k, k == 2 ? 9 : k == 3 ? 6 : 4)) {
      ASSERT_EQ(*c.Accepts(w), *Accepts(p, w)) << l.name;
    }
  }
}

TEST(CompiledProgramTest, MatchesInterpreterOnRandomPrograms) {
  Rng rng(17);
  auto words = AllWords(2, 7);
  for (int i = 0; i < 300; ++i) {
    Program p = RandomProgram(rng, 6);
    CompiledProgram c = Compile(p);
    for (size_t j = 0; j < words.size(); j += 3) {
      ASSERT_EQ(*c.Accepts(words[j]), *Accepts(p, words[j]))
          << PrintProgram(p);
    }
  }
}

TEST(CompiledProgramTest, Errors) {
  Program p;
  p.alphabet = *Alphabet::Create({"a"});
  p.rules = {CountRule("C", Add(Const(INT64_MAX), CountAll(Letter(0)))),
             BoolRule("Out", Compare(CmpOp::kLe, Const(0), CountRef("C")))};
  CompiledProgram c = Compile(p);
  EXPECT_EQ(c.Accepts(Word{0}).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_FALSE(c.Accepts(Word{}).ok());
  EXPECT_FALSE(c.Accepts(Word{1}).ok());
  p.rules.pop_back();
  EXPECT_FALSE(CompiledProgram::Compile(p).ok());
}

TEST(CorpusTest, ParallelMatchesSerial) {
  auto lang = *benchlang::FindLanguage("dyck1");
  benchlang::SamplerConfig cfg;
  cfg.count = 400;
  auto d = benchlang::SampleDataset(*lang, cfg)->dataset;
  Rng rng(3);
  Corpus corpus = Corpus::FromDataset(d);
  for (int i = 0; i < 30; ++i) {
    Program p = RandomProgram(rng, 5);
    p.alphabet = d.alphabet;
    auto c = Compile(p);
    ASSERT_EQ(*Misclassified(c, corpus), *serial::Misclassified(p, d));
  }
  Program ref = *benchlang::ReferenceProgram(*lang);
  EXPECT_EQ(*Misclassified(Compile(ref), corpus), 0);
}

TEST(ColumnScorerTest, IncrementalMatchesSerial) {
  auto lang = *benchlang::FindLanguage("tomita7");
  benchlang::SamplerConfig cfg;
  cfg.count = 300;
  cfg.max_length = 40;
  auto d = benchlang::SampleDataset(*lang, cfg)->dataset;
  ColumnScorer scorer(Corpus::FromDataset(d));
  Rng rng(8);
  Program cur = RandomProgram(rng, 6);
  int reused = 0;
  for (int i = 0; i < 200; ++i) {
    // Replace a suffix of the rules with those of a fresh random program
    // when the rule names line up.
    Program next = RandomProgram(rng, 6);
    if (next.rules.size() == cur.rules.size() && rng.Bernoulli(0.7)) {
      int keep = rng.Index(cur.rules.size());
      for (int r = 0; r < keep; ++r) next.rules[r] = cur.rules[r];
      if (!ValidateProgram(next).ok()) next = cur;
    }
    auto got = scorer.Evaluate(next);
    ASSERT_TRUE(got.ok()) << got.status();
    ASSERT_EQ(*got, *serial::Misclassified(next, d)) << PrintProgram(next);
    reused += scorer.reused_rules();
    if (rng.Bernoulli(0.5)) {
      scorer.Commit();
      cur = next;
    }
  }
  EXPECT_GT(reused, 0);
}

TEST(SearchTest, Examples) {
  Program dyck = Parse(kDyck), balanced = Parse(kBalanced);
  auto cd = Compile(dyck), cb = Compile(balanced);
  auto r = FindCounterexample(Property::kInclusion, cb, &cd, 8);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(**r, W("][", "[]"));
  EXPECT_FALSE(FindCounterexample(Property::kEquality, cd, &cd, 8)->has_value());
  EXPECT_FALSE(
      FindCounterexample(Property::kInclusion, cd, &cb, 12)->has_value());
  Program bottom = Parse("program f over {a, b}\nbool Out := false\n");
  auto u = FindCounterexample(Property::kUniversality, Compile(bottom),
                              nullptr, 3);
  EXPECT_EQ(**u, (Word{0}));
  EXPECT_FALSE(
      FindCounterexample(Property::kUniversality, cd, &cd, 3).ok());
}

TEST(SearchTest, MatchesSerialAndIsThreadIndependent) {
  Rng rng(23);
  const Property kinds[] = {Property::kInclusion, Property::kEquality,
                            Property::kUniversality, Property::kEmptiness};
  for (int i = 0; i < 60; ++i) {
    Program a = RandomProgram(rng), b = RandomProgram(rng);
    Property k = kinds[i % 4];
    bool binary = k == Property::kInclusion || k == Property::kEquality;
    auto want = serial::FindCounterexample(k, a, binary ? &b : nullptr, 7);
    ASSERT_TRUE(want.ok());
    CompiledProgram ca = Compile(a), cb = Compile(b);
    for (int threads : {1, 4}) {
      omp_set_num_threads(threads);
      auto got = FindCounterexample(k, ca, binary ? &cb : nullptr, 7);
      ASSERT_TRUE(got.ok());
      ASSERT_EQ(*got, *want) << PrintProgram(a) << PrintProgram(b);
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST(SearchTest, LustreMatchesCrasp) {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    Program a = RandomProgram(rng), b = RandomProgram(rng);
    c2l::CheckKind kind = static_cast<c2l::CheckKind>(i % 4);
    bool binary = c2l::IsBinary(kind);
    auto unit = c2l::BuildUnit(kind, a, binary ? &b : nullptr);
    ASSERT_TRUE(unit.ok());
    auto want = serial::FindCounterexample(static_cast<Property>(i % 4), a,
                                           binary ? &b : nullptr, 6);
    auto got = FindLustreCounterexample(unit->node, 2, unit->codec.eos(), 6);
    ASSERT_TRUE(got.ok()) << got.status();
    ASSERT_EQ(*got, *want);
    auto ref =
        serial::FindLustreCounterexample(unit->node, 2, unit->codec.eos(), 6);
    ASSERT_TRUE(ref.ok());
    ASSERT_EQ(*ref, *want);
  }
}

}  // namespace
}  // namespace crasp::kernels
