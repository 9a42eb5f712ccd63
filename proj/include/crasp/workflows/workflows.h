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

#ifndef CRASP_WORKFLOWS_WORKFLOWS_H_
#define CRASP_WORKFLOWS_WORKFLOWS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/benchlang/languages.h"
#include "crasp/core/ast.h"
#include "crasp/core/dataset.h"
#include "crasp/synth/anneal.h"
#include "crasp/synth/fragment.h"
#include "crasp/verifier/verifier.h"

namespace crasp::workflows {

enum class Termination {
  kVerified,  // the property was established (proved or bounded)
  kRoundLimit,
  kTimeout,
  kInexpressibleSuspected,  // synthesis kept failing to fit the data
};

std::string ToString(Termination t);

// How far the last accepted check got.
enum class Confidence {
  kNone,
  kTentative,  // no counterexample up to the bound
  kProved,     // external proof
};

std::string ToString(Confidence c);

struct Round {
  int index = 0;
  int dataset_size = 0;  // before this round's additions
  synth::Shape shape;
  uint64_t seed = 0;
  Program candidate;   // pruned synthesis answer
  synth::Score score;  // base weights
  std::string stop;    // annealing stop reason
  std::optional<verifier::Verdict> verdict;  // only when the candidate fit
  std::optional<LabeledWord> added;          // counterexample fed back
  double synth_s = 0;
  double verif_s = 0;
};

struct RefinementRun {
  std::vector<Round> rounds;
  Termination termination = Termination::kRoundLimit;
  Confidence confidence = Confidence::kNone;
  std::string note;

  double synth_s() const;
  double verif_s() const;
  std::vector<LabeledWord> added() const;
};

struct LoopOptions {
  // Annealing settings; shape is the starting shape for constraint
  // learning and ignored by minimization.
  synth::AnnealConfig anneal;
  // Kind2 when it resolves, otherwise bounded enumeration to `bound`.
  verifier::Options verify;
  int max_rounds = 30;
  double timeout_s = 300;
  uint64_t seed = 1;
  // Consecutive rounds with no zero-error candidate before giving up.
  int max_synth_failures = 3;
};

// Picks the verifier backend for a loop: kind2 if configured and found,
// else the internal enumerator.
verifier::Options ResolveVerifier(const verifier::Options& options);

// Runs the check, falling back to bounded enumeration when an external
// backend cannot decide.
absl::StatusOr<verifier::Verdict> CheckWithFallback(const verifier::Query& q);

struct MinimizeOptions : LoopOptions {
  int samples = 400;
  int max_length = 100;
  // Draw words with this language's sampler (labels still come from the
  // specification). Without it, words are drawn uniformly at random and
  // balanced by rejection.
  const benchlang::Language* language = nullptr;
};

struct MinimizeResult {
  // Never larger than the specification; the specification itself when
  // nothing smaller was found.
  Program program;
  bool improved = false;
  RefinementRun run;
};

// Searches for a smaller program with the same language.
absl::StatusOr<MinimizeResult> Minimize(const Program& spec,
                                        const MinimizeOptions& options);

// Words labeled by `spec`, about half of each label when attainable.
absl::StatusOr<Dataset> SampleForSpec(const Program& spec,
                                      const MinimizeOptions& options);

// Next shape to try after a verified answer of shape `s`, or nullopt when
// there is nothing smaller.
std::optional<synth::Shape> Shrink(const synth::Shape& s);
synth::Shape Grow(const synth::Shape& s, const synth::Shape& limit);

struct LearnResult {
  Program program;  // last candidate
  Dataset dataset;  // final dataset including added negatives
  RefinementRun run;
};

// Fits `d` subject to L(P) included in L(spec). Fails up front when a
// positive example is rejected by `spec`.
absl::StatusOr<LearnResult> LearnConstrained(const Dataset& d,
                                             const Program& spec,
                                             const LoopOptions& options);

// Default synthesis shape for a benchmark language.
synth::Shape DefaultShape(std::string_view language);

std::string RunJson(const RefinementRun& run);

// Benchmark suite report.
struct BenchOptions {
  std::vector<std::string> languages;  // empty: whole catalog
  int seeds = 5;
  int samples = 1000;
  int heldout = 1000;
  double timeout_s = 300;
  bool minimize = true;
  bool learn = true;
  synth::AnnealConfig anneal;  // shape replaced by DefaultShape
  verifier::Options verify;
  uint64_t seed = 1;
};

struct LoopSummary {
  bool ran = false;
  int rounds = 0;
  double synth_s = 0;
  double verif_s = 0;
  std::string status;  // termination, "infeasible", "no-reference", ...
  bool success = false;
};

struct BenchRow {
  std::string language;
  std::string title;
  synth::Shape shape;
  bool found = false;  // some seed reached zero training error
  double train_accuracy = 0;
  double heldout_accuracy = 0;
  double seconds = 0;
  int seed = 0;  // seed of the reported run
  std::string program;
  std::vector<std::string> warnings;
  LoopSummary minimize;
  LoopSummary learn;
};

absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchOptions& options);
std::string BenchJson(const std::vector<BenchRow>& rows);
// Fixed-width table; "-" where no zero-error program was found.
std::string BenchTable(const std::vector<BenchRow>& rows);

}  // namespace crasp::workflows

#endif  // CRASP_WORKFLOWS_WORKFLOWS_H_
