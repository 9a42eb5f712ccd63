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

#ifndef CRASP_BENCHLANG_SAMPLER_H_
#define CRASP_BENCHLANG_SAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/benchlang/languages.h"
#include "crasp/core/dataset.h"

namespace crasp::benchlang {

struct SamplerConfig {
  int count = 1000;
  int min_length = 0;  // 0: the language's min_length
  int max_length = 100;
  uint64_t seed = 1;
  // Sparse languages may not have count / 2 distinct members of either
  // label in range. With this set the sampler repeats words and reports a
  // warning; otherwise it fails.
  bool allow_duplicates = true;
};

struct SampleResult {
  Dataset dataset;
  std::vector<std::string> warnings;
};

// count / 2 positives and count / 2 negatives, labeled by the oracle.
absl::StatusOr<SampleResult> SampleDataset(const Language& lang,
                                           const SamplerConfig& config);

// Uniform word of exactly `length` accepted (or rejected) by the dfa;
// nullopt when there is none.
std::optional<Word> SampleFromDfa(const Dfa& dfa, int alphabet_size,
                                  int length, bool accepted, Rng& rng);

}  // namespace crasp::benchlang

#endif  // CRASP_BENCHLANG_SAMPLER_H_
