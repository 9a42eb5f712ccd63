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

#ifndef CRASP_CORE_DATASET_H_
#define CRASP_CORE_DATASET_H_

#include <vector>

#include "absl/status/status.h"
#include "crasp/core/ast.h"

namespace crasp {

struct LabeledWord {
  Word word;
  bool positive = false;
  friend bool operator==(const LabeledWord&, const LabeledWord&) = default;
};

// Labeled words over one alphabet. Duplicates are allowed (the sampler may
// repeat members of sparse languages); contradictory labels are not.
struct Dataset {
  Alphabet alphabet;
  std::vector<LabeledWord> examples;

  int size() const { return static_cast<int>(examples.size()); }
  int positives() const;
  int negatives() const { return size() - positives(); }
  void Add(Word w, bool positive) {
    examples.push_back({std::move(w), positive});
  }
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Rejects empty words, out-of-range symbols and words carrying both labels.
absl::Status CheckDataset(const Dataset& d);

// True iff some example has exactly this word.
bool Contains(const Dataset& d, const Word& w);

}  // namespace crasp

#endif  // CRASP_CORE_DATASET_H_
