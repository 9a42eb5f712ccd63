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

#ifndef CRASP_KERNELS_CORPUS_H_
#define CRASP_KERNELS_CORPUS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/dataset.h"
#include "crasp/kernels/compiled_program.h"

namespace crasp::kernels {

// Words stored back to back: word i is symbols[offsets[i], offsets[i+1]).
struct Corpus {
  std::vector<Symbol> symbols;
  std::vector<int64_t> offsets = {0};
  std::vector<uint8_t> labels;  // 1 = positive; empty for unlabeled corpora

  static Corpus FromWords(const std::vector<Word>& words);
  static Corpus FromDataset(const Dataset& d);

  int size() const { return static_cast<int>(offsets.size()) - 1; }
  int64_t total_length() const { return offsets.back(); }
  std::span<const Symbol> word(int i) const {
    return {symbols.data() + offsets[i],
            static_cast<size_t>(offsets[i + 1] - offsets[i])};
  }
};

// Acceptance of every word, OpenMP-parallel over words.
absl::StatusOr<std::vector<uint8_t>> AcceptAll(const CompiledProgram& p,
                                               const Corpus& c);

// Number of words whose acceptance differs from their label.
absl::StatusOr<int> Misclassified(const CompiledProgram& p, const Corpus& c);

namespace serial {

// Reference versions running the interpreter word by word.
absl::StatusOr<std::vector<uint8_t>> AcceptAll(const Program& p,
                                               const std::vector<Word>& words);
absl::StatusOr<int> Misclassified(const Program& p, const Dataset& d);

}  // namespace serial
}  // namespace crasp::kernels

#endif  // CRASP_KERNELS_CORPUS_H_
