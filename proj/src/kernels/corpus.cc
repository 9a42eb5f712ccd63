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

#include "crasp/kernels/corpus.h"

#include <atomic>

#include "absl/status/status.h"
#include "crasp/core/semantics.h"

namespace crasp::kernels {

Corpus Corpus::FromWords(const std::vector<Word>& words) {
  Corpus c;
  for (const Word& w : words) {
    c.symbols.insert(c.symbols.end(), w.begin(), w.end());
    c.offsets.push_back(static_cast<int64_t>(c.symbols.size()));
  }
  return c;
}

Corpus Corpus::FromDataset(const Dataset& d) {
  Corpus c;
  for (const LabeledWord& e : d.examples) {
    c.symbols.insert(c.symbols.end(), e.word.begin(), e.word.end());
    c.offsets.push_back(static_cast<int64_t>(c.symbols.size()));
    c.labels.push_back(e.positive ? 1 : 0);
  }
  return c;
}

absl::StatusOr<std::vector<uint8_t>> AcceptAll(const CompiledProgram& p,
                                               const Corpus& c) {
  std::vector<uint8_t> out(c.size(), 0);
  std::atomic<bool> failed = false;
  const int n = c.size();
#pragma omp parallel
  {
    CompiledProgram::State s = p.Initial();
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
      std::span<const Symbol> w = c.word(i);
      if (w.empty()) {
        failed = true;
        continue;
      }
      s = p.Initial();
      bool acc = false;
      for (Symbol a : w) acc = p.Step(s, a);
      if (s.overflow) failed = true;
      out[i] = acc;
    }
  }
  if (failed) {
    return absl::InvalidArgumentError("empty word or integer overflow");
  }
  return out;
}

absl::StatusOr<int> Misclassified(const CompiledProgram& p, const Corpus& c) {
  absl::StatusOr<std::vector<uint8_t>> acc = AcceptAll(p, c);
  if (!acc.ok()) return acc.status();
  int mis = 0;
  for (int i = 0; i < c.size(); ++i) mis += (*acc)[i] != c.labels[i];
  return mis;
}

namespace serial {

absl::StatusOr<std::vector<uint8_t>> AcceptAll(const Program& p,
                                               const std::vector<Word>& words) {
  std::vector<uint8_t> out;
  for (const Word& w : words) {
    absl::StatusOr<bool> a = crasp::Accepts(p, w);
    if (!a.ok()) return a.status();
    out.push_back(*a);
  }
  return out;
}

absl::StatusOr<int> Misclassified(const Program& p, const Dataset& d) {
  int mis = 0;
  for (const LabeledWord& e : d.examples) {
    absl::StatusOr<bool> a = crasp::Accepts(p, e.word);
    if (!a.ok()) return a.status();
    mis += *a != e.positive;
  }
  return mis;
}

}  // namespace serial
}  // namespace crasp::kernels
