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

#include "crasp/kernels/scorer.h"

#include <atomic>
#include <span>

#include "absl/status/status.h"
#include "crasp/kernels/compiled_program.h"

namespace crasp::kernels {

ColumnScorer::ColumnScorer(Corpus corpus) : corpus_(std::move(corpus)) {}

absl::StatusOr<int> ColumnScorer::Evaluate(const Program& p) {
  pending_ok_ = false;
  if (static_cast<int>(corpus_.labels.size()) != corpus_.size()) {
    return absl::InvalidArgumentError("corpus is not labeled");
  }
  absl::StatusOr<CompiledProgram> c = CompiledProgram::Compile(p);
  if (!c.ok()) return c.status();
  const int n = c->num_rules();
  int k = 0;
  while (k < n && k < static_cast<int>(committed_rules_.size()) &&
         p.rules[k] == committed_rules_[k]) {
    ++k;
  }
  reused_ = k;
  const int64_t total = corpus_.total_length();
  pending_.resize(n);
  for (int r = k; r < n; ++r) pending_[r].resize(total);

  std::atomic<bool> overflow = false;
  const int words = corpus_.size();
#pragma omp parallel
  {
    std::vector<std::span<int64_t>> cols(n);
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < words; ++i) {
      int64_t off = corpus_.offsets[i];
      size_t len = corpus_.offsets[i + 1] - off;
      for (int r = 0; r < n; ++r) {
        std::vector<int64_t>& src = r < k ? committed_[r] : pending_[r];
        cols[r] = std::span<int64_t>(src.data() + off, len);
      }
      for (int r = k; r < n; ++r) {
        if (!c->EvalRuleColumn(r, corpus_.word(i), cols)) overflow = true;
      }
    }
  }
  if (overflow) return absl::OutOfRangeError("integer overflow");

  const std::vector<int64_t>& acceptor =
      n - 1 < k ? committed_[n - 1] : pending_[n - 1];
  int mis = 0;
  for (int i = 0; i < words; ++i) {
    if (corpus_.offsets[i + 1] == corpus_.offsets[i]) {
      return absl::InvalidArgumentError("empty word in corpus");
    }
    bool acc = acceptor[corpus_.offsets[i + 1] - 1] != 0;
    mis += acc != (corpus_.labels[i] != 0);
  }
  pending_rules_ = p.rules;
  pending_ok_ = true;
  return mis;
}

void ColumnScorer::Commit() {
  if (!pending_ok_) return;
  const int n = static_cast<int>(pending_rules_.size());
  committed_.resize(std::max<size_t>(committed_.size(), n));
  for (int r = reused_; r < n; ++r) std::swap(committed_[r], pending_[r]);
  committed_.resize(n);
  committed_rules_ = pending_rules_;
  pending_ok_ = false;
}

}  // namespace crasp::kernels
