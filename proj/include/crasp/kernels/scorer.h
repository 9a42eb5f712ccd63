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

#ifndef CRASP_KERNELS_SCORER_H_
#define CRASP_KERNELS_SCORER_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/kernels/corpus.h"

namespace crasp::kernels {

// Misclassification counts for a sequence of closely related programs.
// Every rule's values over the whole corpus are kept as a column; a program
// that shares its first k rules with the committed one only recomputes
// rules k.. . Columns are filled in parallel over words.
class ColumnScorer {
 public:
  explicit ColumnScorer(Corpus corpus);

  // Misclassified words of `p`. The result becomes the pending state that
  // Commit() adopts.
  absl::StatusOr<int> Evaluate(const Program& p);
  void Commit();

  // Rules reused from the committed columns in the last Evaluate.
  int reused_rules() const { return reused_; }
  const Corpus& corpus() const { return corpus_; }

 private:
  Corpus corpus_;
  std::vector<Rule> committed_rules_;
  std::vector<std::vector<int64_t>> committed_;
  std::vector<Rule> pending_rules_;
  std::vector<std::vector<int64_t>> pending_;
  int reused_ = 0;
  bool pending_ok_ = false;
};

}  // namespace crasp::kernels

#endif  // CRASP_KERNELS_SCORER_H_
