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

#ifndef CRASP_CORE_SEMANTICS_H_
#define CRASP_CORE_SEMANTICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crasp/core/ast.h"

namespace crasp {

struct Violation {
  std::string rule;  // empty for program-level violations
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Lists every broken structural invariant. An empty result means the program
// is well formed.
std::vector<Violation> CheckWellFormed(const Program& p);

// OK iff CheckWellFormed is empty; otherwise all violations joined.
absl::Status ValidateProgram(const Program& p);

using Value = std::variant<bool, int64_t>;

std::string FormatValue(const Value& v);

// Reference semantics: evaluates expressions pointwise at 1-based positions,
// memoizing rule values. Counting sums are computed literally from their
// definition, so this is deliberately slow and serves as the oracle for the
// faster kernels.
class Evaluator {
 public:
  // Fails if the program is not well formed or the word is empty or contains
  // symbols outside the alphabet.
  static absl::StatusOr<Evaluator> Create(const Program& program, Word word);

  int length() const { return static_cast<int>(word_.size()); }
  const Word& word() const { return word_; }

  absl::StatusOr<Value> EvalRule(std::string_view rule, int position);
  absl::StatusOr<Value> Eval(const Expr& e, int position);
  absl::StatusOr<bool> Accepts();

 private:
  Evaluator(Program program, Word word);

  bool B(const BExp& e, int j);
  int64_t C(const CExp& e, int j);
  const Value& RuleValue(int rule, int j);
  absl::Status CheckPosition(int position) const;

  Program program_;
  Word word_;
  std::unordered_map<std::string, int> index_;
  // memo_[rule][j - 1]
  std::vector<std::vector<std::optional<Value>>> memo_;
  std::string error_;
};

absl::StatusOr<Value> EvalRule(const Program& p, const Word& w,
                               std::string_view rule, int position);
absl::StatusOr<Value> EvalExpr(const Program& p, const Word& w, const Expr& e,
                               int position);

// cval of the last rule at the final position. Empty words are rejected.
absl::StatusOr<bool> Accepts(const Program& p, const Word& w);

// Values of every rule at every position: table[rule][j - 1].
absl::StatusOr<std::vector<std::vector<Value>>> RuleTable(const Program& p,
                                                          const Word& w);

}  // namespace crasp

#endif  // CRASP_CORE_SEMANTICS_H_
