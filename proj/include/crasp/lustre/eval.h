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

#ifndef CRASP_LUSTRE_EVAL_H_
#define CRASP_LUSTRE_EVAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crasp/lustre/ast.h"

namespace crasp::lustre {

// Structural checks: declared names are unique and distinct from the input,
// each local has exactly one equation, every variable is declared, operands
// have the right sorts, mod divisors are nonzero constants, every pre is
// guarded by the right arm of an arrow, and instantaneous dependencies are
// acyclic.
absl::Status CheckNode(const Node& node);

// Finite prefix of every stream of a run. Booleans are stored as 0/1.
struct Trace {
  std::vector<int64_t> input;
  std::vector<std::string> names;  // locals in declaration order
  std::vector<Sort> sorts;
  std::vector<std::vector<int64_t>> values;  // values[local][position]
  std::vector<bool> check;                   // empty when there is no check

  const std::vector<int64_t>* Find(const std::string& name) const;
};

// A node lowered to a flat expression pool. Each pre gets a state slot that
// holds its operand's value from the previous position.
class CompiledNode {
 public:
  static absl::StatusOr<CompiledNode> Compile(const Node& node);

  struct State {
    std::vector<int64_t> slots;
    int64_t position = 0;
  };

  State Initial() const;
  int num_locals() const { return static_cast<int>(local_names_.size()); }
  const std::vector<std::string>& local_names() const { return local_names_; }
  std::optional<int> LocalIndex(const std::string& name) const;
  bool has_check() const { return check_root_ >= 0; }

  // Consumes one input value. `locals` receives the value of every local at
  // this position (size num_locals()); the return value is the check
  // expression there (true when there is none).
  absl::StatusOr<bool> Step(State& state, int64_t input,
                            std::span<int64_t> locals) const;

 private:
  struct Cell {
    Op op;
    int64_t value = 0;  // constant, variable index or pre slot
    int a = -1, b = -1, c = -1;
  };

  int Lower(const Expr& e, const std::vector<std::string>& vars);
  int64_t Eval(int cell, std::span<const int64_t> env,
               const std::vector<int64_t>& slots, bool first,
               bool& overflow) const;

  std::vector<Cell> cells_;
  std::vector<std::string> local_names_;
  std::vector<int> roots_;  // by local index
  std::vector<int> order_;  // evaluation order of locals
  std::vector<int> pre_operands_;  // by slot
  int check_root_ = -1;
};

// Runs the node on a finite input prefix.
absl::StatusOr<Trace> RunNode(const Node& node, std::span<const int64_t> input);

struct CheckViolation {
  int input_index;
  int position;  // 0-based
  friend bool operator==(const CheckViolation&, const CheckViolation&) =
      default;
};

// First (input, position) at which the check expression is false, scanning
// inputs in order. Finding none says nothing about longer inputs.
absl::StatusOr<std::optional<CheckViolation>> BoundedCheck(
    const Node& node, const std::vector<std::vector<int64_t>>& inputs);

}  // namespace crasp::lustre

#endif  // CRASP_LUSTRE_EVAL_H_
