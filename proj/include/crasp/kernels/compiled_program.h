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

#ifndef CRASP_KERNELS_COMPILED_PROGRAM_H_
#define CRASP_KERNELS_COMPILED_PROGRAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"

namespace crasp::kernels {

// A program flattened into one node array, rule bodies in rule order and
// children before parents. Rule references are nodes of their own that read
// either the referenced rule's root (Step) or a precomputed column
// (EvalRuleColumn). Counting nodes carry running state, so a word is
// processed left to right in O(|w| * |p|).
class CompiledProgram {
 public:
  static absl::StatusOr<CompiledProgram> Compile(const Program& p);

  struct State {
    std::vector<int64_t> value;   // per node, at the current position
    std::vector<int64_t> acc;     // running sums of CountAll nodes
    std::vector<int64_t> ring;    // indicator history of window nodes
    int64_t position = 0;         // 1-based position of the last symbol
    bool overflow = false;
  };

  State Initial() const;

  // Reads one more symbol and returns the acceptor at the new position.
  // Only rules reachable from the acceptor are evaluated.
  bool Step(State& s, Symbol a) const;

  // Acceptance of a whole word; OutOfRange on integer overflow.
  absl::StatusOr<bool> Accepts(std::span<const Symbol> w) const;

  int num_rules() const { return static_cast<int>(segments_.size()); }
  int alphabet_size() const { return alphabet_size_; }

  // Column mode. columns[r] holds rule r's value at every position of the
  // word (0/1 for Boolean rules); rules referenced by `rule` must already be
  // filled. Returns false on overflow.
  bool EvalRuleColumn(int rule, std::span<const Symbol> w,
                      std::vector<std::span<int64_t>>& columns) const;

 private:
  enum class Op : uint8_t {
    kTrue, kFalse, kLetter, kRef, kNot, kAnd, kOr, kEq, kLe, kLt, kPeriodic,
    kConst, kCountAll, kWindow, kAdd, kSub, kMin, kMax, kIte,
  };
  struct Node {
    Op op;
    int a = -1, b = -1, c = -1;  // children, or rule index for kRef
    int64_t k = 0;               // constant, letter, modulus
    int64_t k2 = 0;              // periodic offset
    int slot = -1;               // acc index, or ring offset for windows
    int rs = 0, re = 0;
  };
  struct Segment {
    int begin, end;  // nodes [begin, end); root is end - 1
  };

  int Emit(Node n);
  int LowerBool(const BExp& e, const Program& p);
  int LowerCount(const CExp& e, const Program& p);

  // Evaluates nodes [begin, end) at the current position. `ref` gives the
  // value of a referenced rule.
  template <typename RefFn>
  void EvalNodes(int begin, int end, State& s, Symbol a, RefFn ref) const;

  std::vector<Node> nodes_;
  std::vector<Segment> segments_;
  std::vector<int> live_;  // rules reachable from the acceptor, in order
  int num_acc_ = 0;
  int ring_size_ = 0;
  int alphabet_size_ = 0;
};

}  // namespace crasp::kernels

#endif  // CRASP_KERNELS_COMPILED_PROGRAM_H_
