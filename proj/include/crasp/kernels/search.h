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

#ifndef CRASP_KERNELS_SEARCH_H_
#define CRASP_KERNELS_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/kernels/compiled_program.h"
#include "crasp/lustre/ast.h"

namespace crasp::kernels {

enum class Property { kInclusion, kEquality, kUniversality, kEmptiness };

// True when acceptance (a1, a2) refutes the property on that word.
inline bool Refutes(Property p, bool a1, bool a2) {
  switch (p) {
    case Property::kInclusion: return a1 && !a2;
    case Property::kEquality: return a1 != a2;
    case Property::kUniversality: return !a1;
    case Property::kEmptiness: return a1;
  }
  return false;
}

struct SearchStats {
  int64_t words = 0;  // trie nodes visited
};

// Shortest, then lexicographically least, word of length 1..max_len that
// refutes the property; nullopt if there is none. Parallel over subtrees
// of the word trie; the answer does not depend on the thread count.
// `second` is needed for inclusion and equality.
absl::StatusOr<std::optional<Word>> FindCounterexample(
    Property property, const CompiledProgram& first,
    const CompiledProgram* second, int max_len, SearchStats* stats = nullptr);

// Same search on a translated node: each word is fed as its letter codes
// 0..k-1 followed by `eos`, and a word is a counterexample when the check
// fails at any of those positions.
absl::StatusOr<std::optional<Word>> FindLustreCounterexample(
    const lustre::Node& node, int alphabet_size, int64_t eos, int max_len,
    SearchStats* stats = nullptr);

namespace serial {

// Reference: every word in length-lexicographic order through the
// interpreter.
absl::StatusOr<std::optional<Word>> FindCounterexample(Property property,
                                                       const Program& first,
                                                       const Program* second,
                                                       int max_len);

// Reference: every encoded word through lustre::BoundedCheck.
absl::StatusOr<std::optional<Word>> FindLustreCounterexample(
    const lustre::Node& node, int alphabet_size, int64_t eos, int max_len);

}  // namespace serial
}  // namespace crasp::kernels

#endif  // CRASP_KERNELS_SEARCH_H_
