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

#ifndef CRASP_SYNTH_FRAGMENT_H_
#define CRASP_SYNTH_FRAGMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/core/rng.h"

namespace crasp::synth {

// Number of Boolean rules, number of count rules, largest constant.
struct Shape {
  int num_bool = 1;
  int num_count = 0;
  int max_const = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
};

absl::Status CheckShape(const Shape& s);
std::string ToString(const Shape& s);          // "Nb,Nc,K"
absl::StatusOr<Shape> ParseShape(std::string_view text);

// Rule kinds by position: the N_b - 1 inner Boolean rules and the count rules
// alternate, Boolean first, and the acceptor Out closes the program.
std::vector<bool> Layout(const Shape& s);
std::vector<std::string> RuleNames(const Shape& s);

// Rule counts and largest constant of an arbitrary program.
Shape ShapeOf(const Program& p);

// Exactly N_b Boolean and N_c count rules, constants within 0..K, Boolean
// acceptor, well formed.
bool ConformsToShape(const Program& p, const Shape& s);

// Conformance plus the search fragment: the layout and names above, and each
// body drawn from the resampling grammar with the atom pools below.
absl::Status CheckFragment(const Program& p, const Shape& s);
absl::Status CheckRuleBody(const Program& p, int rule, const Shape& s);

inline constexpr int kMinModulus = 2;
inline constexpr int kMaxModulus = 5;
inline constexpr int kMaxWindow = 3;

Program SampleInitial(const Shape& s, const Alphabet& alphabet, Rng& rng,
                      std::string name = "synth");

// A fresh body for rule `rule` of `p` from the resampling grammar.
Expr ResampleBody(const Program& p, int rule, const Shape& s, Rng& rng);

struct MutationInfo {
  int rule = -1;
  std::string move;  // "resample" or the micro-mutation name
};

// One rule chosen uniformly; its body is resampled with probability 1/2,
// otherwise one applicable micro-mutation is applied. The result differs
// from `p` in exactly that rule's body.
Program Mutate(const Program& p, const Shape& s, Rng& rng,
               MutationInfo* info = nullptr);

}  // namespace crasp::synth

#endif  // CRASP_SYNTH_FRAGMENT_H_
