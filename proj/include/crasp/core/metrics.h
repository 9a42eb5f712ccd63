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

#ifndef CRASP_CORE_METRICS_H_
#define CRASP_CORE_METRICS_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"

namespace crasp {

// Rule names referenced anywhere inside an expression, in first-occurrence
// order without duplicates.
std::vector<std::string> ReferencedRules(const Expr& e);

// mask[i] is true iff rule i is in the dependency closure of the acceptor.
std::vector<bool> ReachableRuleMask(const Program& p);
std::set<std::string> ReachableRules(const Program& p);
int UnreachableRuleCount(const Program& p);

// Every AST constructor counts as one node, leaves included.
int AstSize(const BExp& e);
int AstSize(const CExp& e);
int AstSize(const Expr& e);
int AstSize(const Program& p);

// Largest constant in any count expression; 0 if there are none.
int64_t MaxConstant(const Program& p);
// Largest window end offset; -1 if the program has no windows.
int MaxWindowEnd(const Program& p);

// Drops rules outside ReachableRules, keeping order.
Program PruneUnreachable(const Program& p);

// Re-expresses `p` over `target`, which must hold the same symbols possibly
// in another order.
absl::StatusOr<Program> Relabel(const Program& p, const Alphabet& target);

}  // namespace crasp

#endif  // CRASP_CORE_METRICS_H_
