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

#ifndef CRASP_TEXT_SYNTAX_H_
#define CRASP_TEXT_SYNTAX_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"

namespace crasp {

// Concrete syntax of .crasp files:
//
//   # comment
//   program dyck over {'[', ']'}
//   count C_lb := #('[')
//   count C_rb := #(']')
//   bool V := C_lb < C_rb
//   bool D := #(V) = 0 and C_lb = C_rb
//
// Letters are always quoted. Boolean operators bind not > and > or;
// comparisons are = <= <; count expressions use + - min(,) max(,)
// #(b) #[rs,re](b) and if b then c else c. m%o is the periodic predicate.
// The last rule is the acceptor.
//
// Errors carry "line:col:" prefixes. The result is checked with
// ValidateProgram, so well-formedness violations are reported by rule name.
absl::StatusOr<Program> ParseProgram(std::string_view text);

// Canonical text: one rule per line, minimal parentheses. Requires a
// well-formed program; ParseProgram(PrintProgram(p)) == p.
std::string PrintProgram(const Program& p);

std::string PrintBExp(const BExp& e, const Alphabet& alphabet);
std::string PrintCExp(const CExp& e, const Alphabet& alphabet);

// Symbol spelling for headers: bare when it is a non-keyword identifier,
// quoted otherwise.
std::string SymbolToken(const std::string& symbol);

}  // namespace crasp

#endif  // CRASP_TEXT_SYNTAX_H_
