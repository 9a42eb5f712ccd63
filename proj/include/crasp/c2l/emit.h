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

#ifndef CRASP_C2L_EMIT_H_
#define CRASP_C2L_EMIT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/c2l/translate.h"

namespace crasp::c2l {

// The .lus text for a unit: a short comment header and one node.
std::string EmitLustre(const TranslationUnit& unit);

// JSON sidecar: codec table and rule-to-variable maps, enough to decode a
// counterexample stream without the unit in memory.
std::string EmitSidecar(const TranslationUnit& unit);

struct Sidecar {
  std::string kind;
  std::string node;
  std::string input;
  std::string property;
  SymbolCodec codec;
  std::vector<ProgramInfo> programs;
};

absl::StatusOr<Sidecar> ParseSidecar(std::string_view json);

}  // namespace crasp::c2l

#endif  // CRASP_C2L_EMIT_H_
