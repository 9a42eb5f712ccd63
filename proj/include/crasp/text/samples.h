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

#ifndef CRASP_TEXT_SAMPLES_H_
#define CRASP_TEXT_SAMPLES_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/core/dataset.h"

namespace crasp {

// Words are written as plain strings when every symbol is one character and
// as comma-separated symbol names otherwise.
absl::StatusOr<Word> ParseWord(const Alphabet& alphabet, std::string_view text);
std::string FormatWord(const Alphabet& alphabet, const Word& w);

// .samples files: one "+ word" or "- word" per line; blank lines and lines
// starting with '#' are skipped. Fails on unknown symbols, empty words and
// contradictory labels.
absl::StatusOr<Dataset> ParseDataset(const Alphabet& alphabet,
                                     std::string_view text);
std::string PrintDataset(const Dataset& d);

}  // namespace crasp

#endif  // CRASP_TEXT_SAMPLES_H_
