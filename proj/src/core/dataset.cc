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

#include "crasp/core/dataset.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace crasp {

int Dataset::positives() const {
  return static_cast<int>(
      std::count_if(examples.begin(), examples.end(),
                    [](const LabeledWord& e) { return e.positive; }));
}

absl::Status CheckDataset(const Dataset& d) {
  std::map<Word, bool> labels;
  for (size_t i = 0; i < d.examples.size(); ++i) {
    const LabeledWord& e = d.examples[i];
    if (e.word.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("example ", i + 1, " is the empty word"));
    }
    for (Symbol s : e.word) {
      if (s < 0 || s >= d.alphabet.size()) {
        return absl::InvalidArgumentError(
            absl::StrCat("example ", i + 1, " has symbol index ", s,
                         " outside the alphabet"));
      }
    }
    auto [it, inserted] = labels.emplace(e.word, e.positive);
    if (!inserted && it->second != e.positive) {
      return absl::InvalidArgumentError(absl::StrCat(
          "contradictory labels for word ",
          absl::StrJoin(e.word, ",", [&](std::string* out, Symbol s) {
            out->append(d.alphabet.name(s));
          })));
    }
  }
  return absl::OkStatus();
}

bool Contains(const Dataset& d, const Word& w) {
  return std::any_of(d.examples.begin(), d.examples.end(),
                     [&](const LabeledWord& e) { return e.word == w; });
}

}  // namespace crasp
