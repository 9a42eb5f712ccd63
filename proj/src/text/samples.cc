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

#include "crasp/text/samples.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace crasp {

absl::StatusOr<Word> ParseWord(const Alphabet& alphabet,
                               std::string_view text) {
  std::string trimmed(absl::StripAsciiWhitespace(std::string(text)));
  if (trimmed.empty()) return absl::InvalidArgumentError("empty word");
  Word w;
  if (alphabet.single_char()) {
    for (char c : trimmed) {
      std::optional<Symbol> s = alphabet.Find(std::string(1, c));
      if (!s) {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown symbol '", std::string(1, c), "'"));
      }
      w.push_back(*s);
    }
    return w;
  }
  for (absl::string_view piece : absl::StrSplit(trimmed, ',')) {
    std::string name(absl::StripAsciiWhitespace(piece));
    std::optional<Symbol> s = alphabet.Find(name);
    if (!s) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown symbol '", name, "'"));
    }
    w.push_back(*s);
  }
  return w;
}

std::string FormatWord(const Alphabet& alphabet, const Word& w) {
  return absl::StrJoin(w, alphabet.single_char() ? "" : ",",
                       [&](std::string* out, Symbol s) {
                         out->append(alphabet.name(s));
                       });
}

absl::StatusOr<Dataset> ParseDataset(const Alphabet& alphabet,
                                     std::string_view text) {
  Dataset d;
  d.alphabet = alphabet;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(std::string(text), '\n')) {
    ++line_no;
    std::string line(absl::StripAsciiWhitespace(raw));
    if (line.empty() || line[0] == '#') continue;
    if (line[0] != '+' && line[0] != '-') {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected '+' or '-'"));
    }
    absl::StatusOr<Word> w = ParseWord(alphabet, line.substr(1));
    if (!w.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", w.status().message()));
    }
    d.Add(*std::move(w), line[0] == '+');
  }
  if (absl::Status s = CheckDataset(d); !s.ok()) return s;
  return d;
}

std::string PrintDataset(const Dataset& d) {
  std::string out;
  for (const LabeledWord& e : d.examples) {
    absl::StrAppend(&out, e.positive ? "+ " : "- ",
                    FormatWord(d.alphabet, e.word), "\n");
  }
  return out;
}

}  // namespace crasp
