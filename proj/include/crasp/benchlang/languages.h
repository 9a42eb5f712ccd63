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

#ifndef CRASP_BENCHLANG_LANGUAGES_H_
#define CRASP_BENCHLANG_LANGUAGES_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/core/rng.h"

namespace crasp::benchlang {

using Oracle = std::function<bool(const Word&)>;

enum class Expressibility { kExpressible, kNotExpressible, kUnknown };

std::string ToString(Expressibility e);

// Deterministic automaton over symbol indices. Only used to draw words
// uniformly from a regular language; labels always come from the oracle.
struct Dfa {
  int start = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<int>> delta;  // delta[state][symbol]

  int states() const { return static_cast<int>(accepting.size()); }
  bool Accepts(const Word& w) const;
};

// Draws a member of the language of the given length, or nullopt if the
// generator cannot produce one of that length.
using Generator = std::function<std::optional<Word>(Rng&, int length)>;

struct Language {
  std::string name;     // catalog key, e.g. "tomita4"
  std::string title;    // e.g. "Tomita 4"
  std::vector<std::string> symbols;
  int min_length = 1;
  Expressibility expressible = Expressibility::kUnknown;
  // Membership per the language definition.
  Oracle oracle;
  // Reference program text, if there is one.
  std::optional<std::string> fixture;
  // What the reference program actually computes, when it differs from
  // `oracle`. Empty means the fixture follows `oracle`.
  Oracle fixture_oracle;
  // Sampling helpers. A language has either a dfa or a generator for
  // positives; negatives fall back to rejection sampling without a dfa.
  std::optional<Dfa> dfa;
  Generator positive;
  std::string note;

  Alphabet alphabet() const;
  const Oracle& FixtureOracle() const {
    return fixture_oracle ? fixture_oracle : oracle;
  }
};

// Every benchmark language, in report order.
const std::vector<Language>& Catalog();

absl::StatusOr<const Language*> FindLanguage(std::string_view name);

// Parsed reference program; NotFound for oracle-only languages.
absl::StatusOr<Program> ReferenceProgram(const Language& lang);

// Catalog entries as JSON (name, title, alphabet, min_length, expressible,
// has_fixture).
std::string CatalogJson();

}  // namespace crasp::benchlang

#endif  // CRASP_BENCHLANG_LANGUAGES_H_
