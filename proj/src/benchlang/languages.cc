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

#include "crasp/benchlang/languages.h"

#include <algorithm>
#include <array>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "crasp/text/syntax.h"
#include "nlohmann/json.hpp"

namespace crasp::benchlang {
namespace {

#include "fixtures.inc"

// Symbol indices used by the oracles below.
constexpr Symbol kA = 0, kB = 1, kC = 2;

int Count(const Word& w, Symbol s) {
  return static_cast<int>(std::count(w.begin(), w.end(), s));
}

// Maximal runs as (symbol, length).
std::vector<std::pair<Symbol, int>> Runs(const Word& w) {
  std::vector<std::pair<Symbol, int>> runs;
  for (Symbol s : w) {
    if (!runs.empty() && runs.back().first == s) {
      ++runs.back().second;
    } else {
      runs.push_back({s, 1});
    }
  }
  return runs;
}

// Dyck with k bracket pairs; symbol 2i opens and 2i + 1 closes pair i.
bool IsDyck(const Word& w) {
  std::vector<Symbol> stack;
  for (Symbol s : w) {
    if (s % 2 == 0) {
      stack.push_back(s);
    } else {
      if (stack.empty() || stack.back() != s - 1) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

bool HasSubsequence(const Word& w, const Word& pattern) {
  size_t k = 0;
  for (Symbol s : w) {
    if (k < pattern.size() && s == pattern[k]) ++k;
  }
  return k == pattern.size();
}

bool HasFactor(const Word& w, const Word& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

bool IsAStarBStar(const Word& w) {
  return std::is_sorted(w.begin(), w.end());
}

bool IsAnBnCn(const Word& w) {
  size_t n = w.size() / 3;
  if (n == 0 || w.size() != 3 * n) return false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != static_cast<Symbol>(i / n)) return false;
  }
  return true;
}

// No maximal odd a-run directly followed by a maximal odd b-run.
bool IsTomita3(const Word& w) {
  auto runs = Runs(w);
  for (size_t i = 0; i + 1 < runs.size(); ++i) {
    if (runs[i].first == kA && runs[i].second % 2 == 1 &&
        runs[i + 1].second % 2 == 1) {
      return false;
    }
  }
  return true;
}

// No factor a b^(2n+1) a^(2m+1) b.
bool IsTomita4(const Word& w) {
  auto runs = Runs(w);
  for (size_t i = 1; i + 2 < runs.size(); ++i) {
    if (runs[i].first == kB && runs[i].second % 2 == 1 &&
        runs[i + 1].second % 2 == 1) {
      return false;
    }
  }
  return true;
}

// Position i > 0 is fine when w[i] has a maximal transition count from
// w[i-1] among transitions completed strictly before i.
bool IsNextArgmax(const Word& w, int k) {
  std::vector<std::vector<int>> seen(k, std::vector<int>(k, 0));
  for (size_t i = 1; i < w.size(); ++i) {
    const std::vector<int>& row = seen[w[i - 1]];
    if (row[w[i]] < *std::max_element(row.begin(), row.end())) return false;
    ++seen[w[i - 1]][w[i]];
  }
  return true;
}

// What the Next(Argmax) reference listing accepts: some position holding a
// at which, counting transitions out of a up to and including that
// position, a->a is at least a->b and a->c, and there was at least one.
bool NextArgmaxListing(const Word& w) {
  int aa = 0, ab = 0, ac = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    if (j > 0 && w[j - 1] == kA) {
      if (w[j] == kA) ++aa;
      if (w[j] == kB) ++ab;
      if (w[j] == kC) ++ac;
    }
    if (w[j] == kA && aa + ab + ac >= 1 && ab <= aa && ac <= aa) return true;
  }
  return false;
}

Dfa MakeDfa(std::vector<std::vector<int>> delta, std::vector<bool> accepting) {
  Dfa d;
  d.delta = std::move(delta);
  d.accepting = std::move(accepting);
  return d;
}

// Accepts words with `pattern` as a subsequence.
Dfa SubsequenceDfa(const Word& pattern, int k) {
  int n = static_cast<int>(pattern.size());
  std::vector<std::vector<int>> delta(n + 1, std::vector<int>(k));
  std::vector<bool> acc(n + 1, false);
  acc[n] = true;
  for (int q = 0; q <= n; ++q) {
    for (int s = 0; s < k; ++s) {
      delta[q][s] = (q < n && pattern[q] == s) ? q + 1 : q;
    }
  }
  return MakeDfa(delta, acc);
}

// Random balanced insertion of bracket pairs.
std::optional<Word> DyckWord(Rng& rng, int length, int pairs) {
  if (length % 2 != 0) return std::nullopt;
  Word w;
  for (int i = 0; i < length / 2; ++i) {
    Symbol open = 2 * rng.Index(pairs);
    size_t at = rng.Index(w.size() + 1);
    w.insert(w.begin() + at, {open, open + 1});
  }
  return w;
}

Language Make(std::string name, std::string title,
              std::vector<std::string> symbols, int min_length,
              Expressibility e, Oracle oracle) {
  Language l;
  l.name = std::move(name);
  l.title = std::move(title);
  l.symbols = std::move(symbols);
  l.min_length = min_length;
  l.expressible = e;
  l.oracle = std::move(oracle);
  return l;
}

std::vector<Language> BuildCatalog() {
  using E = Expressibility;
  const std::vector<std::string> ab = {"a", "b"};
  const std::vector<std::string> abc = {"a", "b", "c"};
  std::vector<Language> out;

  {
    Language l = Make("dyck1", "Dyck-1", {"l", "r"}, 2, E::kExpressible,
                      IsDyck);
    l.fixture = kDyck1;
    l.positive = [](Rng& r, int n) { return DyckWord(r, n, 1); };
    out.push_back(l);
  }
  {
    Language l = Make("astarbstar", "a*b*", ab, 1, E::kExpressible,
                      IsAStarBStar);
    l.fixture = kAStarBStar;
    l.dfa = MakeDfa({{0, 1}, {2, 1}, {2, 2}}, {true, true, false});
    out.push_back(l);
  }
  {
    Language l = Make("anbncn", "a^n b^n c^n", abc, 3, E::kExpressible,
                      IsAnBnCn);
    l.fixture = kAnBnCn;
    l.positive = [](Rng&, int n) -> std::optional<Word> {
      if (n % 3 != 0) return std::nullopt;
      Word w;
      for (Symbol s = 0; s < 3; ++s) w.insert(w.end(), n / 3, s);
      return w;
    };
    out.push_back(l);
  }
  {
    Language l = Make("aastar", "(aa)*", {"a"}, 2, E::kExpressible,
                      [](const Word& w) { return w.size() % 2 == 0; });
    l.fixture = kAAStar;
    l.dfa = MakeDfa({{1}, {0}}, {true, false});
    out.push_back(l);
  }
  {
    Language l = Make("containsab", "Sigma* ab Sigma*", ab, 2,
                      E::kExpressible,
                      [](const Word& w) { return HasFactor(w, {kA, kB}); });
    l.fixture = kContainsAB;
    l.dfa = MakeDfa({{1, 0}, {1, 2}, {2, 2}}, {false, false, true});
    out.push_back(l);
  }
  {
    Language l = Make("majority", "Majority", ab, 1, E::kExpressible,
                      [](const Word& w) { return Count(w, kA) >= Count(w, kB); });
    l.fixture = kMajority;
    l.fixture_oracle = [](const Word& w) {
      return Count(w, kA) <= Count(w, kB);
    };
    l.positive = [](Rng& r, int n) -> std::optional<Word> {
      int a = static_cast<int>(r.Uniform((n + 1) / 2, n));
      Word w(n, kB);
      std::fill(w.begin(), w.begin() + a, kA);
      for (int i = n - 1; i > 0; --i) std::swap(w[i], w[r.Index(i + 1)]);
      return w;
    };
    l.note = "reference program computes #a <= #b";
    out.push_back(l);
  }
  {
    Language l = Make("existential", "Existential", ab, 1, E::kExpressible,
                      [](const Word& w) { return Count(w, kA) > 0; });
    l.fixture = kExistential;
    l.fixture_oracle = [](const Word& w) { return Count(w, kB) > 0; };
    l.dfa = MakeDfa({{1, 0}, {1, 1}}, {false, true});
    l.note = "reference program tests for b";
    out.push_back(l);
  }
  {
    Language l = Make("parity", "Parity", ab, 1, E::kNotExpressible,
                      [](const Word& w) { return Count(w, kA) % 2 == 0; });
    l.dfa = MakeDfa({{1, 0}, {0, 1}}, {true, false});
    out.push_back(l);
  }
  {
    Language l = Make("pt2", "PT-2", ab, 2, E::kExpressible, [](const Word& w) {
      return HasSubsequence(w, {0, 1});
    });
    l.fixture = kPt2;
    l.dfa = SubsequenceDfa({0, 1}, 2);
    out.push_back(l);
  }
  {
    Language l = Make("pt3", "PT-3", abc, 3, E::kExpressible,
                      [](const Word& w) {
                        return HasSubsequence(w, {0, 1, 2});
                      });
    l.fixture = kPt3;
    l.dfa = SubsequenceDfa({0, 1, 2}, 3);
    out.push_back(l);
  }
  {
    Language l = Make("pt5", "PT-5", {"a", "b", "c", "d", "e"}, 5,
                      E::kExpressible, [](const Word& w) {
                        return HasSubsequence(w, {0, 1, 2, 3, 4});
                      });
    l.fixture = kPt5;
    l.dfa = SubsequenceDfa({0, 1, 2, 3, 4}, 5);
    out.push_back(l);
  }
  const std::array<std::string, 8> brackets = {"(", ")", "[", "]",
                                               "{", "}", "<", ">"};
  for (int k = 2; k <= 4; ++k) {
    Language l = Make(absl::StrCat("d", k), absl::StrCat("D_", k),
                      std::vector<std::string>(brackets.begin(),
                                               brackets.begin() + 2 * k),
                      2, E::kUnknown, IsDyck);
    l.positive = [k](Rng& r, int n) { return DyckWord(r, n, k); };
    l.note = "Dyck language with k bracket pairs";
    out.push_back(l);
  }
  {
    Language l = Make("tomita1", "Tomita 1", ab, 1, E::kExpressible,
                      [](const Word& w) { return Count(w, kB) == 0; });
    l.fixture = kTomita1;
    l.dfa = MakeDfa({{0, 1}, {1, 1}}, {true, false});
    out.push_back(l);
  }
  {
    Language l = Make("tomita2", "Tomita 2", ab, 2, E::kExpressible,
                      [](const Word& w) {
                        if (w.size() % 2 != 0) return false;
                        for (size_t i = 0; i < w.size(); ++i) {
                          if (w[i] != static_cast<Symbol>(i % 2)) return false;
                        }
                        return true;
                      });
    l.fixture = kTomita2;
    l.dfa = MakeDfa({{1, 2}, {2, 0}, {2, 2}}, {true, false, false});
    out.push_back(l);
  }
  {
    Language l = Make("tomita3", "Tomita 3", ab, 1, E::kNotExpressible,
                      IsTomita3);
    l.dfa = MakeDfa(
        {{1, 5}, {2, 3}, {1, 5}, {6, 4}, {1, 3}, {1, 5}, {6, 6}},
        {true, true, true, false, true, true, false});
    l.note = "no odd a-run directly followed by an odd b-run";
    out.push_back(l);
  }
  {
    Language l = Make("tomita4", "Tomita 4", ab, 1, E::kExpressible,
                      IsTomita4);
    l.fixture = kTomita4;
    l.fixture_oracle = [](const Word& w) { return !HasFactor(w, {kA, kA, kA}); };
    l.dfa = MakeDfa(
        {{1, 0}, {1, 2}, {4, 3}, {1, 2}, {5, 6}, {4, 2}, {6, 6}},
        {true, true, true, true, true, true, false});
    l.note = "reference program rejects exactly the words containing aaa";
    out.push_back(l);
  }
  {
    Language l = Make("tomita5", "Tomita 5", ab, 2, E::kNotExpressible,
                      [](const Word& w) {
                        return Count(w, kA) % 2 == 0 && Count(w, kB) % 2 == 0;
                      });
    // state = 2 * (#a mod 2) + (#b mod 2)
    l.dfa = MakeDfa({{2, 1}, {3, 0}, {0, 3}, {1, 2}},
                    {true, false, false, false});
    out.push_back(l);
  }
  {
    Language l = Make("tomita6", "Tomita 6", ab, 2, E::kNotExpressible,
                      [](const Word& w) {
                        return (Count(w, kA) - Count(w, kB)) % 3 == 0;
                      });
    l.dfa = MakeDfa({{1, 2}, {2, 0}, {0, 1}}, {true, false, false});
    out.push_back(l);
  }
  {
    Language l = Make("tomita7", "Tomita 7", ab, 1, E::kExpressible,
                      [](const Word& w) {
                        return !HasSubsequence(w, {kB, kA, kB, kA});
                      });
    l.fixture = kTomita7;
    l.dfa = MakeDfa({{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 4}},
                    {true, true, true, true, false});
    out.push_back(l);
  }
  {
    Language l = Make("nextargmax", "Next(Argmax)", abc, 1, E::kExpressible,
                      [](const Word& w) { return IsNextArgmax(w, 3); });
    l.fixture = kNextArgmax;
    l.fixture_oracle = NextArgmaxListing;
    l.positive = [](Rng& r, int n) -> std::optional<Word> {
      std::vector<std::vector<int>> seen(3, std::vector<int>(3, 0));
      Word w = {static_cast<Symbol>(r.Index(3))};
      while (static_cast<int>(w.size()) < n) {
        const std::vector<int>& row = seen[w.back()];
        int best = *std::max_element(row.begin(), row.end());
        std::vector<Symbol> options;
        for (Symbol s = 0; s < 3; ++s) {
          if (row[s] == best) options.push_back(s);
        }
        Symbol next = options[r.Index(options.size())];
        ++seen[w.back()][next];
        w.push_back(next);
      }
      return w;
    };
    l.note = "reference program computes a different property";
    out.push_back(l);
  }
  return out;
}

}  // namespace

std::string ToString(Expressibility e) {
  switch (e) {
    case Expressibility::kExpressible: return "yes";
    case Expressibility::kNotExpressible: return "no";
    case Expressibility::kUnknown: return "unknown";
  }
  return "?";
}

bool Dfa::Accepts(const Word& w) const {
  int q = start;
  for (Symbol s : w) q = delta[q][s];
  return accepting[q];
}

Alphabet Language::alphabet() const { return *Alphabet::Create(symbols); }

const std::vector<Language>& Catalog() {
  static const auto* kCatalog = new std::vector<Language>(BuildCatalog());
  return *kCatalog;
}

absl::StatusOr<const Language*> FindLanguage(std::string_view name) {
  for (const Language& l : Catalog()) {
    if (l.name == name) return &l;
  }
  return absl::NotFoundError(
      absl::StrCat("unknown language '", std::string(name), "'"));
}

absl::StatusOr<Program> ReferenceProgram(const Language& lang) {
  if (!lang.fixture) {
    return absl::NotFoundError(
        absl::StrCat("no reference program for ", lang.name));
  }
  return ParseProgram(*lang.fixture);
}

std::string CatalogJson() {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Language& l : Catalog()) {
    nlohmann::ordered_json e;
    e["name"] = l.name;
    e["title"] = l.title;
    e["alphabet"] = l.symbols;
    e["min_length"] = l.min_length;
    e["expressible"] = ToString(l.expressible);
    e["has_fixture"] = l.fixture.has_value();
    if (!l.note.empty()) e["note"] = l.note;
    j.push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace crasp::benchlang
