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

#include "crasp/benchlang/sampler.h"

#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace crasp::benchlang {
namespace {

// ways[n][q]: number of words of length n leading from q to an accepting
// (or, with accepted = false, rejecting) state. Doubles are exact enough
// for sampling weights at the lengths used here.
std::vector<std::vector<double>> CountPaths(const Dfa& dfa, int k, int length,
                                            bool accepted) {
  std::vector<std::vector<double>> ways(length + 1,
                                        std::vector<double>(dfa.states()));
  for (int q = 0; q < dfa.states(); ++q) {
    ways[0][q] = dfa.accepting[q] == accepted ? 1.0 : 0.0;
  }
  for (int n = 1; n <= length; ++n) {
    for (int q = 0; q < dfa.states(); ++q) {
      double sum = 0;
      for (int s = 0; s < k; ++s) sum += ways[n - 1][dfa.delta[q][s]];
      ways[n][q] = sum;
    }
  }
  return ways;
}

Word UniformWord(Rng& rng, int k, int length) {
  Word w(length);
  for (Symbol& s : w) s = rng.Index(k);
  return w;
}

// Draws words with one label until `want` distinct ones are found or the
// attempt budget runs out.
class Collector {
 public:
  Collector(int want, bool positive) : want_(want), positive_(positive) {}

  void Offer(const Word& w) {
    if (distinct_.insert(w).second) words_.push_back(w);
  }
  bool done() const { return static_cast<int>(words_.size()) >= want_; }
  const std::vector<Word>& words() const { return words_; }
  bool positive() const { return positive_; }

 private:
  int want_;
  bool positive_;
  std::set<Word> distinct_;
  std::vector<Word> words_;
};

std::optional<Word> SampleWithCounts(
    const Dfa& dfa, int alphabet_size,
    const std::vector<std::vector<double>>& ways, int length, Rng& rng) {
  if (ways[length][dfa.start] == 0) return std::nullopt;
  Word w;
  int q = dfa.start;
  for (int n = length; n > 0; --n) {
    double r = rng.UniformReal() * ways[n][q];
    Symbol pick = alphabet_size - 1;
    for (Symbol s = 0; s < alphabet_size; ++s) {
      double c = ways[n - 1][dfa.delta[q][s]];
      if (r < c) {
        pick = s;
        break;
      }
      r -= c;
    }
    // Rounding can leave r at the top end; back off to a viable symbol.
    while (ways[n - 1][dfa.delta[q][pick]] == 0) --pick;
    w.push_back(pick);
    q = dfa.delta[q][pick];
  }
  return w;
}

}  // namespace

std::optional<Word> SampleFromDfa(const Dfa& dfa, int alphabet_size,
                                  int length, bool accepted, Rng& rng) {
  return SampleWithCounts(dfa, alphabet_size,
                          CountPaths(dfa, alphabet_size, length, accepted),
                          length, rng);
}

absl::StatusOr<SampleResult> SampleDataset(const Language& lang,
                                           const SamplerConfig& config) {
  int lo = config.min_length > 0 ? config.min_length : lang.min_length;
  int hi = config.max_length;
  if (config.count <= 0 || config.count % 2 != 0) {
    return absl::InvalidArgumentError("count must be positive and even");
  }
  if (lo < 1 || lo > hi) {
    return absl::InvalidArgumentError(
        absl::StrCat("empty length range [", lo, ",", hi, "]"));
  }
  const int k = static_cast<int>(lang.symbols.size());
  const int half = config.count / 2;
  Rng rng(config.seed);

  // Lengths with at least one word of each label. ways[n] does not depend
  // on the total length, so one table per label covers the range.
  std::vector<std::vector<double>> pos_ways, neg_ways;
  if (lang.dfa) {
    pos_ways = CountPaths(*lang.dfa, k, hi, true);
    neg_ways = CountPaths(*lang.dfa, k, hi, false);
  }
  std::vector<int> pos_lengths, neg_lengths;
  for (int n = lo; n <= hi; ++n) {
    if (lang.dfa) {
      if (pos_ways[n][lang.dfa->start] > 0) pos_lengths.push_back(n);
      if (neg_ways[n][lang.dfa->start] > 0) neg_lengths.push_back(n);
    } else {
      pos_lengths.push_back(n);
      neg_lengths.push_back(n);
    }
  }

  SampleResult result;
  result.dataset.alphabet = lang.alphabet();
  const int budget = 200 * half;
  for (bool positive : {true, false}) {
    const std::vector<int>& lengths = positive ? pos_lengths : neg_lengths;
    Collector c(half, positive);
    for (int attempt = 0; attempt < budget && !c.done() && !lengths.empty();
         ++attempt) {
      int n = lengths[rng.Index(lengths.size())];
      std::optional<Word> w;
      if (lang.dfa) {
        w = SampleWithCounts(*lang.dfa, k, positive ? pos_ways : neg_ways, n,
                             rng);
      } else if (positive && lang.positive) {
        w = lang.positive(rng, n);
      } else {
        w = UniformWord(rng, k, n);
      }
      if (w && lang.oracle(*w) == positive) c.Offer(*w);
    }
    std::string label = positive ? "positive" : "negative";
    if (c.words().empty()) {
      return absl::FailedPreconditionError(absl::StrCat(
          lang.name, ": no ", label, " words with length in [", lo, ",", hi,
          "], need ", half));
    }
    int have = static_cast<int>(c.words().size());
    if (have < half) {
      if (!config.allow_duplicates) {
        return absl::FailedPreconditionError(absl::StrCat(
            lang.name, ": found ", have, " distinct ", label,
            " words, need ", half, " (short by ", half - have, ")"));
      }
      result.warnings.push_back(absl::StrCat(
          lang.name, ": only ", have, " distinct ", label,
          " words found; repeating to reach ", half));
    }
    for (int i = 0; i < half; ++i) {
      const Word& w = i < have ? c.words()[i] : c.words()[rng.Index(have)];
      result.dataset.Add(w, positive);
    }
  }
  return result;
}

}  // namespace crasp::benchlang
