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

#ifndef CRASP_TESTS_TEST_UTIL_H_
#define CRASP_TESTS_TEST_UTIL_H_

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "crasp/core/ast.h"
#include "crasp/core/rng.h"

namespace crasp::testing {

// Word from single-character symbols, e.g. W("abba", "ab").
inline Word W(const std::string& s, const std::string& letters) {
  Word w;
  for (char c : s) w.push_back(static_cast<Symbol>(letters.find(c)));
  return w;
}

// Every word over k symbols of length 1..max_len, shortest first and
// lexicographic within a length.
inline std::vector<Word> AllWords(int k, int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer = {Word{}};
  for (int n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Symbol s = 0; s < k; ++s) {
        Word x = w;
        x.push_back(s);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Random well-formed program over {a, b} exercising every constructor.
inline Program RandomProgram(Rng& rng, int max_rules = 4, int depth = 3) {
  Program p;
  p.name = "r";
  p.alphabet = *Alphabet::Create({"a", "b"});
  std::vector<std::string> bools, counts;
  std::function<BExp(int)> b;
  std::function<CExp(int)> c;
  b = [&](int d) -> BExp {
    switch (rng.Index(d > 0 ? 8 : 5)) {
      case 0: return Letter(rng.Index(2));
      case 1: return rng.Bernoulli(0.5) ? True() : False();
      case 2: {
        int m = static_cast<int>(rng.Uniform(1, 4));
        return Periodic(m, rng.Index(m));
      }
      case 3:
        if (!bools.empty()) return BoolRef(bools[rng.Index(bools.size())]);
        return Letter(0);
      case 4: return Letter(1);
      case 5: return Not(b(d - 1));
      case 6:
        return Junction(rng.Bernoulli(0.5) ? BoolOp::kAnd : BoolOp::kOr,
                        b(d - 1), b(d - 1));
      default:
        return Compare(static_cast<CmpOp>(rng.Index(3)), c(d - 1), c(d - 1));
    }
  };
  c = [&](int d) -> CExp {
    switch (rng.Index(d > 0 ? 7 : 2)) {
      case 0: return Const(rng.Uniform(0, 3));
      case 1:
        if (!counts.empty()) return CountRef(counts[rng.Index(counts.size())]);
        return Const(1);
      case 2: return CountAll(b(d - 1));
      case 3: {
        int rs = rng.Index(3);
        return CountWindow(rs, rs + rng.Index(3), b(d - 1));
      }
      case 4:
        return Arith(static_cast<ArithOp>(rng.Index(4)), c(d - 1), c(d - 1));
      case 5: return Ite(b(d - 1), c(d - 1), c(d - 1));
      default: return CountAll(Letter(rng.Index(2)));
    }
  };
  int n = static_cast<int>(rng.Uniform(1, max_rules));
  for (int i = 0; i < n; ++i) {
    std::string name = "R" + std::to_string(i);
    if (i + 1 < n && rng.Bernoulli(0.5)) {
      p.rules.push_back(CountRule(name, c(depth)));
      counts.push_back(name);
    } else {
      p.rules.push_back(BoolRule(name, b(depth)));
      bools.push_back(name);
    }
  }
  return p;
}

}  // namespace crasp::testing

#endif  // CRASP_TESTS_TEST_UTIL_H_
