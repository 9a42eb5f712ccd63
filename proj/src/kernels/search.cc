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

#include "crasp/kernels/search.h"

#include <algorithm>
#include <atomic>

#include "absl/status/status.h"
#include "crasp/core/semantics.h"
#include "crasp/lustre/eval.h"

namespace crasp::kernels {
namespace {

struct Best {
  int len = INT32_MAX;
  Word word;

  void Offer(const Word& w) {
    int n = static_cast<int>(w.size());
    if (n < len || (n == len && w < word)) {
      len = n;
      word = w;
    }
  }
};

// Depth-first search below one prefix. Stepper provides State, Initial()
// and Advance(State&, Symbol, bool& error) -> refuted.
template <typename Stepper>
class Dfs {
 public:
  using State = typename Stepper::State;

  Dfs(const Stepper& stepper, int k, int max_len, std::atomic<int>& global,
      std::atomic<bool>& error)
      : st_(stepper), k_(k), max_len_(max_len), global_(global),
        error_(error), stack_(max_len + 1) {}

  // Replays `prefix` (reporting refutations on the way when `report`) and
  // explores every extension up to max_len.
  void Run(const Word& prefix, bool explore) {
    stack_[0] = st_.Initial();
    word_.clear();
    for (size_t i = 0; i < prefix.size(); ++i) {
      stack_[i + 1] = stack_[i];
      bool bad = false;
      bool refuted = st_.Advance(stack_[i + 1], prefix[i], bad);
      ++visited_;
      word_.push_back(prefix[i]);
      if (bad) {
        error_ = true;
        return;
      }
      if (refuted) Found();
    }
    if (explore) Visit(static_cast<int>(prefix.size()));
  }

  const Best& best() const { return best_; }
  int64_t visited() const { return visited_; }

 private:
  void Found() {
    best_.Offer(word_);
    int n = static_cast<int>(word_.size());
    int cur = global_.load();
    while (n < cur && !global_.compare_exchange_weak(cur, n)) {
    }
  }

  void Visit(int depth) {
    if (depth >= max_len_ || error_) return;
    int next = depth + 1;
    if (next > best_.len || next > global_.load()) return;
    for (Symbol a = 0; a < k_; ++a) {
      stack_[next] = stack_[depth];
      bool bad = false;
      bool refuted = st_.Advance(stack_[next], a, bad);
      ++visited_;
      if (bad) {
        error_ = true;
        return;
      }
      word_.push_back(a);
      if (refuted) {
        Found();
      } else {
        Visit(next);
      }
      word_.pop_back();
    }
  }

  const Stepper& st_;
  int k_, max_len_;
  std::atomic<int>& global_;
  std::atomic<bool>& error_;
  std::vector<State> stack_;
  Word word_;
  Best best_;
  int64_t visited_ = 0;
};

template <typename Stepper>
absl::StatusOr<std::optional<Word>> Search(const Stepper& st, int k,
                                           int max_len, SearchStats* stats) {
  if (max_len < 1) return absl::InvalidArgumentError("bound must be >= 1");
  std::atomic<int> global = INT32_MAX;
  std::atomic<bool> error = false;
  int64_t visited = 0;

  // Words up to the split depth are searched serially; the rest in
  // parallel, one task per prefix of that length.
  int depth = 1;
  int64_t tasks = k;
  while (depth < max_len && tasks < 256) {
    ++depth;
    tasks *= k;
  }
  Best best;
  {
    Dfs<Stepper> shallow(st, k, depth, global, error);
    shallow.Run({}, true);
    best = shallow.best();
    visited += shallow.visited();
  }
  if (!error && best.len > depth && depth < max_len) {
    std::vector<Word> prefixes(tasks);
    for (int64_t t = 0; t < tasks; ++t) {
      Word w(depth);
      int64_t x = t;
      for (int i = depth - 1; i >= 0; --i, x /= k) w[i] = x % k;
      prefixes[t] = std::move(w);
    }
    std::vector<Best> found(tasks);
#pragma omp parallel reduction(+ : visited)
    {
#pragma omp for schedule(dynamic, 1)
      for (int64_t t = 0; t < tasks; ++t) {
        if (error) continue;
        Dfs<Stepper> local(st, k, max_len, global, error);
        // Prefix refutations were already seen by the shallow pass.
        local.Run(prefixes[t], true);
        found[t] = local.best();
        visited += local.visited();
      }
    }
    for (const Best& b : found) {
      if (b.len != INT32_MAX) best.Offer(b.word);
    }
  }
  if (stats) stats->words = visited;
  if (error) return absl::OutOfRangeError("evaluation error (overflow)");
  if (best.len == INT32_MAX) return std::nullopt;
  return best.word;
}

struct CraspStepper {
  struct State {
    CompiledProgram::State a, b;
  };
  Property property;
  const CompiledProgram* first;
  const CompiledProgram* second;

  State Initial() const {
    State s{first->Initial(), {}};
    if (second) s.b = second->Initial();
    return s;
  }
  bool Advance(State& s, Symbol x, bool& error) const {
    bool a1 = first->Step(s.a, x);
    bool a2 = second ? second->Step(s.b, x) : false;
    error = s.a.overflow || s.b.overflow;
    return Refutes(property, a1, a2);
  }
};

struct LustreStepper {
  using State = lustre::CompiledNode::State;
  const lustre::CompiledNode* node;
  int64_t eos;

  State Initial() const { return node->Initial(); }
  bool Advance(State& s, Symbol x, bool& error) const {
    thread_local std::vector<int64_t> locals;
    thread_local State end;
    locals.resize(node->num_locals());
    absl::StatusOr<bool> ok = node->Step(s, x, locals);
    if (!ok.ok()) {
      error = true;
      return false;
    }
    if (!*ok) return true;
    end = s;
    ok = node->Step(end, eos, locals);
    if (!ok.ok()) {
      error = true;
      return false;
    }
    return !*ok;
  }
};

}  // namespace

absl::StatusOr<std::optional<Word>> FindCounterexample(
    Property property, const CompiledProgram& first,
    const CompiledProgram* second, int max_len, SearchStats* stats) {
  bool binary =
      property == Property::kInclusion || property == Property::kEquality;
  if (binary != (second != nullptr)) {
    return absl::InvalidArgumentError("wrong number of programs");
  }
  if (second && second->alphabet_size() != first.alphabet_size()) {
    return absl::InvalidArgumentError("alphabet sizes differ");
  }
  CraspStepper st{property, &first, second};
  return Search(st, first.alphabet_size(), max_len, stats);
}

absl::StatusOr<std::optional<Word>> FindLustreCounterexample(
    const lustre::Node& node, int alphabet_size, int64_t eos, int max_len,
    SearchStats* stats) {
  absl::StatusOr<lustre::CompiledNode> c = lustre::CompiledNode::Compile(node);
  if (!c.ok()) return c.status();
  LustreStepper st{&*c, eos};
  return Search(st, alphabet_size, max_len, stats);
}

namespace serial {
namespace {

// Words of length n in lexicographic order, via an odometer.
bool NextWord(Word& w, int k) {
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (++w[i] < k) return true;
    w[i] = 0;
  }
  return false;
}

}  // namespace

absl::StatusOr<std::optional<Word>> FindCounterexample(Property property,
                                                       const Program& first,
                                                       const Program* second,
                                                       int max_len) {
  const int k = first.alphabet.size();
  for (int n = 1; n <= max_len; ++n) {
    Word w(n, 0);
    do {
      absl::StatusOr<bool> a1 = Accepts(first, w);
      if (!a1.ok()) return a1.status();
      bool a2 = false;
      if (second) {
        absl::StatusOr<bool> r = Accepts(*second, w);
        if (!r.ok()) return r.status();
        a2 = *r;
      }
      if (Refutes(property, *a1, a2)) return w;
    } while (NextWord(w, k));
  }
  return std::nullopt;
}

absl::StatusOr<std::optional<Word>> FindLustreCounterexample(
    const lustre::Node& node, int alphabet_size, int64_t eos, int max_len) {
  std::vector<Word> words;
  std::vector<std::vector<int64_t>> streams;
  for (int n = 1; n <= max_len; ++n) {
    Word w(n, 0);
    do {
      words.push_back(w);
      std::vector<int64_t> s(w.begin(), w.end());
      s.push_back(eos);
      streams.push_back(std::move(s));
    } while (NextWord(w, alphabet_size));
  }
  absl::StatusOr<std::optional<lustre::CheckViolation>> v =
      lustre::BoundedCheck(node, streams);
  if (!v.ok()) return v.status();
  if (!v->has_value()) return std::nullopt;
  const Word& w = words[(*v)->input_index];
  // A failure before the eos position refutes the prefix read so far.
  int n = std::min<int>((*v)->position + 1, w.size());
  return Word(w.begin(), w.begin() + n);
}

}  // namespace serial
}  // namespace crasp::kernels
