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

#include "crasp/kernels/compiled_program.h"

#include <algorithm>

#include "absl/status/status.h"
#include "crasp/core/metrics.h"
#include "crasp/core/overloaded.h"
#include "crasp/core/semantics.h"

namespace crasp::kernels {

absl::StatusOr<CompiledProgram> CompiledProgram::Compile(const Program& p) {
  if (absl::Status s = ValidateProgram(p); !s.ok()) return s;
  CompiledProgram c;
  c.alphabet_size_ = p.alphabet.size();
  for (const Rule& r : p.rules) {
    int begin = static_cast<int>(c.nodes_.size());
    if (r.is_bool()) {
      c.LowerBool(r.bool_body(), p);
    } else {
      c.LowerCount(r.count_body(), p);
    }
    c.segments_.push_back({begin, static_cast<int>(c.nodes_.size())});
  }
  std::vector<bool> mask = ReachableRuleMask(p);
  for (int r = 0; r < c.num_rules(); ++r) {
    if (mask[r]) c.live_.push_back(r);
  }
  return c;
}

int CompiledProgram::Emit(Node n) {
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int CompiledProgram::LowerBool(const BExp& e, const Program& p) {
  return std::visit(
      Overloaded{
          [&](const ast::True&) { return Emit({Op::kTrue}); },
          [&](const ast::False&) { return Emit({Op::kFalse}); },
          [&](const ast::Letter& x) {
            return Emit({.op = Op::kLetter, .k = x.symbol});
          },
          [&](const ast::BoolRef& x) {
            return Emit({.op = Op::kRef, .a = *p.IndexOf(x.rule)});
          },
          [&](const ast::Not& x) {
            int a = LowerBool(x.operand, p);
            return Emit({.op = Op::kNot, .a = a});
          },
          [&](const ast::Junction& x) {
            int a = LowerBool(x.lhs, p);
            int b = LowerBool(x.rhs, p);
            return Emit({.op = x.op == BoolOp::kAnd ? Op::kAnd : Op::kOr,
                         .a = a, .b = b});
          },
          [&](const ast::Compare& x) {
            int a = LowerCount(x.lhs, p);
            int b = LowerCount(x.rhs, p);
            Op op = x.op == CmpOp::kEq   ? Op::kEq
                    : x.op == CmpOp::kLe ? Op::kLe
                                         : Op::kLt;
            return Emit({.op = op, .a = a, .b = b});
          },
          [&](const ast::Periodic& x) {
            return Emit({.op = Op::kPeriodic, .k = x.modulus, .k2 = x.offset});
          },
      },
      static_cast<const BoolNode::variant&>(e.node()));
}

int CompiledProgram::LowerCount(const CExp& e, const Program& p) {
  return std::visit(
      Overloaded{
          [&](const ast::Constant& x) {
            return Emit({.op = Op::kConst, .k = x.value});
          },
          [&](const ast::CountRef& x) {
            return Emit({.op = Op::kRef, .a = *p.IndexOf(x.rule)});
          },
          [&](const ast::CountAll& x) {
            int a = LowerBool(x.operand, p);
            return Emit({.op = Op::kCountAll, .a = a, .slot = num_acc_++});
          },
          [&](const ast::CountWindow& x) {
            int a = LowerBool(x.operand, p);
            int slot = ring_size_;
            ring_size_ += x.window_end + 1;
            return Emit({.op = Op::kWindow, .a = a, .slot = slot,
                         .rs = x.window_start, .re = x.window_end});
          },
          [&](const ast::Arith& x) {
            int a = LowerCount(x.lhs, p);
            int b = LowerCount(x.rhs, p);
            Op op = x.op == ArithOp::kAdd   ? Op::kAdd
                    : x.op == ArithOp::kSub ? Op::kSub
                    : x.op == ArithOp::kMin ? Op::kMin
                                            : Op::kMax;
            return Emit({.op = op, .a = a, .b = b});
          },
          [&](const ast::Ite& x) {
            int c = LowerBool(x.cond, p);
            int a = LowerCount(x.then_value, p);
            int b = LowerCount(x.else_value, p);
            return Emit({.op = Op::kIte, .a = a, .b = b, .c = c});
          },
      },
      static_cast<const CountNode::variant&>(e.node()));
}

CompiledProgram::State CompiledProgram::Initial() const {
  State s;
  s.value.assign(nodes_.size(), 0);
  s.acc.assign(num_acc_, 0);
  s.ring.assign(ring_size_, 0);
  return s;
}

template <typename RefFn>
void CompiledProgram::EvalNodes(int begin, int end, State& s, Symbol a,
                                RefFn ref) const {
  int64_t* v = s.value.data();
  const int64_t j = s.position;
  for (int i = begin; i < end; ++i) {
    const Node& n = nodes_[i];
    int64_t out = 0;
    switch (n.op) {
      case Op::kTrue: out = 1; break;
      case Op::kFalse: out = 0; break;
      case Op::kLetter: out = a == n.k; break;
      case Op::kRef: out = ref(n.a); break;
      case Op::kNot: out = !v[n.a]; break;
      case Op::kAnd: out = v[n.a] && v[n.b]; break;
      case Op::kOr: out = v[n.a] || v[n.b]; break;
      case Op::kEq: out = v[n.a] == v[n.b]; break;
      case Op::kLe: out = v[n.a] <= v[n.b]; break;
      case Op::kLt: out = v[n.a] < v[n.b]; break;
      case Op::kPeriodic: out = (j - 1) % n.k == n.k2; break;
      case Op::kConst: out = n.k; break;
      case Op::kCountAll: out = (s.acc[n.slot] += v[n.a]); break;
      case Op::kWindow: {
        // ring holds the indicator at positions j - re .. j, indexed mod
        // (re + 1); unwritten entries are 0 and stand for positions < 1.
        int len = n.re + 1;
        int64_t* ring = s.ring.data() + n.slot;
        ring[j % len] = v[n.a];
        for (int d = n.rs; d <= n.re && d < j; ++d) out += ring[(j - d) % len];
        break;
      }
      case Op::kAdd:
        s.overflow |= __builtin_add_overflow(v[n.a], v[n.b], &out);
        break;
      case Op::kSub:
        s.overflow |= __builtin_sub_overflow(v[n.a], v[n.b], &out);
        break;
      case Op::kMin: out = std::min(v[n.a], v[n.b]); break;
      case Op::kMax: out = std::max(v[n.a], v[n.b]); break;
      case Op::kIte: out = v[n.c] ? v[n.a] : v[n.b]; break;
    }
    v[i] = out;
  }
}

bool CompiledProgram::Step(State& s, Symbol a) const {
  ++s.position;
  for (int r : live_) {
    EvalNodes(segments_[r].begin, segments_[r].end, s, a,
              [&](int rule) { return s.value[segments_[rule].end - 1]; });
  }
  return s.value[segments_.back().end - 1] != 0;
}

absl::StatusOr<bool> CompiledProgram::Accepts(std::span<const Symbol> w) const {
  if (w.empty()) return absl::InvalidArgumentError("empty word");
  State s = Initial();
  bool out = false;
  for (Symbol a : w) {
    if (a < 0 || a >= alphabet_size_) {
      return absl::InvalidArgumentError("symbol outside the alphabet");
    }
    out = Step(s, a);
  }
  if (s.overflow) return absl::OutOfRangeError("integer overflow");
  return out;
}

bool CompiledProgram::EvalRuleColumn(
    int rule, std::span<const Symbol> w,
    std::vector<std::span<int64_t>>& columns) const {
  // Node-major: each node is evaluated over the whole word before the next,
  // so the dispatch happens once per node rather than once per position.
  const Segment& seg = segments_[rule];
  const size_t len = w.size();
  const int count = seg.end - seg.begin;
  thread_local std::vector<int64_t> buf;
  thread_local std::vector<const int64_t*> col;
  if (buf.size() < count * len) buf.resize(count * len);
  col.resize(count);
  bool overflow = false;
  for (int i = seg.begin; i < seg.end; ++i) {
    const Node& n = nodes_[i];
    int64_t* o = buf.data() + (i - seg.begin) * len;
    col[i - seg.begin] = o;
    const int64_t* a = n.a >= seg.begin && n.a < i ? col[n.a - seg.begin]
                                                   : nullptr;
    const int64_t* b = n.b >= seg.begin && n.b < i ? col[n.b - seg.begin]
                                                   : nullptr;
    switch (n.op) {
      case Op::kTrue: std::fill_n(o, len, 1); break;
      case Op::kFalse: std::fill_n(o, len, 0); break;
      case Op::kLetter:
        for (size_t j = 0; j < len; ++j) o[j] = w[j] == n.k;
        break;
      case Op::kRef: col[i - seg.begin] = columns[n.a].data(); break;
      case Op::kNot:
        for (size_t j = 0; j < len; ++j) o[j] = !a[j];
        break;
      case Op::kAnd:
        for (size_t j = 0; j < len; ++j) o[j] = a[j] && b[j];
        break;
      case Op::kOr:
        for (size_t j = 0; j < len; ++j) o[j] = a[j] || b[j];
        break;
      case Op::kEq:
        for (size_t j = 0; j < len; ++j) o[j] = a[j] == b[j];
        break;
      case Op::kLe:
        for (size_t j = 0; j < len; ++j) o[j] = a[j] <= b[j];
        break;
      case Op::kLt:
        for (size_t j = 0; j < len; ++j) o[j] = a[j] < b[j];
        break;
      case Op::kPeriodic:
        // Position j + 1 satisfies m%o iff j mod m = o.
        for (size_t j = 0, r = 0; j < len; ++j) {
          o[j] = static_cast<int64_t>(r) == n.k2;
          if (++r == static_cast<size_t>(n.k)) r = 0;
        }
        break;
      case Op::kConst: std::fill_n(o, len, n.k); break;
      case Op::kCountAll: {
        int64_t acc = 0;
        for (size_t j = 0; j < len; ++j) o[j] = (acc += a[j]);
        break;
      }
      case Op::kWindow:
        for (size_t j = 0; j < len; ++j) {
          int64_t sum = 0;
          for (int d = n.rs; d <= n.re && static_cast<size_t>(d) <= j; ++d) {
            sum += a[j - d];
          }
          o[j] = sum;
        }
        break;
      case Op::kAdd:
        for (size_t j = 0; j < len; ++j) {
          overflow |= __builtin_add_overflow(a[j], b[j], &o[j]);
        }
        break;
      case Op::kSub:
        for (size_t j = 0; j < len; ++j) {
          overflow |= __builtin_sub_overflow(a[j], b[j], &o[j]);
        }
        break;
      case Op::kMin:
        for (size_t j = 0; j < len; ++j) o[j] = std::min(a[j], b[j]);
        break;
      case Op::kMax:
        for (size_t j = 0; j < len; ++j) o[j] = std::max(a[j], b[j]);
        break;
      case Op::kIte: {
        const int64_t* c = col[n.c - seg.begin];
        for (size_t j = 0; j < len; ++j) o[j] = c[j] ? a[j] : b[j];
        break;
      }
    }
  }
  std::copy_n(col[count - 1], len, columns[rule].data());
  return !overflow;
}

}  // namespace crasp::kernels
