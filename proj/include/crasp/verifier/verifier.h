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

#ifndef CRASP_VERIFIER_VERIFIER_H_
#define CRASP_VERIFIER_VERIFIER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crasp/c2l/translate.h"
#include "crasp/core/ast.h"

namespace crasp::verifier {

using c2l::CheckKind;

enum class Backend {
  kInternal,  // exhaustive enumeration on C-RASP semantics
  kLustre,    // exhaustive enumeration on the translated node
  kKind2,     // external model checker
};

std::string ToString(Backend b);
absl::StatusOr<Backend> ParseBackend(std::string_view name);

struct Options {
  Backend backend = Backend::kInternal;
  int bound = 10;
  double timeout_s = 60;
  // Enumeration stops being attempted once sum_{n<=bound} k^n exceeds this.
  int64_t budget = 100'000'000;
  std::string kind2_path = "kind2";
  std::vector<std::string> kind2_args;
  bool keep_files = false;  // leave the per-query temp directory behind
};

// Defaults, then the JSON config file if `path` is nonempty, then the
// CRASP_KIND2_PATH, CRASP_TIMEOUT and CRASP_BOUND environment variables.
absl::StatusOr<Options> LoadOptions(const std::string& path);
absl::Status ApplyEnvironment(Options& options);

struct Query {
  CheckKind kind = CheckKind::kUniversality;
  Program first;
  std::optional<Program> second;
  Options options;
};

absl::Status CheckQuery(const Query& q);

// True when `w` violates the queried property under C-RASP semantics.
absl::StatusOr<bool> Refutes(const Query& q, const Word& w);

enum class Status { kValid, kCounterexample, kUnknown };

enum class Reason {
  kNone,
  kTimeout,
  kToolMissing,
  kBoundExhausted,
  kBudget,
  kToolError,     // crashed, unparsable output or unrecognized answer
  kInvalidTrace,  // decoded trace failed the semantic re-check
};

std::string ToString(Status s);
std::string ToString(Reason r);

struct Verdict {
  Status status = Status::kUnknown;
  Backend backend = Backend::kInternal;
  Reason reason = Reason::kNone;
  Word word;  // counterexamples only
  int bound = 0;
  int64_t words_checked = 0;
  double seconds = 0;
  std::string note;
  std::string trace;  // raw tool output (kind2 only)

  bool refuted() const { return status == Status::kCounterexample; }
  bool valid() const { return status == Status::kValid; }
};

absl::StatusOr<Verdict> BoundedVerify(const Query& q);
absl::StatusOr<Verdict> LustreVerify(const Query& q);
absl::StatusOr<Verdict> Kind2Verify(const Query& q);

// Dispatches on q.options.backend.
absl::StatusOr<Verdict> Verify(const Query& q);

// Extracts the verdict for `property` from Kind2's JSON output. The word is
// decoded but not re-checked.
absl::StatusOr<Verdict> ParseKind2Output(const std::string& output,
                                         const std::string& property,
                                         const c2l::SymbolCodec& codec,
                                         const std::string& input);

// Absolute path of the executable, or nullopt.
std::optional<std::string> ResolveExecutable(const std::string& name);

struct CrossReport {
  Verdict internal;
  Verdict other;  // kind2 when resolvable, else the lustre backend
  bool agree = true;
  std::string diagnostic;  // filled on disagreement
};

absl::StatusOr<CrossReport> CrossValidate(const Query& q, int bound);

std::string VerdictJson(const Query& q, const Verdict& v);

// Process exit code convention: 0 valid, 1 refuted, 3 unknown.
int ExitCode(const Verdict& v);

}  // namespace crasp::verifier

#endif  // CRASP_VERIFIER_VERIFIER_H_
