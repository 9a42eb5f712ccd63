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

#include "crasp/verifier/verifier.h"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <stdlib.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "crasp/c2l/emit.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"
#include "crasp/kernels/compiled_program.h"
#include "crasp/kernels/search.h"
#include "crasp/text/samples.h"
#include "nlohmann/json.hpp"

extern char** environ;

namespace crasp::verifier {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

kernels::Property ToProperty(CheckKind k) {
  switch (k) {
    case CheckKind::kInclusion: return kernels::Property::kInclusion;
    case CheckKind::kEquality: return kernels::Property::kEquality;
    case CheckKind::kUniversality: return kernels::Property::kUniversality;
    case CheckKind::kEmptiness: return kernels::Property::kEmptiness;
  }
  return kernels::Property::kUniversality;
}

// Second program over the first one's symbol order.
absl::StatusOr<std::optional<Program>> AlignedSecond(const Query& q) {
  if (!q.second) return std::optional<Program>();
  absl::StatusOr<Program> p = Relabel(*q.second, q.first.alphabet);
  if (!p.ok()) return p.status();
  return std::optional<Program>(*std::move(p));
}

absl::StatusOr<Verdict> OverBudget(const Query& q, Verdict v) {
  double total = 0, k = q.first.alphabet.size();
  for (int n = 1; n <= q.options.bound; ++n) total += std::pow(k, n);
  if (total <= static_cast<double>(q.options.budget)) return v;
  v.status = Status::kUnknown;
  v.reason = Reason::kBudget;
  v.note = absl::StrCat("enumeration of ~", static_cast<int64_t>(total),
                        " words exceeds the budget of ", q.options.budget);
  return v;
}

// Every counterexample leaves through here.
absl::StatusOr<Verdict> Confirm(const Query& q, Verdict v) {
  if (!v.refuted()) return v;
  absl::StatusOr<bool> r = Refutes(q, v.word);
  if (!r.ok()) return r.status();
  if (!*r) {
    return absl::InternalError(absl::StrCat(
        ToString(v.backend), " backend returned a non-refuting word ",
        FormatWord(q.first.alphabet, v.word)));
  }
  return v;
}

Verdict Exhausted(Verdict v) {
  v.status = Status::kUnknown;
  v.reason = Reason::kBoundExhausted;
  v.note = absl::StrCat("no counterexample up to length ", v.bound,
                        "; validity not proved");
  return v;
}

absl::StatusOr<std::string> ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", p.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteAll(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) {
    return absl::InternalError(absl::StrCat("cannot write ", p.string()));
  }
  return absl::OkStatus();
}

struct TempDir {
  fs::path path;
  bool keep = false;
  ~TempDir() {
    std::error_code ec;
    if (!path.empty() && !keep) fs::remove_all(path, ec);
  }
};

absl::Status MakeTempDir(TempDir& dir) {
  std::string templ =
      (fs::temp_directory_path() / "crasp-verify-XXXXXX").string();
  if (mkdtemp(templ.data()) == nullptr) {
    return absl::InternalError("mkdtemp failed");
  }
  dir.path = templ;
  return absl::OkStatus();
}

struct RunResult {
  bool timed_out = false;
  int exit_status = 0;
};

absl::StatusOr<RunResult> RunProcess(const std::vector<std::string>& argv,
                                     const fs::path& out, const fs::path& err,
                                     double timeout_s) {
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null",
                                   O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, out.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, err.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  // Own process group, so a timeout also takes down the tool's solvers.
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char*> args;
  for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  pid_t pid;
  int rc = posix_spawn(&pid, args[0], &actions, &attr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    return absl::InternalError(
        absl::StrCat("posix_spawn ", argv[0], ": ", strerror(rc)));
  }

  // The tool gets its own --timeout; this is the backstop.
  auto deadline = Clock::now() + std::chrono::duration<double>(timeout_s + 2);
  RunResult result;
  int status = 0;
  while (true) {
    pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) {
      return absl::InternalError("waitpid failed");
    }
    if (Clock::now() > deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      result.timed_out = true;
      return result;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  result.exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string FormatDouble(double d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

}  // namespace

std::string ToString(Backend b) {
  switch (b) {
    case Backend::kInternal: return "internal";
    case Backend::kLustre: return "lustre";
    case Backend::kKind2: return "kind2";
  }
  return "?";
}

absl::StatusOr<Backend> ParseBackend(std::string_view name) {
  for (Backend b : {Backend::kInternal, Backend::kLustre, Backend::kKind2}) {
    if (ToString(b) == name) return b;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown backend '", std::string(name),
                   "' (expected internal, lustre or kind2)"));
}

std::string ToString(Status s) {
  switch (s) {
    case Status::kValid: return "valid";
    case Status::kCounterexample: return "counterexample";
    case Status::kUnknown: return "unknown";
  }
  return "?";
}

std::string ToString(Reason r) {
  switch (r) {
    case Reason::kNone: return "";
    case Reason::kTimeout: return "timeout";
    case Reason::kToolMissing: return "tool-missing";
    case Reason::kBoundExhausted: return "bound-exhausted";
    case Reason::kBudget: return "budget";
    case Reason::kToolError: return "tool-error";
    case Reason::kInvalidTrace: return "invalid-trace";
  }
  return "?";
}

absl::Status ApplyEnvironment(Options& options) {
  if (const char* v = std::getenv("CRASP_KIND2_PATH"); v && *v) {
    options.kind2_path = v;
  }
  if (const char* v = std::getenv("CRASP_TIMEOUT"); v && *v) {
    if (!absl::SimpleAtod(v, &options.timeout_s) || options.timeout_s < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("CRASP_TIMEOUT: bad value '", v, "'"));
    }
  }
  if (const char* v = std::getenv("CRASP_BOUND"); v && *v) {
    if (!absl::SimpleAtoi(v, &options.bound) || options.bound < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("CRASP_BOUND: bad value '", v, "'"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Options> LoadOptions(const std::string& path) {
  Options o;
  if (!path.empty()) {
    absl::StatusOr<std::string> text = ReadAll(path);
    if (!text.ok()) return text.status();
    json j = json::parse(*text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": not a JSON object"));
    }
    if (j.contains("verifier")) {
      const json& v = j["verifier"];
      try {
        for (const auto& [key, value] : v.items()) {
          if (key == "backend") {
            absl::StatusOr<Backend> b = ParseBackend(value.get<std::string>());
            if (!b.ok()) return b.status();
            o.backend = *b;
          } else if (key == "bound") {
            o.bound = value.get<int>();
          } else if (key == "timeout") {
            o.timeout_s = value.get<double>();
          } else if (key == "budget") {
            o.budget = value.get<int64_t>();
          } else if (key == "kind2_path") {
            o.kind2_path = value.get<std::string>();
          } else if (key == "kind2_args") {
            o.kind2_args = value.get<std::vector<std::string>>();
          } else if (key == "keep_files") {
            o.keep_files = value.get<bool>();
          } else {
            return absl::InvalidArgumentError(
                absl::StrCat(path, ": unknown verifier key '", key, "'"));
          }
        }
      } catch (const json::exception& e) {
        return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
      }
    }
  }
  if (absl::Status s = ApplyEnvironment(o); !s.ok()) return s;
  if (o.bound < 1) return absl::InvalidArgumentError("bound must be >= 1");
  return o;
}

absl::Status CheckQuery(const Query& q) {
  if (absl::Status s = ValidateProgram(q.first); !s.ok()) return s;
  if (c2l::IsBinary(q.kind) != q.second.has_value()) {
    return absl::InvalidArgumentError(absl::StrCat(
        ToString(q.kind), c2l::IsBinary(q.kind) ? " needs two programs"
                                                : " takes one program"));
  }
  if (q.second) {
    if (absl::Status s = ValidateProgram(*q.second); !s.ok()) return s;
    if (!q.first.alphabet.SameSymbols(q.second->alphabet)) {
      return absl::InvalidArgumentError("programs use different alphabets");
    }
  }
  if (q.options.bound < 1) {
    return absl::InvalidArgumentError("bound must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<bool> Refutes(const Query& q, const Word& w) {
  if (w.empty()) return false;
  absl::StatusOr<bool> a1 = Accepts(q.first, w);
  if (!a1.ok()) return a1.status();
  bool a2 = false;
  if (q.second) {
    Word w2;
    for (Symbol s : w) {
      std::optional<Symbol> t = q.second->alphabet.Find(q.first.alphabet.name(s));
      if (!t) return absl::InvalidArgumentError("symbol missing in second");
      w2.push_back(*t);
    }
    absl::StatusOr<bool> r = Accepts(*q.second, w2);
    if (!r.ok()) return r.status();
    a2 = *r;
  }
  return kernels::Refutes(ToProperty(q.kind), *a1, a2);
}

absl::StatusOr<Verdict> BoundedVerify(const Query& q) {
  if (absl::Status s = CheckQuery(q); !s.ok()) return s;
  auto t0 = Clock::now();
  Verdict v;
  v.backend = Backend::kInternal;
  v.bound = q.options.bound;
  absl::StatusOr<Verdict> budget = OverBudget(q, v);
  if (!budget.ok() || budget->reason == Reason::kBudget) return budget;

  absl::StatusOr<std::optional<Program>> second = AlignedSecond(q);
  if (!second.ok()) return second.status();
  absl::StatusOr<kernels::CompiledProgram> c1 =
      kernels::CompiledProgram::Compile(q.first);
  if (!c1.ok()) return c1.status();
  std::optional<kernels::CompiledProgram> c2;
  if (*second) {
    absl::StatusOr<kernels::CompiledProgram> c =
        kernels::CompiledProgram::Compile(**second);
    if (!c.ok()) return c.status();
    c2 = *std::move(c);
  }
  kernels::SearchStats stats;
  absl::StatusOr<std::optional<Word>> w = kernels::FindCounterexample(
      ToProperty(q.kind), *c1, c2 ? &*c2 : nullptr, q.options.bound, &stats);
  if (!w.ok()) return w.status();
  v.words_checked = stats.words;
  v.seconds = Since(t0);
  if (!*w) return Exhausted(v);
  v.status = Status::kCounterexample;
  v.word = **w;
  return Confirm(q, v);
}

absl::StatusOr<Verdict> LustreVerify(const Query& q) {
  if (absl::Status s = CheckQuery(q); !s.ok()) return s;
  auto t0 = Clock::now();
  Verdict v;
  v.backend = Backend::kLustre;
  v.bound = q.options.bound;
  absl::StatusOr<Verdict> budget = OverBudget(q, v);
  if (!budget.ok() || budget->reason == Reason::kBudget) return budget;

  absl::StatusOr<c2l::TranslationUnit> unit = c2l::BuildUnit(
      q.kind, q.first, q.second ? &*q.second : nullptr);
  if (!unit.ok()) return unit.status();
  kernels::SearchStats stats;
  absl::StatusOr<std::optional<Word>> w = kernels::FindLustreCounterexample(
      unit->node, q.first.alphabet.size(), unit->codec.eos(), q.options.bound,
      &stats);
  if (!w.ok()) return w.status();
  v.words_checked = stats.words;
  v.seconds = Since(t0);
  if (!*w) return Exhausted(v);
  v.status = Status::kCounterexample;
  v.word = **w;
  return Confirm(q, v);
}

std::optional<std::string> ResolveExecutable(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name.find('/') != std::string::npos) {
    if (access(name.c_str(), X_OK) == 0 && !fs::is_directory(name)) {
      return fs::absolute(name).string();
    }
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  if (path == nullptr) return std::nullopt;
  for (absl::string_view dir : absl::StrSplit(path, ':', absl::SkipEmpty())) {
    fs::path candidate = fs::path(std::string(dir)) / name;
    if (access(candidate.c_str(), X_OK) == 0 && !fs::is_directory(candidate)) {
      return candidate.string();
    }
  }
  return std::nullopt;
}

absl::StatusOr<Verdict> ParseKind2Output(const std::string& output,
                                         const std::string& property,
                                         const c2l::SymbolCodec& codec,
                                         const std::string& input) {
  Verdict v;
  v.backend = Backend::kKind2;
  v.trace = output;
  json j = json::parse(output, nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    return absl::InvalidArgumentError("kind2 output is not a JSON array");
  }
  const json* prop = nullptr;
  for (const json& o : j) {
    if (!o.is_object() || o.value("objectType", "") != "property") continue;
    std::string name = o.value("name", "");
    if (name == property || absl::EndsWith(name, absl::StrCat(".", property)) ||
        absl::EndsWith(name, absl::StrCat("[", property, "]"))) {
      prop = &o;
    }
  }
  if (prop == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("kind2 output has no property '", property, "'"));
  }
  std::string answer;
  if (prop->contains("answer") && (*prop)["answer"].is_object()) {
    answer = (*prop)["answer"].value("value", "");
  }
  if (answer == "valid") {
    v.status = Status::kValid;
    v.note = "proved by kind2";
    return v;
  }
  if (answer == "unknown") {
    v.status = Status::kUnknown;
    v.reason = Reason::kTimeout;
    v.note = "kind2 answered unknown";
    return v;
  }
  if (answer != "falsifiable") {
    return absl::InvalidArgumentError(
        absl::StrCat("unrecognized kind2 answer '", answer, "'"));
  }
  if (!prop->contains("counterExample")) {
    return absl::InvalidArgumentError("falsifiable without counterExample");
  }
  std::vector<std::pair<int64_t, int64_t>> values;
  bool found = false;
  try {
    for (const json& block : (*prop)["counterExample"]) {
      if (!block.contains("streams")) continue;
      for (const json& s : block["streams"]) {
        if (s.value("name", "") != input) continue;
        if (s.value("class", "input") != "input") continue;
        for (const json& iv : s["instantValues"]) {
          values.emplace_back(iv.at(0).get<int64_t>(), iv.at(1).get<int64_t>());
        }
        found = true;
        break;
      }
      if (found) break;
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed kind2 trace: ", e.what()));
  }
  if (!found) {
    return absl::InvalidArgumentError(
        absl::StrCat("kind2 trace has no input stream '", input, "'"));
  }
  std::sort(values.begin(), values.end());
  std::vector<int64_t> stream;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].first != static_cast<int64_t>(i)) {
      return absl::InvalidArgumentError("kind2 trace has gaps");
    }
    stream.push_back(values[i].second);
  }
  absl::StatusOr<Word> w = c2l::DecodeStream(codec, stream);
  if (!w.ok()) return w.status();
  if (w->empty()) return absl::InvalidArgumentError("kind2 trace is empty");
  v.status = Status::kCounterexample;
  v.word = *std::move(w);
  return v;
}

absl::StatusOr<Verdict> Kind2Verify(const Query& q) {
  if (absl::Status s = CheckQuery(q); !s.ok()) return s;
  auto t0 = Clock::now();
  Verdict v;
  v.backend = Backend::kKind2;
  std::optional<std::string> exe = ResolveExecutable(q.options.kind2_path);
  if (!exe) {
    v.reason = Reason::kToolMissing;
    v.note = absl::StrCat("'", q.options.kind2_path, "' not found");
    return v;
  }
  if (q.options.timeout_s <= 0) {
    v.reason = Reason::kTimeout;
    v.note = "timeout is 0";
    return v;
  }
  absl::StatusOr<c2l::TranslationUnit> unit = c2l::BuildUnit(
      q.kind, q.first, q.second ? &*q.second : nullptr);
  if (!unit.ok()) return unit.status();

  TempDir dir;
  dir.keep = q.options.keep_files;
  if (absl::Status s = MakeTempDir(dir); !s.ok()) return s;
  fs::path lus = dir.path / "query.lus";
  fs::path out = dir.path / "kind2.json";
  fs::path err = dir.path / "kind2.err";
  if (absl::Status s = WriteAll(lus, c2l::EmitLustre(*unit)); !s.ok()) return s;
  if (absl::Status s = WriteAll(dir.path / "query.json", c2l::EmitSidecar(*unit));
      !s.ok()) {
    return s;
  }

  std::vector<std::string> argv = {*exe, "-json", "--timeout",
                                   FormatDouble(q.options.timeout_s)};
  argv.insert(argv.end(), q.options.kind2_args.begin(),
              q.options.kind2_args.end());
  argv.push_back(lus.string());
  absl::StatusOr<RunResult> run =
      RunProcess(argv, out, err, q.options.timeout_s);
  if (!run.ok()) return run.status();
  v.seconds = Since(t0);
  if (dir.keep) v.note = absl::StrCat("files kept in ", dir.path.string());
  if (run->timed_out) {
    v.reason = Reason::kTimeout;
    return v;
  }
  absl::StatusOr<std::string> output = ReadAll(out);
  if (!output.ok()) return output.status();
  absl::StatusOr<Verdict> parsed = ParseKind2Output(
      *output, unit->node.property_name, unit->codec, unit->node.input);
  if (!parsed.ok()) {
    v.reason = Reason::kToolError;
    v.trace = *output;
    absl::StatusOr<std::string> stderr_text = ReadAll(err);
    v.note = absl::StrCat(parsed.status().message(), " (exit ",
                          run->exit_status, ")");
    if (stderr_text.ok() && !stderr_text->empty()) {
      absl::StrAppend(&v.note, ": ", stderr_text->substr(0, 400));
    }
    return v;
  }
  parsed->seconds = v.seconds;
  if (!v.note.empty()) parsed->note = absl::StrCat(parsed->note, "; ", v.note);
  if (!parsed->refuted()) return *parsed;
  absl::StatusOr<bool> genuine = Refutes(q, parsed->word);
  if (!genuine.ok()) return genuine.status();
  if (!*genuine) {
    Verdict bad = *parsed;
    bad.status = Status::kUnknown;
    bad.reason = Reason::kInvalidTrace;
    bad.note = absl::StrCat("decoded word ",
                            FormatWord(q.first.alphabet, parsed->word),
                            " does not refute the property");
    bad.word.clear();
    return bad;
  }
  return *parsed;
}

absl::StatusOr<Verdict> Verify(const Query& q) {
  switch (q.options.backend) {
    case Backend::kInternal: return BoundedVerify(q);
    case Backend::kLustre: return LustreVerify(q);
    case Backend::kKind2: return Kind2Verify(q);
  }
  return absl::InvalidArgumentError("bad backend");
}

absl::StatusOr<CrossReport> CrossValidate(const Query& q, int bound) {
  Query bq = q;
  bq.options.bound = bound;
  CrossReport r;
  absl::StatusOr<Verdict> internal = BoundedVerify(bq);
  if (!internal.ok()) return internal.status();
  r.internal = *internal;
  bool external = ResolveExecutable(q.options.kind2_path).has_value();
  absl::StatusOr<Verdict> other = external ? Kind2Verify(bq) : LustreVerify(bq);
  if (!other.ok()) return other.status();
  r.other = *other;

  std::vector<std::string> problems;
  const Verdict& a = r.internal;
  const Verdict& b = r.other;
  if (b.valid() && a.refuted()) {
    problems.push_back("external proof contradicts an internal counterexample");
  }
  if (b.reason == Reason::kInvalidTrace) {
    problems.push_back("external trace does not decode to a counterexample");
  }
  if (b.refuted() && !a.refuted() && a.reason == Reason::kBoundExhausted &&
      static_cast<int>(b.word.size()) <= bound) {
    problems.push_back("external counterexample within the bound was missed");
  }
  if (b.backend == Backend::kLustre &&
      (a.status != b.status || a.word != b.word)) {
    // Same enumeration order on both sides, so the shortest words must match.
    problems.push_back("translated node and interpreter disagree");
  }
  if (problems.empty()) return r;

  r.agree = false;
  std::string alpha_word = [&] {
    std::vector<std::string> ws;
    if (a.refuted()) ws.push_back("internal " + FormatWord(q.first.alphabet, a.word));
    if (b.refuted()) ws.push_back("other " + FormatWord(q.first.alphabet, b.word));
    return absl::StrJoin(ws, ", ");
  }();
  absl::StrAppend(&r.diagnostic, absl::StrJoin(problems, "; "), "\n",
                  "words: ", alpha_word, "\n");
  absl::StatusOr<c2l::TranslationUnit> unit = c2l::BuildUnit(
      q.kind, q.first, q.second ? &*q.second : nullptr);
  if (unit.ok()) {
    absl::StrAppend(&r.diagnostic, "--- lustre\n", c2l::EmitLustre(*unit));
  }
  if (!b.trace.empty()) {
    absl::StrAppend(&r.diagnostic, "--- trace\n", b.trace, "\n");
  }
  return r;
}

std::string VerdictJson(const Query& q, const Verdict& v) {
  json j = json::object();
  j["status"] = ToString(v.status);
  j["kind"] = c2l::ToString(q.kind);
  j["backend"] = ToString(v.backend);
  if (v.refuted()) {
    j["word"] = FormatWord(q.first.alphabet, v.word);
    j["length"] = v.word.size();
  }
  if (v.reason != Reason::kNone) j["reason"] = ToString(v.reason);
  if (v.bound > 0) j["bound"] = v.bound;
  if (v.words_checked > 0) j["words_checked"] = v.words_checked;
  j["seconds"] = v.seconds;
  if (!v.note.empty()) j["note"] = v.note;
  return j.dump();
}

int ExitCode(const Verdict& v) {
  switch (v.status) {
    case Status::kValid: return 0;
    case Status::kCounterexample: return 1;
    case Status::kUnknown: return 3;
  }
  return 3;
}

}  // namespace crasp::verifier
