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

#include "crasp/workflows/workflows.h"

#include <algorithm>
#include <chrono>
#include <map>

#include "absl/strings/str_cat.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/core/metrics.h"
#include "crasp/core/rng.h"
#include "crasp/core/semantics.h"
#include "crasp/text/samples.h"
#include "crasp/text/syntax.h"
#include "nlohmann/json.hpp"

namespace crasp::workflows {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Maps a word over `from` onto the same symbols listed in `to`.
Word MapWord(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(*to.Find(from.name(s)));
  return out;
}

bool Decided(const verifier::Verdict& v) {
  return v.status != verifier::Status::kUnknown ||
         v.reason == verifier::Reason::kBoundExhausted;
}

Confidence ConfidenceOf(const verifier::Verdict& v) {
  return v.valid() ? Confidence::kProved : Confidence::kTentative;
}

// One annealing run, warm-started from `warm` when given.
absl::StatusOr<synth::AnnealResult> RunSynthesis(
    const Dataset& d, synth::AnnealConfig config, uint64_t seed,
    const std::optional<Program>& warm, double remaining_s) {
  config.log_stride = 0;
  if (remaining_s > 0 &&
      (config.time_limit_s <= 0 || config.time_limit_s > remaining_s)) {
    config.time_limit_s = remaining_s;
  }
  if (!warm) return synth::Synthesize(d, config, seed);
  Rng rng(seed);
  return synth::Anneal(*warm, d, config, rng);
}

void FillRound(Round& r, const Dataset& d, const synth::Shape& shape,
               uint64_t seed, const synth::AnnealResult& res) {
  r.dataset_size = d.size();
  r.shape = shape;
  r.seed = seed;
  r.candidate = res.answer;
  r.score = res.best_score;
  r.stop = res.stop;
  r.synth_s = res.seconds;
}

}  // namespace

std::string ToString(Termination t) {
  switch (t) {
    case Termination::kVerified: return "verified";
    case Termination::kRoundLimit: return "round-limit";
    case Termination::kTimeout: return "timeout";
    case Termination::kInexpressibleSuspected: return "inexpressible-suspected";
  }
  return "?";
}

std::string ToString(Confidence c) {
  switch (c) {
    case Confidence::kNone: return "none";
    case Confidence::kTentative: return "tentative";
    case Confidence::kProved: return "proved";
  }
  return "?";
}

double RefinementRun::synth_s() const {
  double s = 0;
  for (const Round& r : rounds) s += r.synth_s;
  return s;
}

double RefinementRun::verif_s() const {
  double s = 0;
  for (const Round& r : rounds) s += r.verif_s;
  return s;
}

std::vector<LabeledWord> RefinementRun::added() const {
  std::vector<LabeledWord> out;
  for (const Round& r : rounds) {
    if (r.added) out.push_back(*r.added);
  }
  return out;
}

verifier::Options ResolveVerifier(const verifier::Options& options) {
  verifier::Options o = options;
  if (o.backend == verifier::Backend::kKind2 &&
      !verifier::ResolveExecutable(o.kind2_path)) {
    o.backend = verifier::Backend::kInternal;
  }
  return o;
}

absl::StatusOr<verifier::Verdict> CheckWithFallback(const verifier::Query& q) {
  absl::StatusOr<verifier::Verdict> v = verifier::Verify(q);
  if (!v.ok() || Decided(*v) || q.options.backend == verifier::Backend::kInternal) {
    return v;
  }
  verifier::Query b = q;
  b.options.backend = verifier::Backend::kInternal;
  absl::StatusOr<verifier::Verdict> bounded = verifier::BoundedVerify(b);
  if (!bounded.ok()) return bounded.status();
  bounded->seconds += v->seconds;
  bounded->note = absl::StrCat(verifier::ToString(v->backend), " returned ",
                               verifier::ToString(v->reason),
                               "; bounded fallback");
  return bounded;
}

std::optional<synth::Shape> Shrink(const synth::Shape& s) {
  synth::Shape t = s;
  if (t.num_bool > 1) {
    --t.num_bool;
  } else if (t.num_count > 0) {
    --t.num_count;
  } else if (t.max_const > 0) {
    --t.max_const;
  } else {
    return std::nullopt;
  }
  return t;
}

synth::Shape Grow(const synth::Shape& s, const synth::Shape& limit) {
  synth::Shape t = s;
  t.num_bool = std::min(t.num_bool + 1, std::max(limit.num_bool, s.num_bool));
  t.num_count =
      std::min(t.num_count + 1, std::max(limit.num_count, s.num_count));
  t.max_const = std::max(t.max_const, limit.max_const);
  return t;
}

absl::StatusOr<Dataset> SampleForSpec(const Program& spec,
                                      const MinimizeOptions& options) {
  if (options.samples < 2) {
    return absl::InvalidArgumentError("need at least 2 samples");
  }
  Dataset d;
  d.alphabet = spec.alphabet;
  if (options.language != nullptr) {
    Alphabet la = options.language->alphabet();
    if (!la.SameSymbols(spec.alphabet)) {
      return absl::InvalidArgumentError(
          absl::StrCat("language ", options.language->name,
                       " does not share the specification's alphabet"));
    }
    benchlang::SamplerConfig sc;
    sc.count = options.samples;
    sc.max_length = options.max_length;
    sc.seed = options.seed;
    absl::StatusOr<benchlang::SampleResult> s =
        benchlang::SampleDataset(*options.language, sc);
    if (!s.ok()) return s.status();
    for (const LabeledWord& e : s->dataset.examples) {
      Word w = MapWord(e.word, la, spec.alphabet);
      absl::StatusOr<bool> a = Accepts(spec, w);
      if (!a.ok()) return a.status();
      d.Add(std::move(w), *a);
    }
    return d;
  }
  Rng rng(options.seed);
  const int half = options.samples / 2;
  std::vector<Word> pos, neg, spare;
  const int64_t attempts = int64_t{200} * options.samples;
  for (int64_t i = 0; i < attempts; ++i) {
    if (static_cast<int>(pos.size()) >= half &&
        static_cast<int>(neg.size()) >= options.samples - half) {
      break;
    }
    Word w(rng.Uniform(1, options.max_length));
    for (Symbol& s : w) s = static_cast<Symbol>(rng.Index(spec.alphabet.size()));
    absl::StatusOr<bool> a = Accepts(spec, w);
    if (!a.ok()) return a.status();
    std::vector<Word>& bucket = *a ? pos : neg;
    const int want = *a ? half : options.samples - half;
    if (static_cast<int>(bucket.size()) < want) {
      bucket.push_back(std::move(w));
    } else if (static_cast<int>(spare.size()) < options.samples) {
      spare.push_back(std::move(w));
    }
  }
  for (Word& w : pos) d.Add(std::move(w), true);
  for (Word& w : neg) d.Add(std::move(w), false);
  // Sparse labels: fill up with whatever was drawn.
  for (Word& w : spare) {
    if (d.size() >= options.samples) break;
    d.Add(w, *Accepts(spec, w));
  }
  return d;
}

absl::StatusOr<MinimizeResult> Minimize(const Program& spec,
                                        const MinimizeOptions& options) {
  if (absl::Status s = ValidateProgram(spec); !s.ok()) return s;
  if (!spec.acceptor().is_bool()) {
    return absl::InvalidArgumentError("specification must end in a Boolean rule");
  }
  auto t0 = Clock::now();
  absl::StatusOr<Dataset> sampled = SampleForSpec(spec, options);
  if (!sampled.ok()) return sampled.status();
  Dataset d = *std::move(sampled);

  const synth::Shape spec_shape = synth::ShapeOf(spec);
  synth::Shape limit = spec_shape;
  limit.num_bool = std::max(limit.num_bool, 1);
  synth::Shape shape = limit;
  shape.num_bool = std::max(1, spec_shape.num_bool - 1);
  const verifier::Options vopts = ResolveVerifier(options.verify);
  const int spec_size = AstSize(spec);

  MinimizeResult out;
  out.program = spec;
  RefinementRun& run = out.run;
  run.termination = Termination::kRoundLimit;
  std::optional<Program> best;
  int best_size = spec_size;
  std::optional<Program> warm;
  int failures = 0;
  Rng seeds(options.seed);

  for (int r = 0; r < options.max_rounds; ++r) {
    double remaining = options.timeout_s - Since(t0);
    if (options.timeout_s > 0 && remaining <= 0) {
      run.termination = Termination::kTimeout;
      break;
    }
    Round round;
    round.index = r;
    uint64_t seed = seeds.Fork();
    synth::AnnealConfig config = options.anneal;
    config.shape = shape;
    absl::StatusOr<synth::AnnealResult> res =
        RunSynthesis(d, config, seed, warm, options.timeout_s > 0 ? remaining : 0);
    if (!res.ok()) return res.status();
    FillRound(round, d, shape, seed, *res);
    warm.reset();

    if (res->best_score.mis > 0) {
      run.rounds.push_back(std::move(round));
      if (res->stop == "time") {
        run.termination = Termination::kTimeout;
        break;
      }
      if (++failures < 2) continue;
      if (best) {
        // Could not get below the last verified answer.
        run.termination = Termination::kVerified;
        break;
      }
      synth::Shape next = Grow(shape, limit);
      if (next == shape) {
        if (failures >= options.max_synth_failures) {
          run.termination = Termination::kInexpressibleSuspected;
          break;
        }
        continue;
      }
      shape = next;
      failures = 0;
      continue;
    }

    verifier::Query q{verifier::CheckKind::kEquality, res->answer, spec, vopts};
    auto tv = Clock::now();
    absl::StatusOr<verifier::Verdict> v = CheckWithFallback(q);
    round.verif_s = Since(tv);
    if (!v.ok()) return v.status();
    round.verdict = *v;

    if (v->refuted()) {
      absl::StatusOr<bool> want = Accepts(spec, v->word);
      absl::StatusOr<bool> got = Accepts(res->answer, v->word);
      if (!want.ok()) return want.status();
      if (!got.ok()) return got.status();
      if (*want == *got || Contains(d, v->word)) {
        return absl::InternalError(absl::StrCat(
            "equality counterexample '", FormatWord(spec.alphabet, v->word),
            "' does not separate candidate and specification"));
      }
      round.added = LabeledWord{v->word, *want};
      d.Add(v->word, *want);
      warm = res->best;
      run.rounds.push_back(std::move(round));
      continue;
    }
    if (!Decided(*v)) {
      run.rounds.push_back(std::move(round));
      ++failures;
      continue;
    }

    // Equivalent under the check.
    failures = 0;
    const int size = AstSize(res->answer);
    if (size < best_size || (!best && size <= spec_size)) {
      best = res->answer;
      best_size = size;
      run.confidence = ConfidenceOf(*v);
    } else if (!best) {
      run.confidence = ConfidenceOf(*v);
    }
    run.rounds.push_back(std::move(round));
    std::optional<synth::Shape> next = Shrink(synth::ShapeOf(res->answer));
    if (!next) {
      run.termination = Termination::kVerified;
      break;
    }
    shape = *next;
  }

  if (best) {
    out.program = *best;
    out.improved = best_size < spec_size;
  }
  if (!out.improved) {
    run.note = run.confidence == Confidence::kNone
                   ? "no equivalent candidate found; returning the specification"
                   : "no smaller equivalent program found; returning the "
                     "specification";
    if (!best) out.program = spec;
  }
  return out;
}

absl::StatusOr<LearnResult> LearnConstrained(const Dataset& d,
                                             const Program& spec,
                                             const LoopOptions& options) {
  if (absl::Status s = ValidateProgram(spec); !s.ok()) return s;
  if (absl::Status s = CheckDataset(d); !s.ok()) return s;
  if (!spec.alphabet.SameSymbols(d.alphabet)) {
    return absl::InvalidArgumentError(
        "dataset and specification use different symbols");
  }
  absl::StatusOr<Program> relabeled = Relabel(spec, d.alphabet);
  if (!relabeled.ok()) return relabeled.status();
  for (const LabeledWord& e : d.examples) {
    if (!e.positive) continue;
    absl::StatusOr<bool> a = Accepts(*relabeled, e.word);
    if (!a.ok()) return a.status();
    if (!*a) {
      return absl::InvalidArgumentError(absl::StrCat(
          "infeasible: positive example '", FormatWord(d.alphabet, e.word),
          "' is rejected by the specification"));
    }
  }

  auto t0 = Clock::now();
  const verifier::Options vopts = ResolveVerifier(options.verify);
  LearnResult out;
  out.dataset = d;
  RefinementRun& run = out.run;
  run.termination = Termination::kRoundLimit;
  std::optional<Program> warm;
  int failures = 0;
  Rng seeds(options.seed);
  for (int r = 0; r < options.max_rounds; ++r) {
    double remaining = options.timeout_s - Since(t0);
    if (options.timeout_s > 0 && remaining <= 0) {
      run.termination = Termination::kTimeout;
      break;
    }
    Round round;
    round.index = r;
    uint64_t seed = seeds.Fork();
    absl::StatusOr<synth::AnnealResult> res =
        RunSynthesis(out.dataset, options.anneal, seed, warm,
                     options.timeout_s > 0 ? remaining : 0);
    if (!res.ok()) return res.status();
    FillRound(round, out.dataset, options.anneal.shape, seed, *res);
    out.program = res->answer;
    warm.reset();
    if (res->best_score.mis > 0) {
      run.rounds.push_back(std::move(round));
      if (res->stop == "time") {
        run.termination = Termination::kTimeout;
        break;
      }
      if (++failures >= options.max_synth_failures) {
        run.termination = Termination::kInexpressibleSuspected;
        break;
      }
      continue;
    }
    failures = 0;
    verifier::Query q{verifier::CheckKind::kInclusion, res->answer, *relabeled,
                      vopts};
    auto tv = Clock::now();
    absl::StatusOr<verifier::Verdict> v = CheckWithFallback(q);
    round.verif_s = Since(tv);
    if (!v.ok()) return v.status();
    round.verdict = *v;
    if (v->refuted()) {
      absl::StatusOr<bool> in_spec = Accepts(*relabeled, v->word);
      absl::StatusOr<bool> in_cand = Accepts(res->answer, v->word);
      if (!in_spec.ok()) return in_spec.status();
      if (!in_cand.ok()) return in_cand.status();
      if (*in_spec || !*in_cand || Contains(out.dataset, v->word)) {
        return absl::InternalError(absl::StrCat(
            "inclusion counterexample '", FormatWord(d.alphabet, v->word),
            "' does not separate candidate and specification"));
      }
      round.added = LabeledWord{v->word, false};
      out.dataset.Add(v->word, false);
      warm = res->best;
      run.rounds.push_back(std::move(round));
      continue;
    }
    run.rounds.push_back(std::move(round));
    if (!Decided(*v)) continue;
    run.confidence = ConfidenceOf(*v);
    run.termination = Termination::kVerified;
    break;
  }
  return out;
}

synth::Shape DefaultShape(std::string_view language) {
  static const std::map<std::string, synth::Shape, std::less<>> kShapes = {
      {"tomita1", {1, 0, 0}},     {"aastar", {1, 0, 0}},
      {"majority", {1, 0, 0}},    {"existential", {1, 0, 1}},
      {"pt2", {2, 0, 0}},         {"astarbstar", {2, 0, 0}},
      {"containsab", {2, 0, 0}},  {"dyck1", {2, 1, 0}},
      {"pt3", {3, 0, 0}},         {"pt5", {5, 0, 0}},
      {"tomita2", {3, 1, 0}},     {"anbncn", {4, 2, 0}},
      {"nextargmax", {4, 2, 1}},  {"d2", {3, 2, 0}},
      {"d3", {3, 2, 0}},          {"d4", {3, 2, 0}},
  };
  auto it = kShapes.find(language);
  return it == kShapes.end() ? synth::Shape{2, 1, 1} : it->second;
}

std::string RunJson(const RefinementRun& run) {
  json rounds = json::array();
  for (const Round& r : run.rounds) {
    json j = {{"round", r.index},
              {"dataset_size", r.dataset_size},
              {"shape", synth::ToString(r.shape)},
              {"seed", r.seed},
              {"mis", r.score.mis},
              {"size", AstSize(r.candidate)},
              {"stop", r.stop},
              {"synth_s", r.synth_s},
              {"verif_s", r.verif_s},
              {"candidate", PrintProgram(r.candidate)}};
    if (r.verdict) {
      j["verdict"] = verifier::ToString(r.verdict->status);
      j["reason"] = verifier::ToString(r.verdict->reason);
      j["backend"] = verifier::ToString(r.verdict->backend);
    }
    if (r.added) {
      j["added"] = {{"word", FormatWord(r.candidate.alphabet, r.added->word)},
                    {"positive", r.added->positive}};
    }
    rounds.push_back(std::move(j));
  }
  json j = {{"termination", ToString(run.termination)},
            {"confidence", ToString(run.confidence)},
            {"rounds", rounds},
            {"synth_s", run.synth_s()},
            {"verif_s", run.verif_s()}};
  if (!run.note.empty()) j["note"] = run.note;
  return j.dump(2);
}

namespace {

LoopSummary Summarize(const RefinementRun& run, bool success) {
  LoopSummary s;
  s.ran = true;
  s.rounds = static_cast<int>(run.rounds.size());
  s.synth_s = run.synth_s();
  s.verif_s = run.verif_s();
  s.status = ToString(run.termination);
  if (run.termination == Termination::kVerified) {
    s.status = ToString(run.confidence);
  }
  s.success = success;
  return s;
}

absl::StatusOr<BenchRow> BenchOne(const benchlang::Language& lang,
                                  const BenchOptions& options) {
  BenchRow row;
  row.language = lang.name;
  row.title = lang.title;
  row.shape = DefaultShape(lang.name);
  benchlang::SamplerConfig sc;
  sc.count = options.samples;
  sc.max_length = 100;
  sc.seed = options.seed;
  absl::StatusOr<benchlang::SampleResult> train =
      benchlang::SampleDataset(lang, sc);
  if (!train.ok()) return train.status();
  row.warnings = train->warnings;
  sc.count = options.heldout;
  sc.seed = options.seed + 1000;
  absl::StatusOr<benchlang::SampleResult> held =
      benchlang::SampleDataset(lang, sc);
  if (!held.ok()) return held.status();

  synth::AnnealConfig config = options.anneal;
  config.shape = row.shape;
  config.log_stride = 0;
  auto t0 = Clock::now();
  std::optional<synth::AnnealResult> best;
  for (int s = 1; s <= options.seeds; ++s) {
    double remaining = options.timeout_s - Since(t0);
    if (options.timeout_s > 0 && remaining <= 0) break;
    if (options.timeout_s > 0) config.time_limit_s = remaining;
    absl::StatusOr<synth::AnnealResult> r =
        synth::Synthesize(train->dataset, config, options.seed + s - 1);
    if (!r.ok()) return r.status();
    if (!best || r->best_score.mis < best->best_score.mis) {
      best = *std::move(r);
      row.seed = s;
    }
    if (best->best_score.mis == 0) break;
  }
  row.seconds = Since(t0);
  if (best) {
    row.found = best->best_score.mis == 0;
    row.program = PrintProgram(best->answer);
    row.train_accuracy =
        1.0 - static_cast<double>(best->best_score.mis) / train->dataset.size();
    int wrong = 0;
    for (const LabeledWord& e : held->dataset.examples) {
      wrong += *Accepts(best->answer, e.word) != e.positive;
    }
    row.heldout_accuracy =
        1.0 - static_cast<double>(wrong) / held->dataset.size();
  }

  absl::StatusOr<Program> ref = benchlang::ReferenceProgram(lang);
  if (!ref.ok()) {
    row.minimize.status = row.learn.status = "no-reference";
    return row;
  }
  if (options.minimize) {
    MinimizeOptions mo;
    mo.anneal = options.anneal;
    mo.verify = options.verify;
    mo.timeout_s = options.timeout_s;
    mo.seed = options.seed;
    mo.language = &lang;
    absl::StatusOr<MinimizeResult> m = Minimize(*ref, mo);
    if (!m.ok()) return m.status();
    row.minimize = Summarize(m->run, m->run.confidence != Confidence::kNone);
  }
  if (options.learn) {
    LoopOptions lo;
    lo.anneal = options.anneal;
    lo.anneal.shape = row.shape;
    lo.verify = options.verify;
    lo.timeout_s = options.timeout_s;
    lo.seed = options.seed;
    absl::StatusOr<LearnResult> l = LearnConstrained(train->dataset, *ref, lo);
    if (absl::IsInvalidArgument(l.status())) {
      row.learn.ran = true;
      row.learn.status = "infeasible";
    } else if (!l.ok()) {
      return l.status();
    } else {
      row.learn = Summarize(l->run,
                            l->run.termination == Termination::kVerified);
    }
  }
  return row;
}

json LoopJson(const LoopSummary& s) {
  if (!s.ran) return {{"status", s.status.empty() ? "skipped" : s.status}};
  return {{"rounds", s.rounds},
          {"synth_s", s.synth_s},
          {"verif_s", s.verif_s},
          {"status", s.status},
          {"success", s.success}};
}

std::string Cell(bool show, double v, int precision) {
  if (!show) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace

absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchOptions& options) {
  std::vector<const benchlang::Language*> langs;
  if (options.languages.empty()) {
    for (const benchlang::Language& l : benchlang::Catalog()) {
      langs.push_back(&l);
    }
  } else {
    for (const std::string& name : options.languages) {
      absl::StatusOr<const benchlang::Language*> l =
          benchlang::FindLanguage(name);
      if (!l.ok()) return l.status();
      langs.push_back(*l);
    }
  }
  const int n = static_cast<int>(langs.size());
  std::vector<absl::StatusOr<BenchRow>> rows(n, absl::UnknownError(""));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) rows[i] = BenchOne(*langs[i], options);
  std::vector<BenchRow> out;
  for (auto& r : rows) {
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

std::string BenchJson(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const BenchRow& r : rows) {
    json j = {{"language", r.language},
              {"title", r.title},
              {"shape", synth::ToString(r.shape)},
              {"status", r.found ? "ok" : "-"},
              {"accuracy",
               {{"train", r.train_accuracy}, {"heldout", r.heldout_accuracy}}},
              {"time_s", r.seconds},
              {"seed", r.seed},
              {"program", r.program},
              {"minimize", LoopJson(r.minimize)},
              {"learn", LoopJson(r.learn)}};
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

std::string BenchTable(const std::vector<BenchRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%-16s %7s %7s %8s | %3s %8s %8s | %3s %8s %8s\n", "language",
                "train%", "held%", "time_s", "R", "synth_s", "verif_s", "R",
                "synth_s", "verif_s");
  out += buf;
  auto loop = [](const LoopSummary& s) {
    char b[64];
    if (!s.success) {
      std::snprintf(b, sizeof b, "%3s %8s %8s", "-", "-", "-");
    } else {
      std::snprintf(b, sizeof b, "%3d %8.1f %8.1f", s.rounds, s.synth_s,
                    s.verif_s);
    }
    return std::string(b);
  };
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-16s %7s %7s %8s | %s | %s\n",
                  r.title.c_str(), Cell(r.found, 100 * r.train_accuracy, 1).c_str(),
                  Cell(r.found, 100 * r.heldout_accuracy, 1).c_str(),
                  Cell(r.found, r.seconds, 2).c_str(), loop(r.minimize).c_str(),
                  loop(r.learn).c_str());
    out += buf;
  }
  return out;
}

}  // namespace crasp::workflows
