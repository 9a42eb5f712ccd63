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

// Command line front end.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "crasp/benchlang/languages.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/c2l/emit.h"
#include "crasp/c2l/translate.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"
#include "crasp/lustre/eval.h"
#include "crasp/lustre/text.h"
#include "crasp/synth/anneal.h"
#include "crasp/text/samples.h"
#include "crasp/text/syntax.h"
#include "crasp/verifier/verifier.h"
#include "crasp/workflows/workflows.h"

namespace crasp {
namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;
constexpr int kError = 4;

int Fail(const absl::Status& s) {
  std::cerr << "error: " << s.message() << "\n";
  return absl::IsInvalidArgument(s) || absl::IsNotFound(s) ? kUsage : kError;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out << text;
  return absl::OkStatus();
}

absl::StatusOr<Program> LoadProgram(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Program> p = ParseProgram(*text);
  if (!p.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", p.status().message()));
  }
  if (absl::Status s = ValidateProgram(*p); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", s.message()));
  }
  return p;
}

// A catalog name samples a fresh dataset; anything else is a .samples file
// over `alphabet`.
absl::StatusOr<Dataset> LoadDataset(const std::string& source,
                                    const Alphabet* alphabet,
                                    const benchlang::SamplerConfig& sc) {
  if (absl::StatusOr<const benchlang::Language*> l =
          benchlang::FindLanguage(source);
      l.ok()) {
    absl::StatusOr<benchlang::SampleResult> r =
        benchlang::SampleDataset(**l, sc);
    if (!r.ok()) return r.status();
    for (const std::string& w : r->warnings) std::cerr << "warning: " << w << "\n";
    return r->dataset;
  }
  if (alphabet == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat(source, " is not a catalog language; pass --alphabet"));
  }
  absl::StatusOr<std::string> text = ReadFile(source);
  if (!text.ok()) return text.status();
  return ParseDataset(*alphabet, *text);
}

absl::StatusOr<Alphabet> ParseAlphabetFlag(const std::string& flag) {
  std::vector<std::string> symbols = absl::StrSplit(flag, ',');
  return Alphabet::Create(symbols);
}

// Shared by commands that take the JSON config file.
struct Common {
  std::string config;
  std::string backend;
  int bound = -1;
  double timeout = -1;
  std::string kind2;

  absl::StatusOr<verifier::Options> Verifier() const {
    absl::StatusOr<verifier::Options> o = verifier::LoadOptions(config);
    if (!o.ok()) return o.status();
    if (!backend.empty()) {
      absl::StatusOr<verifier::Backend> b = verifier::ParseBackend(backend);
      if (!b.ok()) return b.status();
      o->backend = *b;
    }
    if (bound >= 0) o->bound = bound;
    if (timeout >= 0) o->timeout_s = timeout;
    if (!kind2.empty()) o->kind2_path = kind2;
    return o;
  }

  absl::StatusOr<synth::AnnealConfig> Anneal() const {
    synth::AnnealConfig c;
    if (!config.empty()) {
      if (absl::Status s = synth::LoadAnnealConfig(config, c); !s.ok()) return s;
    }
    return c;
  }

  void AddVerifierFlags(CLI::App* app) {
    app->add_option("--backend", backend, "internal | lustre | kind2");
    app->add_option("--bound", bound, "enumeration bound L");
    app->add_option("--timeout", timeout, "seconds per external query");
    app->add_option("--kind2", kind2, "kind2 executable");
  }
};

void Table(const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size(), 0);
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t c = 0; c < r.size(); ++c) {
      std::string cell = r[c];
      cell.resize(width[c], ' ');
      std::cout << (c ? " " : "") << cell;
    }
    std::cout << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

int Eval(const std::string& prog_path, const std::string& word_text) {
  absl::StatusOr<Program> p = LoadProgram(prog_path);
  if (!p.ok()) return Fail(p.status());
  absl::StatusOr<Word> w = ParseWord(p->alphabet, word_text);
  if (!w.ok()) return Fail(w.status());
  absl::StatusOr<std::vector<std::vector<Value>>> t = RuleTable(*p, *w);
  if (!t.ok()) return Fail(t.status());
  std::vector<std::string> header = {"rule"};
  for (Symbol s : *w) header.push_back(p->alphabet.name(s));
  std::vector<std::vector<std::string>> rows;
  for (size_t r = 0; r < p->rules.size(); ++r) {
    std::vector<std::string> row = {p->rules[r].name};
    for (const Value& v : (*t)[r]) row.push_back(FormatValue(v));
    rows.push_back(std::move(row));
  }
  Table(header, rows);
  bool accepted = std::get<bool>(t->back().back());
  std::cout << (accepted ? "accepted" : "rejected") << "\n";
  return kOk;
}

int RunLustre(const std::string& lus_path, const std::string& input,
              const std::string& sidecar_path, int padding) {
  absl::StatusOr<std::string> text = ReadFile(lus_path);
  if (!text.ok()) return Fail(text.status());
  absl::StatusOr<lustre::Node> node = lustre::ParseNode(*text);
  if (!node.ok()) return Fail(node.status());
  std::vector<int64_t> stream;
  if (!sidecar_path.empty()) {
    absl::StatusOr<std::string> sc_text = ReadFile(sidecar_path);
    if (!sc_text.ok()) return Fail(sc_text.status());
    absl::StatusOr<c2l::Sidecar> sc = c2l::ParseSidecar(*sc_text);
    if (!sc.ok()) return Fail(sc.status());
    absl::StatusOr<Word> w = ParseWord(sc->codec.alphabet(), input);
    if (!w.ok()) return Fail(w.status());
    absl::StatusOr<std::vector<int64_t>> e = c2l::EncodeWord(
        sc->codec, *w, static_cast<int>(w->size()) + 1 + padding);
    if (!e.ok()) return Fail(e.status());
    stream = *e;
  } else {
    for (const std::string& part :
         std::vector<std::string>(absl::StrSplit(input, ','))) {
      int64_t v;
      if (!absl::SimpleAtoi(part, &v)) {
        return Fail(absl::InvalidArgumentError(
            absl::StrCat("bad input value '", part, "'")));
      }
      stream.push_back(v);
    }
  }
  absl::StatusOr<lustre::Trace> t = lustre::RunNode(*node, stream);
  if (!t.ok()) return Fail(t.status());
  std::vector<std::string> header = {"stream"};
  for (size_t i = 0; i < stream.size(); ++i) header.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  auto fmt = [](lustre::Sort s, int64_t v) {
    if (s == lustre::Sort::kBool) return std::string(v ? "true" : "false");
    return std::to_string(v);
  };
  std::vector<std::string> in_row = {node->input};
  for (int64_t v : stream) in_row.push_back(std::to_string(v));
  rows.push_back(in_row);
  for (size_t i = 0; i < t->names.size(); ++i) {
    std::vector<std::string> row = {t->names[i]};
    for (int64_t v : t->values[i]) row.push_back(fmt(t->sorts[i], v));
    rows.push_back(std::move(row));
  }
  bool violated = false;
  if (!t->check.empty()) {
    std::vector<std::string> row = {node->property_name};
    for (bool b : t->check) {
      row.push_back(b ? "true" : "false");
      violated |= !b;
    }
    rows.push_back(std::move(row));
  }
  Table(header, rows);
  return violated ? kRefuted : kOk;
}

int Translate(const std::string& prog_path, const std::string& kind_text,
              const std::string& against, const std::string& out,
              const std::string& sidecar) {
  absl::StatusOr<Program> p = LoadProgram(prog_path);
  if (!p.ok()) return Fail(p.status());
  absl::StatusOr<c2l::CheckKind> kind = c2l::ParseCheckKind(kind_text);
  if (!kind.ok()) return Fail(kind.status());
  std::optional<Program> second;
  if (!against.empty()) {
    absl::StatusOr<Program> q = LoadProgram(against);
    if (!q.ok()) return Fail(q.status());
    second = *q;
  }
  absl::StatusOr<c2l::TranslationUnit> unit =
      c2l::BuildUnit(*kind, *p, second ? &*second : nullptr);
  if (!unit.ok()) return Fail(unit.status());
  if (absl::Status s = WriteOutput(out, c2l::EmitLustre(*unit)); !s.ok()) {
    return Fail(s);
  }
  if (!sidecar.empty()) {
    if (absl::Status s = WriteOutput(sidecar, c2l::EmitSidecar(*unit)); !s.ok()) {
      return Fail(s);
    }
  }
  return kOk;
}

int Verify(const std::string& kind_text, const std::string& first,
           const std::string& second, const Common& common) {
  absl::StatusOr<c2l::CheckKind> kind = c2l::ParseCheckKind(kind_text);
  if (!kind.ok()) return Fail(kind.status());
  absl::StatusOr<verifier::Options> opts = common.Verifier();
  if (!opts.ok()) return Fail(opts.status());
  absl::StatusOr<Program> p = LoadProgram(first);
  if (!p.ok()) return Fail(p.status());
  verifier::Query q{*kind, *p, std::nullopt, *opts};
  if (!second.empty()) {
    absl::StatusOr<Program> p2 = LoadProgram(second);
    if (!p2.ok()) return Fail(p2.status());
    q.second = *p2;
  }
  if (absl::Status s = verifier::CheckQuery(q); !s.ok()) return Fail(s);
  absl::StatusOr<verifier::Verdict> v = verifier::Verify(q);
  if (!v.ok()) return Fail(v.status());
  std::cout << verifier::VerdictJson(q, *v) << "\n";
  return verifier::ExitCode(*v);
}

int Catalog(bool json) {
  if (json) {
    std::cout << benchlang::CatalogJson() << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const benchlang::Language& l : benchlang::Catalog()) {
    rows.push_back({l.name, l.title, absl::StrJoin(l.symbols, ","),
                    std::to_string(l.min_length), ToString(l.expressible),
                    l.fixture ? "yes" : "no",
                    synth::ToString(workflows::DefaultShape(l.name))});
  }
  Table({"name", "title", "alphabet", "min_len", "expressible", "reference",
         "shape"},
        rows);
  return kOk;
}

}  // namespace
}  // namespace crasp

int main(int argc, char** argv) {
  using namespace crasp;
  CLI::App app{"C-RASP interpreter, translator, verifier and synthesizer"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config, "JSON config file")
      ->check(CLI::ExistingFile);

  std::string prog, prog2, word, out, kind = "universality", against, sidecar;
  std::string lus, input, source, alphabet_flag, shape_text, log_path;
  std::string lang_name, report_path;
  int padding = 1, samples = 1000, max_length = 100, seeds = 1, rounds = 30;
  int64_t budget = -1;
  uint64_t seed = 1;
  bool json = false, no_min = false, no_learn = false;
  double wf_timeout = 300;
  std::vector<std::string> languages;
  std::string suite = "table1";

  auto* eval = app.add_subcommand("eval", "per-rule values of a program on a word");
  eval->add_option("program", prog)->required();
  eval->add_option("word", word)->required();

  auto* run = app.add_subcommand("run-lustre", "run a Lustre node on an input");
  run->add_option("node", lus)->required();
  run->add_option("input", input,
                  "comma-separated codes, or a word with --sidecar")
      ->required();
  run->add_option("--sidecar", sidecar, "sidecar JSON from translate");
  run->add_option("--padding", padding, "eternity values after eos");

  auto* tr = app.add_subcommand("translate", "emit a Lustre query node");
  tr->add_option("program", prog)->required();
  tr->add_option("--check", kind, "inclusion | equality | universality | emptiness");
  tr->add_option("--against", against, "second program for binary checks");
  tr->add_option("-o,--output", out, "output .lus (default stdout)");
  tr->add_option("--sidecar", sidecar, "write the JSON sidecar here");

  auto* ver = app.add_subcommand("verify", "check a property");
  ver->add_option("kind", kind)->required();
  ver->add_option("program", prog)->required();
  ver->add_option("program2", prog2);
  common.AddVerifierFlags(ver);

  auto* syn = app.add_subcommand("synth", "synthesize a program from examples");
  syn->add_option("source", source, "catalog language or .samples file")->required();
  syn->add_option("--alphabet", alphabet_flag, "symbols of a .samples file, e.g. a,b");
  syn->add_option("--shape", shape_text, "Nb,Nc,K");
  syn->add_option("--seed", seed);
  syn->add_option("--seeds", seeds, "restarts from seed, seed+1, ...");
  syn->add_option("--budget", budget);
  syn->add_option("--samples", samples);
  syn->add_option("--max-length", max_length);
  syn->add_option("--log", log_path, "JSON-lines run log");
  syn->add_option("-o,--output", out);

  auto* mini = app.add_subcommand("minimize", "find a smaller equivalent program");
  mini->add_option("program", prog)->required();
  mini->add_option("--lang", lang_name, "sample words with this catalog language");
  mini->add_option("--seed", seed);
  mini->add_option("--rounds", rounds);
  mini->add_option("--time-limit", wf_timeout, "overall seconds");
  mini->add_option("--samples", samples)->default_val(400);
  mini->add_option("--report", report_path, "write the refinement run as JSON");
  mini->add_option("-o,--output", out);
  common.AddVerifierFlags(mini);

  auto* learn = app.add_subcommand("learn", "fit examples inside a specification");
  learn->add_option("dataset", source, "catalog language or .samples file")->required();
  learn->add_option("spec", prog)->required();
  learn->add_option("--shape", shape_text, "Nb,Nc,K");
  learn->add_option("--seed", seed);
  learn->add_option("--rounds", rounds);
  learn->add_option("--time-limit", wf_timeout, "overall seconds");
  learn->add_option("--samples", samples);
  learn->add_option("--report", report_path, "write the refinement run as JSON");
  learn->add_option("-o,--output", out);
  common.AddVerifierFlags(learn);

  auto* bench = app.add_subcommand("bench", "benchmark report");
  bench->add_option("--suite", suite)->check(CLI::IsMember({"table1"}));
  bench->add_option("--seeds", seeds)->default_val(5);
  bench->add_option("--languages", languages, "subset of the catalog");
  bench->add_option("--time-limit", wf_timeout, "seconds per task");
  bench->add_option("--samples", samples);
  bench->add_option("--seed", seed);
  bench->add_flag("--no-minimize", no_min);
  bench->add_flag("--no-learn", no_learn);
  bench->add_option("--json", report_path, "write the JSON report here");
  common.AddVerifierFlags(bench);

  auto* cat = app.add_subcommand("catalog", "list benchmark languages");
  cat->add_flag("--json", json);

  auto* samp = app.add_subcommand("sample", "write a balanced .samples dataset");
  samp->add_option("language", lang_name)->required();
  samp->add_option("--count", samples);
  samp->add_option("--max-length", max_length);
  samp->add_option("--seed", seed);
  samp->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (eval->parsed()) return Eval(prog, word);
  if (run->parsed()) return RunLustre(lus, input, sidecar, padding);
  if (tr->parsed()) return Translate(prog, kind, against, out, sidecar);
  if (ver->parsed()) return Verify(kind, prog, prog2, common);
  if (cat->parsed()) return Catalog(json);

  if (samp->parsed()) {
    absl::StatusOr<const benchlang::Language*> l = benchlang::FindLanguage(lang_name);
    if (!l.ok()) return Fail(l.status());
    benchlang::SamplerConfig sc{samples, 0, max_length, seed};
    absl::StatusOr<benchlang::SampleResult> r = benchlang::SampleDataset(**l, sc);
    if (!r.ok()) return Fail(r.status());
    for (const std::string& w : r->warnings) std::cerr << "warning: " << w << "\n";
    if (absl::Status s = WriteOutput(out, PrintDataset(r->dataset)); !s.ok()) {
      return Fail(s);
    }
    return kOk;
  }

  absl::StatusOr<synth::AnnealConfig> anneal = common.Anneal();
  if (!anneal.ok()) return Fail(anneal.status());
  if (budget >= 0) anneal->schedule.budget = budget;
  if (!shape_text.empty()) {
    absl::StatusOr<synth::Shape> s = synth::ParseShape(shape_text);
    if (!s.ok()) return Fail(s.status());
    anneal->shape = *s;
  }

  if (syn->parsed()) {
    std::optional<Alphabet> alphabet;
    if (!alphabet_flag.empty()) {
      absl::StatusOr<Alphabet> a = ParseAlphabetFlag(alphabet_flag);
      if (!a.ok()) return Fail(a.status());
      alphabet = *a;
    }
    benchlang::SamplerConfig sc{samples, 0, max_length, seed};
    absl::StatusOr<Dataset> d = LoadDataset(source, alphabet ? &*alphabet : nullptr, sc);
    if (!d.ok()) return Fail(d.status());
    if (shape_text.empty() && benchlang::FindLanguage(source).ok()) {
      anneal->shape = workflows::DefaultShape(source);
    }
    if (!log_path.empty() && anneal->log_stride <= 0) anneal->log_stride = 1;
    std::vector<uint64_t> seed_list;
    for (int i = 0; i < std::max(1, seeds); ++i) seed_list.push_back(seed + i);
    absl::StatusOr<synth::RestartResult> r =
        synth::SynthesizeRestarts(*d, *anneal, seed_list);
    if (!r.ok()) return Fail(r.status());
    const synth::AnnealResult& best = r->runs[r->best];
    for (size_t i = 0; i < r->runs.size(); ++i) {
      const synth::AnnealResult& x = r->runs[i];
      std::cerr << "seed " << seed_list[i] << ": mis=" << x.best_score.mis
                << " size=" << x.best_score.size << " iterations=" << x.iterations
                << " stop=" << x.stop << " seconds=" << x.seconds << "\n";
    }
    if (!log_path.empty()) {
      if (absl::Status s = WriteOutput(log_path, synth::LogJsonLines(best.log));
          !s.ok()) {
        return Fail(s);
      }
    }
    if (absl::Status s = WriteOutput(out, PrintProgram(best.answer)); !s.ok()) {
      return Fail(s);
    }
    return best.best_score.mis == 0 ? kOk : kUnknown;
  }

  absl::StatusOr<verifier::Options> vopts = common.Verifier();
  if (!vopts.ok()) return Fail(vopts.status());
  if (common.backend.empty() && vopts->backend == verifier::Backend::kInternal) {
    vopts->backend = verifier::Backend::kKind2;  // falls back when absent
  }

  if (mini->parsed()) {
    absl::StatusOr<Program> spec = LoadProgram(prog);
    if (!spec.ok()) return Fail(spec.status());
    workflows::MinimizeOptions mo;
    mo.anneal = *anneal;
    mo.verify = *vopts;
    mo.max_rounds = rounds;
    mo.timeout_s = wf_timeout;
    mo.seed = seed;
    mo.samples = samples;
    if (!lang_name.empty()) {
      absl::StatusOr<const benchlang::Language*> l = benchlang::FindLanguage(lang_name);
      if (!l.ok()) return Fail(l.status());
      mo.language = *l;
    }
    absl::StatusOr<workflows::MinimizeResult> r = workflows::Minimize(*spec, mo);
    if (!r.ok()) return Fail(r.status());
    std::cerr << "rounds=" << r->run.rounds.size()
              << " termination=" << workflows::ToString(r->run.termination)
              << " confidence=" << workflows::ToString(r->run.confidence)
              << " size " << AstSize(*spec) << " -> " << AstSize(r->program) << "\n";
    if (!r->run.note.empty()) std::cerr << r->run.note << "\n";
    if (!report_path.empty()) {
      if (absl::Status s = WriteOutput(report_path, workflows::RunJson(r->run) + "\n");
          !s.ok()) {
        return Fail(s);
      }
    }
    if (absl::Status s = WriteOutput(out, PrintProgram(r->program)); !s.ok()) {
      return Fail(s);
    }
    return r->run.confidence == workflows::Confidence::kNone ? kUnknown : kOk;
  }

  if (learn->parsed()) {
    absl::StatusOr<Program> spec = LoadProgram(prog);
    if (!spec.ok()) return Fail(spec.status());
    benchlang::SamplerConfig sc{samples, 0, max_length, seed};
    absl::StatusOr<Dataset> d = LoadDataset(source, &spec->alphabet, sc);
    if (!d.ok()) return Fail(d.status());
    if (shape_text.empty() && benchlang::FindLanguage(source).ok()) {
      anneal->shape = workflows::DefaultShape(source);
    }
    workflows::LoopOptions lo;
    lo.anneal = *anneal;
    lo.verify = *vopts;
    lo.max_rounds = rounds;
    lo.timeout_s = wf_timeout;
    lo.seed = seed;
    absl::StatusOr<workflows::LearnResult> r = workflows::LearnConstrained(*d, *spec, lo);
    if (!r.ok()) return Fail(r.status());
    std::cerr << "rounds=" << r->run.rounds.size()
              << " termination=" << workflows::ToString(r->run.termination)
              << " confidence=" << workflows::ToString(r->run.confidence) << "\n";
    if (!report_path.empty()) {
      if (absl::Status s = WriteOutput(report_path, workflows::RunJson(r->run) + "\n");
          !s.ok()) {
        return Fail(s);
      }
    }
    if (absl::Status s = WriteOutput(out, PrintProgram(r->program)); !s.ok()) {
      return Fail(s);
    }
    return r->run.termination == workflows::Termination::kVerified ? kOk : kUnknown;
  }

  if (bench->parsed()) {
    workflows::BenchOptions bo;
    bo.languages = languages;
    bo.seeds = seeds;
    bo.samples = samples;
    bo.timeout_s = wf_timeout;
    bo.minimize = !no_min;
    bo.learn = !no_learn;
    bo.anneal = *anneal;
    bo.verify = *vopts;
    bo.seed = seed;
    absl::StatusOr<std::vector<workflows::BenchRow>> rows = workflows::RunBench(bo);
    if (!rows.ok()) return Fail(rows.status());
    std::cout << workflows::BenchTable(*rows);
    if (!report_path.empty()) {
      if (absl::Status s = WriteOutput(report_path, workflows::BenchJson(*rows) + "\n");
          !s.ok()) {
        return Fail(s);
      }
    }
    return kOk;
  }
  return kUsage;
}
