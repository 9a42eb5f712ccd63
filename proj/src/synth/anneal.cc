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

#include "crasp/synth/anneal.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "crasp/core/metrics.h"
#include "crasp/core/semantics.h"
#include "crasp/kernels/corpus.h"
#include "crasp/kernels/scorer.h"
#include "nlohmann/json.hpp"

namespace crasp::synth {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

}  // namespace

absl::Status CheckWeights(const Weights& w) {
  if (w.mis < 0 || w.unreach < 0 || w.size < 0) {
    return absl::InvalidArgumentError("weights must be nonnegative");
  }
  if (w.mis < 100 * (w.unreach + w.size)) {
    return absl::InvalidArgumentError(
        "mis weight must be at least 100x the structural weights");
  }
  return absl::OkStatus();
}

double Energy(const Score& s, const Weights& w) {
  return w.mis * s.mis + w.unreach * s.unreach + w.size * s.size;
}

absl::StatusOr<Score> ScoreProgram(const Program& p, const Dataset& d,
                                   const Weights& w) {
  Score s;
  for (const LabeledWord& e : d.examples) {
    absl::StatusOr<bool> a = Accepts(p, e.word);
    if (!a.ok()) return a.status();
    s.mis += *a != e.positive;
  }
  s.unreach = UnreachableRuleCount(p);
  s.size = AstSize(p);
  s.energy = Energy(s, w);
  return s;
}

absl::Status CheckSchedule(const Schedule& s) {
  if (!(s.t0 > 0)) return absl::InvalidArgumentError("T0 must be > 0");
  if (!(s.alpha > 0 && s.alpha < 1)) {
    return absl::InvalidArgumentError("alpha must be in (0, 1)");
  }
  if (s.reheat_every < 0) {
    return absl::InvalidArgumentError("reheat interval must be >= 0");
  }
  if (!(s.reheat >= 1)) return absl::InvalidArgumentError("rho must be >= 1");
  if (s.budget < 0) return absl::InvalidArgumentError("budget must be >= 0");
  return absl::OkStatus();
}

absl::StatusOr<AnnealResult> Anneal(const Program& p0, const Dataset& d,
                                    const AnnealConfig& config, Rng& rng) {
  if (absl::Status s = CheckShape(config.shape); !s.ok()) return s;
  if (absl::Status s = CheckSchedule(config.schedule); !s.ok()) return s;
  if (absl::Status s = CheckWeights(config.weights); !s.ok()) return s;
  if (absl::Status s = CheckDataset(d); !s.ok()) return s;
  if (!ConformsToShape(p0, config.shape)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "initial program does not conform to shape ", ToString(config.shape)));
  }
  if (!(p0.alphabet == d.alphabet)) {
    return absl::InvalidArgumentError("program and dataset alphabets differ");
  }
  auto t_start = Clock::now();
  const Schedule& sch = config.schedule;

  kernels::ColumnScorer scorer(kernels::Corpus::FromDataset(d));
  Weights w = config.weights;
  auto eval = [&](const Program& p) -> absl::StatusOr<Score> {
    absl::StatusOr<int> mis = scorer.Evaluate(p);
    if (!mis.ok()) return mis.status();
    Score s;
    s.mis = *mis;
    s.unreach = UnreachableRuleCount(p);
    s.size = AstSize(p);
    s.energy = Energy(s, w);
    return s;
  };

  AnnealResult result;
  Program cur = p0;
  absl::StatusOr<Score> cur_s = eval(cur);
  if (!cur_s.ok()) return cur_s.status();
  scorer.Commit();
  Program best = cur;
  Score best_s = *cur_s;
  bool refining = false;
  auto maybe_refine = [&] {
    if (!config.refine || refining || best_s.mis != 0) return;
    refining = true;
    result.refine_start = best_s;
    w.size *= config.refine_size_factor;
    cur_s->energy = Energy(*cur_s, w);
    best_s.energy = Energy(best_s, w);
  };
  if (best_s.mis == 0) result.first_zero_iter = 0;
  maybe_refine();

  double t = sch.t0;
  int64_t last_improve = 0;
  result.stop = "budget";
  int64_t i = 0;
  for (; i < sch.budget; ++i) {
    if (config.time_limit_s > 0 && (i & 255) == 0 &&
        std::chrono::duration<double>(Clock::now() - t_start).count() >
            config.time_limit_s) {
      result.stop = "time";
      break;
    }
    MutationInfo info;
    Program next = Mutate(cur, config.shape, rng, &info);
    absl::StatusOr<Score> next_s = eval(next);
    if (!next_s.ok()) return next_s.status();
    double delta = next_s->energy - cur_s->energy;
    double r = rng.UniformReal();
    bool accept = (refining && next_s->mis > 0)
                      ? false
                      : AcceptMove(delta, t, r);
    if (accept) {
      cur = std::move(next);
      cur_s = next_s;
      scorer.Commit();
    }
    bool improved = cur_s->energy < best_s.energy;
    if (improved && refining) {
      improved = cur_s->unreach <= best_s.unreach && cur_s->size <= best_s.size;
    }
    if (improved) {
      best = cur;
      best_s = *cur_s;
      last_improve = i;
      if (best_s.mis == 0 && result.first_zero_iter < 0) {
        result.first_zero_iter = i;
      }
    }
    if (config.log_stride > 0 && i % config.log_stride == 0) {
      result.log.push_back({i, info.rule, info.move, cur_s->energy,
                            cur_s->mis, delta, t, accept, refining,
                            Energy(best_s, config.weights)});
    }
    if (improved) maybe_refine();
    t *= sch.alpha;
    if (sch.reheat_every > 0 && (i + 1) % sch.reheat_every == 0) {
      t *= sch.reheat;
    }
    if (best_s.mis == 0 && i - last_improve >= sch.stall_iters &&
        t < sch.stall_temp) {
      result.stop = "stall";
      ++i;
      break;
    }
  }
  result.iterations = i;
  result.best = best;
  result.best_score = best_s;
  result.best_score.energy = Energy(best_s, config.weights);
  result.answer = PruneUnreachable(best);
  result.seconds =
      std::chrono::duration<double>(Clock::now() - t_start).count();
  return result;
}

absl::StatusOr<AnnealResult> Synthesize(const Dataset& d,
                                        const AnnealConfig& config,
                                        uint64_t seed) {
  if (absl::Status s = CheckShape(config.shape); !s.ok()) return s;
  Rng rng(seed);
  Program p0 = SampleInitial(config.shape, d.alphabet, rng);
  return Anneal(p0, d, config, rng);
}

absl::StatusOr<RestartResult> SynthesizeRestarts(
    const Dataset& d, const AnnealConfig& config,
    const std::vector<uint64_t>& seeds) {
  const int n = static_cast<int>(seeds.size());
  std::vector<absl::StatusOr<AnnealResult>> runs(n, absl::UnknownError(""));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) runs[i] = Synthesize(d, config, seeds[i]);
  RestartResult out;
  for (int i = 0; i < n; ++i) {
    if (!runs[i].ok()) return runs[i].status();
    out.runs.push_back(*std::move(runs[i]));
    const Score& s = out.runs.back().best_score;
    if (out.best < 0 ||
        std::make_pair(s.mis, s.energy) <
            std::make_pair(out.runs[out.best].best_score.mis,
                           out.runs[out.best].best_score.energy)) {
      out.best = i;
    }
  }
  return out;
}

std::string LogJsonLines(const std::vector<LogEntry>& log) {
  std::string out;
  for (const LogEntry& e : log) {
    json j = {{"iter", e.iter},
              {"rule", e.rule},
              {"move", e.move},
              {"energy", e.energy},
              {"mis", e.mis},
              {"delta", e.delta},
              {"temperature", e.temperature},
              {"accepted", e.accepted},
              {"refining", e.refining},
              {"best_energy", e.best_energy}};
    absl::StrAppend(&out, j.dump(), "\n");
  }
  return out;
}

absl::Status LoadAnnealConfig(const std::string& path, AnnealConfig& config) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path));
  std::stringstream ss;
  ss << in.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": not a JSON object"));
  }
  if (!j.contains("synthesis")) return absl::OkStatus();
  Schedule& s = config.schedule;
  try {
    for (const auto& [key, v] : j["synthesis"].items()) {
      if (key == "shape") {
        absl::StatusOr<Shape> shape = ParseShape(v.get<std::string>());
        if (!shape.ok()) return shape.status();
        config.shape = *shape;
      } else if (key == "lambda_mis") {
        config.weights.mis = v.get<double>();
      } else if (key == "lambda_unreach") {
        config.weights.unreach = v.get<double>();
      } else if (key == "lambda_size") {
        config.weights.size = v.get<double>();
      } else if (key == "t0") {
        s.t0 = v.get<double>();
      } else if (key == "alpha") {
        s.alpha = v.get<double>();
      } else if (key == "reheat_every") {
        s.reheat_every = v.get<int>();
      } else if (key == "reheat") {
        s.reheat = v.get<double>();
      } else if (key == "budget") {
        s.budget = v.get<int64_t>();
      } else if (key == "stall_iters") {
        s.stall_iters = v.get<int64_t>();
      } else if (key == "stall_temp") {
        s.stall_temp = v.get<double>();
      } else if (key == "refine") {
        config.refine = v.get<bool>();
      } else if (key == "refine_size_factor") {
        config.refine_size_factor = v.get<double>();
      } else if (key == "log_stride") {
        config.log_stride = v.get<int>();
      } else if (key == "time_limit") {
        config.time_limit_s = v.get<double>();
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": unknown synthesis key '", key, "'"));
      }
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
  }
  if (absl::Status st = CheckSchedule(s); !st.ok()) return st;
  return CheckWeights(config.weights);
}

}  // namespace crasp::synth
