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

#ifndef CRASP_SYNTH_ANNEAL_H_
#define CRASP_SYNTH_ANNEAL_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/core/dataset.h"
#include "crasp/core/rng.h"
#include "crasp/synth/fragment.h"

namespace crasp::synth {

struct Weights {
  double mis = 1000;
  double unreach = 5;
  double size = 1;
};

absl::Status CheckWeights(const Weights& w);

struct Score {
  int mis = 0;
  int unreach = 0;
  int size = 0;
  double energy = 0;
};

double Energy(const Score& s, const Weights& w);

// Reference scoring through the interpreter.
absl::StatusOr<Score> ScoreProgram(const Program& p, const Dataset& d,
                                   const Weights& w);

struct Schedule {
  double t0 = 1.0;
  double alpha = 0.9995;
  int reheat_every = 4000;  // 0 disables reheating
  double reheat = 1.2;
  int64_t budget = 100'000;
  // Early exit once mis(best) = 0, the best has not improved for
  // `stall_iters` iterations and T < stall_temp.
  int64_t stall_iters = 20'000;
  double stall_temp = 1e-3;
};

absl::Status CheckSchedule(const Schedule& s);

// Metropolis test with uniform draw r in [0, 1); Delta <= 0 always passes.
inline bool AcceptMove(double delta, double temperature, double r) {
  return delta <= 0 || r <= std::exp(-delta / temperature);
}

struct AnnealConfig {
  Shape shape;
  Weights weights;
  Schedule schedule;
  // After the first mis = 0 program: proposals with mis > 0 are rejected
  // and the size weight is multiplied by `refine_size_factor`.
  bool refine = true;
  double refine_size_factor = 10;
  int log_stride = 1000;  // 0 logs nothing
  double time_limit_s = 0;  // 0 means none
};

struct LogEntry {
  int64_t iter = 0;
  int rule = -1;
  std::string move;
  double energy = 0;  // current program after the step
  int mis = 0;
  double delta = 0;   // proposal minus current, before the step
  double temperature = 0;  // used for the acceptance test
  bool accepted = false;
  bool refining = false;
  double best_energy = 0;  // under the base weights
};

struct AnnealResult {
  Program best;        // shape-conforming, dead rules included
  Score best_score;    // under the base weights
  Program answer;      // best with unreachable rules pruned
  int64_t iterations = 0;
  int64_t first_zero_iter = -1;  // first iteration reaching mis = 0
  Score refine_start;            // best when refinement began
  std::string stop;              // "budget", "stall" or "time"
  std::vector<LogEntry> log;
  double seconds = 0;
};

absl::StatusOr<AnnealResult> Anneal(const Program& p0, const Dataset& d,
                                    const AnnealConfig& config, Rng& rng);

// Samples the initial program from `seed` and anneals.
absl::StatusOr<AnnealResult> Synthesize(const Dataset& d,
                                        const AnnealConfig& config,
                                        uint64_t seed);

struct RestartResult {
  std::vector<AnnealResult> runs;  // by seed
  int best = -1;  // lowest (mis, energy), ties to the earlier seed
};

// Independent seeded runs, in parallel across seeds.
absl::StatusOr<RestartResult> SynthesizeRestarts(
    const Dataset& d, const AnnealConfig& config,
    const std::vector<uint64_t>& seeds);

std::string LogJsonLines(const std::vector<LogEntry>& log);

// Reads the "synthesis" section of a JSON config file into `config`.
absl::Status LoadAnnealConfig(const std::string& path, AnnealConfig& config);

}  // namespace crasp::synth

#endif  // CRASP_SYNTH_ANNEAL_H_
