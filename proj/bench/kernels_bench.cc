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

// Serial reference vs OpenMP kernels. Thread count comes from the benchmark
// argument; 0 means the serial reference.

#include <omp.h>

#include "benchmark/benchmark.h"
#include "crasp/benchlang/languages.h"
#include "crasp/benchlang/sampler.h"
#include "crasp/c2l/translate.h"
#include "crasp/kernels/compiled_program.h"
#include "crasp/kernels/corpus.h"
#include "crasp/kernels/search.h"

namespace crasp {
namespace {

const Program& Dyck() {
  static const Program p =
      *benchlang::ReferenceProgram(**benchlang::FindLanguage("dyck1"));
  return p;
}

const Dataset& Data() {
  static const Dataset d = [] {
    benchlang::SamplerConfig sc;
    sc.count = 1000;
    sc.max_length = 100;
    return benchlang::SampleDataset(**benchlang::FindLanguage("dyck1"), sc)
        ->dataset;
  }();
  return d;
}

void BM_Misclassified(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const Dataset& d = Data();
  kernels::CompiledProgram c = *kernels::CompiledProgram::Compile(Dyck());
  kernels::Corpus corpus = kernels::Corpus::FromDataset(d);
  if (threads > 0) omp_set_num_threads(threads);
  for (auto _ : state) {
    int mis = threads == 0 ? *kernels::serial::Misclassified(Dyck(), d)
                           : *kernels::Misclassified(c, corpus);
    benchmark::DoNotOptimize(mis);
  }
  state.SetItemsProcessed(state.iterations() * d.size());
}
BENCHMARK(BM_Misclassified)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_BoundedEquality(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const int len = 12;
  kernels::CompiledProgram c = *kernels::CompiledProgram::Compile(Dyck());
  if (threads > 0) omp_set_num_threads(threads);
  for (auto _ : state) {
    auto w = threads == 0
                 ? *kernels::serial::FindCounterexample(
                       kernels::Property::kEquality, Dyck(), &Dyck(), len)
                 : *kernels::FindCounterexample(kernels::Property::kEquality, c,
                                                &c, len);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_BoundedEquality)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_LustreUniversality(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const int len = 12;
  // Universality holds for a constant-true acceptor, so the whole word tree
  // is explored; the other rules still run at every position.
  Program top = Dyck();
  top.rules.back().body = True();
  auto unit = *c2l::BuildUnit(c2l::CheckKind::kUniversality, top, nullptr);
  if (threads > 0) omp_set_num_threads(threads);
  for (auto _ : state) {
    auto w = threads == 0
                 ? *kernels::serial::FindLustreCounterexample(
                       unit.node, 2, unit.codec.eos(), len)
                 : *kernels::FindLustreCounterexample(unit.node, 2,
                                                      unit.codec.eos(), len);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_LustreUniversality)->Arg(0)->Arg(1)->Arg(2)->Arg(4)
    ->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace crasp

BENCHMARK_MAIN();
