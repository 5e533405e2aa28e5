// Copyright 2026 The dialforge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP build and labeling on the toy knowledge base.

#include <benchmark/benchmark.h>

#include <filesystem>

#include "dialforge/corpus.hpp"
#include "dialforge/validity.hpp"

using namespace dialforge;

namespace {

struct Setup {
  KnowledgeBase kb;
  ValidityMatrix vm;
  std::vector<Dialog> corpus;
  std::vector<TransformedDialog> dataset;
};

const Setup& setup() {
  static const Setup s = [] {
    Setup x;
    x.kb = KnowledgeBase::load_directory(std::filesystem::path(DIALFORGE_SOURCE_DIR) / "data" / "toy_kb");
    x.vm = ValidityMatrix::build(x.kb);
    x.corpus = synthetic_corpus(x.kb, {1, 2, 4, 8}, 50, 7);
    BuildOptions opt;
    opt.global_seed = 7;
    x.dataset = build_dataset_serial(x.corpus, x.kb, x.vm, opt).dataset;
    return x;
  }();
  return s;
}

void BM_BuildSerial(benchmark::State& st) {
  const Setup& s = setup();
  BuildOptions opt;
  opt.global_seed = 7;
  for (auto _ : st) benchmark::DoNotOptimize(build_dataset_serial(s.corpus, s.kb, s.vm, opt));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(s.corpus.size()));
}

void BM_BuildParallel(benchmark::State& st) {
  const Setup& s = setup();
  BuildOptions opt;
  opt.global_seed = 7;
  for (auto _ : st) benchmark::DoNotOptimize(build_dataset_parallel(s.corpus, s.kb, s.vm, opt));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(s.corpus.size()));
}

void BM_LabelSerial(benchmark::State& st) {
  const Setup& s = setup();
  for (auto _ : st) benchmark::DoNotOptimize(label_serial(s.dataset, s.vm));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(s.dataset.size()));
}

void BM_LabelParallel(benchmark::State& st) {
  const Setup& s = setup();
  for (auto _ : st) benchmark::DoNotOptimize(label_parallel(s.dataset, s.vm));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(s.dataset.size()));
}

}  // namespace

BENCHMARK(BM_BuildSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LabelSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
