// Copyright 2026 The Loopforge Authors
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

#include <benchmark/benchmark.h>

#include "loopforge/audit.hpp"
#include "loopforge/classes.hpp"
#include "loopforge/classify.hpp"
#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/isomorphism.hpp"
#include "loopforge/search.hpp"
#include "loopforge/structure.hpp"

namespace lf = loopforge;

namespace {

void BM_ClassifyElements(benchmark::State& state) {
  const auto q = lf::family27(1, 2, 0, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lf::classify_elements(q));
}
BENCHMARK(BM_ClassifyElements)->Unit(benchmark::kMicrosecond);

void BM_StructureReport(benchmark::State& state) {
  const auto q = lf::cc16_loop();
  for (auto _ : state) benchmark::DoNotOptimize(lf::structure_report(q));
}
BENCHMARK(BM_StructureReport)->Unit(benchmark::kMicrosecond);

void BM_IsomorphismOrder27(benchmark::State& state) {
  const auto a = lf::family27(0, 1, 2, 0, 1);
  const auto b = lf::family27(0, 2, 1, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lf::are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismOrder27)->Unit(benchmark::kMicrosecond);

void BM_ClassifyOrder27(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lf::classify_order27());
}
BENCHMARK(BM_ClassifyOrder27)->Unit(benchmark::kMillisecond);

void BM_AuditCc16(benchmark::State& state) {
  const auto q = lf::cc16_loop();
  for (auto _ : state) benchmark::DoNotOptimize(lf::audit(q));
}
BENCHMARK(BM_AuditCc16)->Unit(benchmark::kMillisecond);

void BM_SearchAllLoops(benchmark::State& state) {
  lf::SearchSpec s;
  s.order = static_cast<int>(state.range(0));
  s.all_loops = true;
  s.up_to_iso = true;
  for (auto _ : state) benchmark::DoNotOptimize(lf::search(s));
}
BENCHMARK(BM_SearchAllLoops)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SearchOrder8Pacc(benchmark::State& state) {
  lf::SearchSpec s;
  s.order = 8;
  s.laws = {lf::Law::lcc, lf::Law::rcc, lf::Law::pa};
  s.nonassociative_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(lf::search(s));
}
BENCHMARK(BM_SearchOrder8Pacc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
