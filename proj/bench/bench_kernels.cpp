// Copyright 2026 The Snapcode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <string>
#include <vector>

#include "snapcode/png.hpp"
#include "snapcode/reformat.hpp"
#include "snapcode/render.hpp"

namespace {

using namespace snapcode;

SourceText DenseText() {
  std::string t;
  for (int r = 0; r < 30; ++r) {
    t += std::string(static_cast<std::size_t>(r % 8) * 4, ' ');
    t += "int value" + std::to_string(r) + " = compute(alpha[i], beta) + other.get(\"key\");";
    t += "\n";
  }
  return TruncateWindow(SourceText{t}, {});
}

const GlyphAtlas& Atlas() {
  static const GlyphAtlas atlas = GlyphAtlas::Builtin();
  return atlas;
}

SnapshotImage Canvas() { return RenderCanvas(DenseText(), RenderConfig{}, Atlas()); }

void BM_ResizeReference(benchmark::State& state) {
  const SnapshotImage canvas = Canvas();
  for (auto _ : state) benchmark::DoNotOptimize(reference::ResizeBox(canvas, 512, 512));
}
BENCHMARK(BM_ResizeReference)->Unit(benchmark::kMillisecond);

void BM_ResizeParallel(benchmark::State& state) {
  const SnapshotImage canvas = Canvas();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ResizeBox(canvas, 512, 512));
  omp_set_num_threads(omp_get_num_procs());
}
BENCHMARK(BM_ResizeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RenderCanvas(benchmark::State& state) {
  const SourceText text = DenseText();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RenderCanvas(text, RenderConfig{}, Atlas()));
  omp_set_num_threads(omp_get_num_procs());
}
BENCHMARK(BM_RenderCanvas)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EncodePng(benchmark::State& state) {
  const SnapshotImage img = ResizeBox(Canvas(), 512, 512);
  for (auto _ : state) benchmark::DoNotOptimize(EncodePng(img));
}
BENCHMARK(BM_EncodePng)->Unit(benchmark::kMillisecond);

// A batch of snapshots, one per loop iteration, split over range(0) workers.
void BM_SnapshotBatch(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const SourceText text = DenseText();
  const RenderConfig cfg;
  constexpr int kBatch = 32;
  std::vector<std::vector<std::uint8_t>> out(kBatch);
  for (auto _ : state) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < kBatch; ++i) out[i] = Snapshot(text, cfg, Atlas());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * kBatch);
}
BENCHMARK(BM_SnapshotBatch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
