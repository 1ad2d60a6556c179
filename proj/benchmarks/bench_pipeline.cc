// Copyright 2026 The dsqlt Authors
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

// Throughput of each pipeline stage on Example 5 repeated N times.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "dsqlt/analyzer.h"
#include "dsqlt/emitter.h"
#include "dsqlt/lexer.h"
#include "dsqlt/parser.h"

namespace {

std::string scaled_script(int copies) {
  std::ifstream in(DSQLT_BENCH_EXAMPLE, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  std::string out;
  for (int i = 0; i < copies; ++i) out += s.str() + "\n";
  return out;
}

void BM_Preprocess(benchmark::State& state) {
  const dsqlt::RawSource src{scaled_script(static_cast<int>(state.range(0))), "bench"};
  for (auto _ : state) benchmark::DoNotOptimize(dsqlt::preprocess(src));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(src.text.size()));
}

void BM_Parse(benchmark::State& state) {
  const std::string text = scaled_script(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dsqlt::parse_text(text, "bench"));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}

void BM_Compile(benchmark::State& state) {
  const std::string text = scaled_script(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dsqlt::compile(text, "bench"));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}

void BM_Emit(benchmark::State& state) {
  const dsqlt::CompileResult r =
      dsqlt::compile(scaled_script(static_cast<int>(state.range(0))), "bench");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsqlt::emit_script(r.script, dsqlt::Dialect::oracle()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(r.script.block_count()));
}

void BM_CanonicalText(benchmark::State& state) {
  const dsqlt::CompileResult r =
      dsqlt::compile(scaled_script(static_cast<int>(state.range(0))), "bench");
  for (auto _ : state) benchmark::DoNotOptimize(dsqlt::emit_script_text(r.script));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(r.script.block_count()));
}

BENCHMARK(BM_Preprocess)->Range(1, 256);
BENCHMARK(BM_Parse)->Range(1, 256);
BENCHMARK(BM_Compile)->Range(1, 256);
BENCHMARK(BM_Emit)->Range(1, 256);
BENCHMARK(BM_CanonicalText)->Range(1, 256);

}  // namespace

BENCHMARK_MAIN();
