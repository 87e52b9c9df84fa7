/*
 *   Copyright 2026 The bhw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "bhw/io.hpp"
#include "bhw/oracle.hpp"

namespace {

void BM_ExactGhw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, 2 * n, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bhw::exact_ghw(h));
}
BENCHMARK(BM_ExactGhw)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExactFhw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, 2 * n, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bhw::exact_fhw(h));
}
BENCHMARK(BM_ExactFhw)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
