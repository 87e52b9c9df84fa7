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

#include "bhw/approx.hpp"
#include "bhw/io.hpp"

namespace {

void BM_ApproxGhw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, n + n / 2, 3, 11);
  const auto mode = state.range(1) == 4 ? bhw::ApproxMode::ghw4 : bhw::ApproxMode::ghw6;
  for (auto _ : state) benchmark::DoNotOptimize(bhw::approx_entry(h, 2, mode));
}
BENCHMARK(BM_ApproxGhw)->ArgsProduct({{12, 20, 30}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_ApproxFhw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, n + n / 2, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(bhw::approx_entry(h, 2, bhw::ApproxMode::fhw));
}
BENCHMARK(BM_ApproxFhw)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ApproxThreads(benchmark::State& state) {
  const auto h = bhw::generate_random(40, 60, 3, 5);
  const bhw::ApproxOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(bhw::approx_entry(h, 2, bhw::ApproxMode::ghw4, options));
}
BENCHMARK(BM_ApproxThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
