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

#include <random>

#include <benchmark/benchmark.h>

#include "bhw/cover.hpp"
#include "bhw/io.hpp"

namespace {

bhw::VertexSet prefix(const bhw::Hypergraph& h, std::size_t size) {
  bhw::VertexSet out;
  for (bhw::VertexId v = 0; v < size && v < h.num_vertices(); ++v) out.push_back(v);
  return out;
}

void BM_EdgeCoverNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, 2 * n, 3, 42);
  const auto s = prefix(h, n);
  for (auto _ : state) benchmark::DoNotOptimize(bhw::edge_cover_number(h, s));
}
BENCHMARK(BM_EdgeCoverNumber)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_FractionalCoverNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, 2 * n, 3, 42);
  const auto s = prefix(h, n);
  for (auto _ : state) benchmark::DoNotOptimize(bhw::fractional_cover_number(h, s));
}
BENCHMARK(BM_FractionalCoverNumber)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_IsCoverAtMost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = bhw::generate_random(n, 2 * n, 3, 7);
  const auto s = prefix(h, n);
  const auto rho = bhw::edge_cover_number(h, s).size;
  for (auto _ : state) benchmark::DoNotOptimize(bhw::is_cover_at_most(h, s, rho - 1));
}
BENCHMARK(BM_IsCoverAtMost)->Arg(8)->Arg(16)->Arg(24);

}  // namespace
