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

#include <numeric>
#include <random>

#include "bhw/errors.hpp"
#include "bhw/io.hpp"

namespace bhw {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo on
// the engine output is the same everywhere.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Hypergraph generate_random(std::size_t n, std::size_t m, std::size_t rank, std::uint64_t seed) {
  if (n < 2) throw DomainError("generator needs n >= 2");
  if (m < 1) throw DomainError("generator needs m >= 1");
  if (rank < 2) throw DomainError("generator needs rank >= 2");
  if (rank > n) throw DomainError("rank cannot exceed the number of vertices");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = 2 + draw(rng, rank - 1);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + draw(rng, n - j)]);
    edges.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : edges) {
    for (std::size_t v : e) parent[find_root(parent, v)] = find_root(parent, e.front());
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find_root(parent, v);
    if (group_of[r] == n) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(v);
  }
  for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
    const auto& a = groups[g];
    const auto& b = groups[g + 1];
    edges.push_back({a[draw(rng, a.size())], b[draw(rng, b.size())]});
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<std::string> members;
    for (std::size_t v : edges[i]) members.push_back("v" + std::to_string(v + 1));
    list.emplace_back("e" + std::to_string(i + 1), std::move(members));
  }
  return Hypergraph::from_edge_list(list);
}

}  // namespace bhw
