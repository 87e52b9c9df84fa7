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

#ifndef BHW_TESTS_FIXTURES_HPP
#define BHW_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bhw/hypergraph.hpp"
#include "bhw/io.hpp"

namespace bhw::fixtures {

using EdgeList = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline Hypergraph one() { return Hypergraph::from_edge_list({{"abc", {"a", "b", "c"}}}); }

inline Hypergraph tri() {
  return Hypergraph::from_edge_list({{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ca", {"a", "c"}}});
}

// Path 1 - 2 - ... - n with edges labeled "i-(i+1)".
inline Hypergraph path(int n) {
  EdgeList edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({std::to_string(i) + "-" + std::to_string(i + 1),
                     {std::to_string(i), std::to_string(i + 1)}});
  }
  return Hypergraph::from_edge_list(edges);
}

inline Hypergraph p5() { return path(5); }
inline Hypergraph p9() { return path(9); }

inline Hypergraph k44() {
  EdgeList edges;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      edges.push_back({"u" + std::to_string(i) + "v" + std::to_string(j),
                       {"u" + std::to_string(i), "v" + std::to_string(j)}});
    }
  }
  return Hypergraph::from_edge_list(edges);
}

inline Hypergraph star3() {
  return Hypergraph::from_edge_list(
      {{"cs1", {"c", "s1"}}, {"cs2", {"c", "s2"}}, {"cs3", {"c", "s3"}}});
}

inline Hypergraph two_triangles() {
  return Hypergraph::from_edge_list({{"ab", {"a", "b"}},
                                     {"bc", {"b", "c"}},
                                     {"ca", {"a", "c"}},
                                     {"xy", {"x", "y"}},
                                     {"yz", {"y", "z"}},
                                     {"zx", {"x", "z"}}});
}

inline VertexSet ids(const Hypergraph& h, const std::vector<std::string>& labels) {
  VertexSet out;
  for (const auto& l : labels) out.push_back(h.vertex_id(l));
  return normalized(std::move(out));
}

// Connected random hypergraph with n vertices, a seed-dependent number of
// edges and the given rank.
inline Hypergraph random_instance(std::size_t n, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t m = 1 + static_cast<std::size_t>(rng() % (n + 2));
  return generate_random(n, m, std::min(rank, n), seed);
}

// Like random_instance with up to 2n edges, so that wide instances are common.
inline Hypergraph dense_instance(std::size_t n, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x51ed270b27f6a1c3ULL);
  const std::size_t m = 1 + static_cast<std::size_t>(rng() % (2 * n));
  return generate_random(n, m, std::min(rank, n), seed);
}

// Uniformly random subset of V(h), possibly empty.
inline VertexSet random_subset(const Hypergraph& h, std::mt19937_64& rng) {
  VertexSet out;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (rng() & 1) out.push_back(v);
  }
  return out;
}

}  // namespace bhw::fixtures

#endif  // BHW_TESTS_FIXTURES_HPP
