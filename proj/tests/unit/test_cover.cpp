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

#include <gtest/gtest.h>

#include "bhw/cover.hpp"
#include "bhw/errors.hpp"
#include "brute.hpp"
#include "fixtures.hpp"

namespace bhw {
namespace {

using fixtures::ids;

TEST(Cover, Triangle) {
  const auto h = fixtures::tri();
  const auto c = edge_cover_number(h, h.all_vertices());
  EXPECT_EQ(c.size, 2u);
  EXPECT_EQ(c.certificate.edge_labels, (std::vector<std::string>{"ab", "bc"}));
  EXPECT_TRUE(is_cover_at_most(h, ids(h, {"a", "b"}), 1));
  EXPECT_FALSE(is_cover_at_most(h, h.all_vertices(), 1));
  EXPECT_TRUE(is_cover_at_most(h, h.all_vertices(), 2));
}

TEST(Cover, EmptySet) {
  const auto h = fixtures::tri();
  const auto c = edge_cover_number(h, {});
  EXPECT_EQ(c.size, 0u);
  EXPECT_TRUE(c.certificate.edge_labels.empty());
  EXPECT_TRUE(is_cover_at_most(h, {}, 0));
  EXPECT_TRUE(is_fractional_cover_at_most(h, {}, 0));
  EXPECT_EQ(fractional_cover_number(h, {}).value, 0);
}

TEST(Cover, Path) {
  const auto h = fixtures::p5();
  EXPECT_EQ(edge_cover_number(h, h.all_vertices()).size, 3u);
  EXPECT_EQ(fractional_cover_number(h, h.all_vertices()).value, 3);
}

TEST(Cover, FractionalTriangle) {
  const auto h = fixtures::tri();
  const auto c = fractional_cover_number(h, h.all_vertices());
  EXPECT_EQ(c.value, Rational(3, 2));
  ASSERT_EQ(c.weights.weights.size(), 3u);
  for (const auto& [label, w] : c.weights.weights) EXPECT_EQ(w, Rational(1, 2)) << label;
  EXPECT_EQ(c.weights.total, Rational(3, 2));
  EXPECT_FALSE(is_fractional_cover_at_most(h, h.all_vertices(), Rational(7, 5)));
  EXPECT_TRUE(is_fractional_cover_at_most(h, h.all_vertices(), Rational(3, 2)));
  EXPECT_THROW(is_fractional_cover_at_most(h, {}, Rational(-1)), DomainError);
}

TEST(Cover, FractionalSingleEdge) {
  const auto h = fixtures::one();
  const auto c = fractional_cover_number(h, ids(h, {"a", "b"}));
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(c.weights.weights,
            (std::vector<std::pair<std::string, Rational>>{{"abc", Rational(1)}}));
}

TEST(Cover, OutOfRangeSet) {
  const auto h = fixtures::tri();
  EXPECT_THROW(edge_cover_number(h, {5}), DomainError);
  EXPECT_THROW(fractional_cover_number(h, {5}), DomainError);
}

TEST(Cover, LexicographicallyLeastCertificate) {
  // Both {e1, e3} and {e2, e3} cover; e1 sorts first.
  const auto h = Hypergraph::from_edge_list(
      {{"e2", {"a", "b"}}, {"e1", {"a", "b"}}, {"e3", {"c", "d"}}, {"e10", {"a", "c"}}});
  EXPECT_EQ(edge_cover_number(h, h.all_vertices()).certificate.edge_labels,
            (std::vector<std::string>{"e1", "e3"}));
}

TEST(Cover, Certifies) {
  const auto h = fixtures::tri();
  const auto all = h.all_vertices();
  EXPECT_TRUE(certifies(h, all, CoverCertificate{{"ab", "bc"}}));
  EXPECT_FALSE(certifies(h, all, CoverCertificate{{"ab"}}));
  EXPECT_FALSE(certifies(h, all, CoverCertificate{{"ab", "zz"}}));
  FractionalWeights half{{{"ab", Rational(1, 2)}, {"bc", Rational(1, 2)}, {"ca", Rational(1, 2)}},
                         Rational(3, 2)};
  EXPECT_TRUE(certifies(h, all, half));
  half.total = 1;
  EXPECT_FALSE(certifies(h, all, half));
  FractionalWeights heavy{{{"ab", Rational(2)}}, Rational(2)};
  EXPECT_FALSE(certifies(h, ids(h, {"a"}), heavy));
  const auto frac = as_fractional(h, CoverCertificate{{"ab", "bc"}});
  EXPECT_EQ(frac.total, 2);
  EXPECT_TRUE(certifies(h, all, frac));
}

TEST(Cover, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto h = fixtures::random_instance(3 + seed % 7, 2 + seed % 3, seed);
    if (h.num_edges() > 10) continue;
    const auto s = fixtures::random_subset(h, rng);
    const auto integral = edge_cover_number(h, s);
    const auto fractional = fractional_cover_number(h, s);
    EXPECT_EQ(integral.size, brute::rho(h, s)) << "seed " << seed;
    EXPECT_EQ(fractional.value, brute::rho_star(h, s)) << "seed " << seed;
    EXPECT_TRUE(certifies(h, s, integral.certificate));
    EXPECT_TRUE(certifies(h, s, fractional.weights));
    EXPECT_EQ(fractional.weights.total, fractional.value);
    for (std::size_t p = 0; p <= integral.size + 1; ++p) {
      EXPECT_EQ(is_cover_at_most(h, s, p), p >= integral.size);
    }
    EXPECT_TRUE(is_fractional_cover_at_most(h, s, fractional.value));
    if (fractional.value > 0) {
      EXPECT_FALSE(is_fractional_cover_at_most(h, s, fractional.value - Rational(1, 97)));
    }
  }
}

TEST(Cover, OrderingAndMonotonicity) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = fixtures::random_instance(4 + seed % 8, 3, seed);
    const auto s = fixtures::random_subset(h, rng);
    VertexSet sub;
    for (VertexId v : s) {
      if (rng() & 1) sub.push_back(v);
    }
    const auto rs = edge_cover_number(h, s).size;
    const auto fs = fractional_cover_number(h, s).value;
    EXPECT_LE(fs, Rational(static_cast<long>(rs)));
    EXPECT_LE(rs, s.size());
    EXPECT_LE(edge_cover_number(h, sub).size, rs);
    EXPECT_LE(fractional_cover_number(h, sub).value, fs);
    // |S| <= rho*(S) * rank
    EXPECT_LE(Rational(static_cast<long>(s.size())), fs * static_cast<long>(h.rank()));
  }
}

}  // namespace
}  // namespace bhw
