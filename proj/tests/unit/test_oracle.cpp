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

#include <gtest/gtest.h>

#include "bhw/decomposition.hpp"
#include "bhw/errors.hpp"
#include "bhw/io.hpp"
#include "bhw/oracle.hpp"
#include "brute.hpp"
#include "fixtures.hpp"

namespace bhw {
namespace {

TEST(Oracle, Examples) {
  EXPECT_EQ(exact_ghw(fixtures::one()), 1u);
  EXPECT_EQ(exact_ghw(fixtures::tri()), 2u);
  EXPECT_EQ(exact_ghw(fixtures::p5()), 1u);
  EXPECT_EQ(exact_fhw(fixtures::one()), 1);
  EXPECT_EQ(exact_fhw(fixtures::tri()), Rational(3, 2));
  EXPECT_EQ(exact_fhw(fixtures::p5()), 1);
  EXPECT_TRUE(exact_ghw_decide(fixtures::p5(), 1));
  EXPECT_FALSE(exact_ghw_decide(fixtures::tri(), 1));
}

TEST(Oracle, SmallCasesMatchDecompositionEnumeration) {
  EXPECT_EQ(exact_ghw(fixtures::tri()), brute::ghw_by_decompositions(fixtures::tri()));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto h = fixtures::random_instance(3 + seed % 2, 2 + seed % 2, seed);
    EXPECT_EQ(exact_ghw(h), brute::ghw_by_decompositions(h)) << "seed " << seed;
  }
}

TEST(Oracle, MatchesOrderingEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto h = fixtures::random_instance(3 + seed % 5, 2 + seed % 2, seed);
    EXPECT_EQ(exact_ghw(h), brute::ghw_by_orderings(h)) << "seed " << seed;
    EXPECT_EQ(exact_fhw(h), brute::fhw_by_orderings(h)) << "seed " << seed;
  }
  EXPECT_EQ(exact_ghw(fixtures::k44()), brute::ghw_by_orderings(fixtures::k44()));
  EXPECT_EQ(exact_fhw(fixtures::k44()), brute::fhw_by_orderings(fixtures::k44()));
}

TEST(Oracle, DecompositionsAttainTheWidth) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto h = fixtures::random_instance(4 + seed % 8, 3, seed);
    const auto g = exact_ghw_decomposition(h);
    EXPECT_TRUE(validate(h, g.td).valid());
    EXPECT_EQ(Rational(static_cast<long>(ghw_width(h, g.td).width)), g.width);
    const auto f = exact_fhw_decomposition(h);
    EXPECT_TRUE(validate(h, f.td).valid());
    EXPECT_EQ(fhw_width(h, f.td).width, f.width);
    EXPECT_LE(f.width, g.width);
    const auto k = static_cast<std::size_t>(g.width.convert_to<long>());
    EXPECT_TRUE(exact_ghw_decide(h, k));
    EXPECT_TRUE(exact_ghw_decide(h, k + 1));
    if (k > 0) {
      EXPECT_FALSE(exact_ghw_decide(h, k - 1));
    }
  }
}

TEST(Oracle, Budget) {
  const auto big = generate_random(13, 10, 2, 1);
  EXPECT_THROW(exact_ghw(big), BudgetExceeded);
  EXPECT_NO_THROW(exact_ghw(big, OracleBudget{13, std::size_t{1} << 20}));
  EXPECT_THROW(exact_ghw(fixtures::p9(), OracleBudget{12, 10}), BudgetExceeded);
  EXPECT_THROW(exact_fhw(generate_random(25, 30, 2, 1), OracleBudget{30, 1}), BudgetExceeded);
}

}  // namespace
}  // namespace bhw
