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

/**
 * @file
 *
 * Exact generalized and fractional hypertree width of small hypergraphs.
 *
 * Both widths are minima of a monotone bag cost over tree decompositions,
 * and every tree decomposition can be refined into one produced by a vertex
 * elimination ordering without increasing any bag. The oracle therefore runs
 * a dynamic program over sets of already eliminated vertices:
 *
 *   W(S) = min over v in S of max(W(S - v), cost({v} u Q(S - v, v)))
 *
 * where Q(S', v) holds the vertices outside S' u {v} reachable from v in
 * the primal graph through S'. Bag costs are memoized per vertex set.
 */

#ifndef BHW_ORACLE_HPP
#define BHW_ORACLE_HPP

#include <cstddef>

#include "bhw/decomposition.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"

namespace bhw {

struct OracleBudget {
  /// Larger inputs are refused with BudgetExceeded (hard cap 24).
  std::size_t max_vertices = 12;
  /// Distinct bags whose cover may be evaluated before giving up.
  std::size_t max_candidate_bags = std::size_t{1} << 20;
};

struct ExactResult {
  Rational width;
  TreeDecomposition td;
};

/// True iff ghw(h) <= k.
bool exact_ghw_decide(const Hypergraph& h, std::size_t k, const OracleBudget& budget = {});

std::size_t exact_ghw(const Hypergraph& h, const OracleBudget& budget = {});
Rational exact_fhw(const Hypergraph& h, const OracleBudget& budget = {});

/// Optimal width together with a decomposition attaining it.
ExactResult exact_ghw_decomposition(const Hypergraph& h, const OracleBudget& budget = {});
ExactResult exact_fhw_decomposition(const Hypergraph& h, const OracleBudget& budget = {});

}  // namespace bhw

#endif  // BHW_ORACLE_HPP
