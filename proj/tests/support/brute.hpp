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

// Exhaustive reference implementations used only by the tests. They share no
// code with the library beyond the Hypergraph value type and Rational, and
// trade every bit of speed for obviousness.

#ifndef BHW_TESTS_BRUTE_HPP
#define BHW_TESTS_BRUTE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bhw/decomposition.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/ratlp.hpp"
#include "bhw/rational.hpp"

namespace bhw::brute {

using Mask = std::uint64_t;

Mask to_mask(const VertexSet& set);
VertexSet from_mask(Mask m);

/// Components of H - removed, by breadth-first search on vertex adjacency.
std::vector<Mask> components_avoiding(const Hypergraph& h, Mask removed);

/// Minimum number of edges covering S, over all edge subsets.
std::size_t rho(const Hypergraph& h, Mask s);
inline std::size_t rho(const Hypergraph& h, const VertexSet& s) { return rho(h, to_mask(s)); }

/// Fractional cover number by enumerating the basic feasible points of
/// { gamma >= 0, every vertex of S covered at least once }.
Rational rho_star(const Hypergraph& h, Mask s);
inline Rational rho_star(const Hypergraph& h, const VertexSet& s) { return rho_star(h, to_mask(s)); }

/// Optimum of an LP whose variables all have both bounds, by enumerating
/// every choice of n tight rows. nullopt means infeasible.
std::optional<Rational> lp_min_by_vertices(const LinearProgram& lp);

/// Balanced-separator test computed from rho / rho_star above.
bool is_balanced(const Hypergraph& h, Mask s, Mask x, bool fractional);

/// Exists X with rho(X) <= k balanced for S (checks unions of at most k edges).
std::optional<Mask> balanced_separator(const Hypergraph& h, Mask s, std::size_t k);

/// Exists X with rho*(X) <= k balanced in the fractional sense (all subsets).
std::optional<Mask> fractional_balanced_separator(const Hypergraph& h, Mask s, const Rational& k);

bool separates(const Hypergraph& h, Mask x, const std::vector<VertexId>& terminals);

/// Exists X avoiding s, t that separates them with rho(X) <= k (all subsets).
bool st_separator_exists(const Hypergraph& h, VertexId s, VertexId t, std::size_t k);

/// Exists a multiway cut X with rho*(X) <= k (all subsets).
bool multiway_cut_exists(const Hypergraph& h, const std::vector<VertexId>& terminals,
                         const Rational& k);

/// Widths minimized over all elimination orderings (n <= 8).
std::size_t ghw_by_orderings(const Hypergraph& h);
Rational fhw_by_orderings(const Hypergraph& h);

/// ghw minimized over every tree decomposition with at most n nodes whose
/// bags are distinct subsets (n <= 4).
std::size_t ghw_by_decompositions(const Hypergraph& h);

/// Names of the axioms ("tree", "bag", "union", "containment",
/// "connectedness") that td violates.
std::set<std::string> violated_axioms(const Hypergraph& h, const TreeDecomposition& td);

}  // namespace bhw::brute

#endif  // BHW_TESTS_BRUTE_HPP
