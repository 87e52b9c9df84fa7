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
 * Vertex separators whose edge cover is bounded.
 *
 * A balanced separator for S is a set X such that every component of H - X
 * holds strictly less than two thirds of the cover number of S. The balanced
 * searches reduce to terminal cuts: parts of S are contracted into fresh
 * terminals, the remaining vertices of S are tied to every terminal by apex
 * edges, and a terminal cut of the result is a balanced separator of H.
 */

#ifndef BHW_SEPARATORS_HPP
#define BHW_SEPARATORS_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "bhw/cover.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"

namespace bhw {

enum class CoverMode { integral, fractional };

struct SeparatorResult {
  VertexSet separator;
  std::variant<CoverCertificate, FractionalWeights> certificate;
};

/// True iff no two of `terminals` are connected in H - x. Terminals inside x
/// count as not separated.
bool separates(const Hypergraph& h, const VertexSet& x, const std::vector<VertexId>& terminals);

/// An s,t-separator X (s, t not in X) with an integral cover of at most k
/// edges, or nullopt if none exists. The certificate has minimum size among
/// all such separators; X is the union of its edges minus {s, t}.
std::optional<SeparatorResult> st_separator_with_cover(const Hypergraph& h, VertexId s,
                                                       VertexId t, std::size_t k);

/// A vertex set avoiding the 2 or 3 terminals that pairwise separates them
/// and has fractional cover at most k, or nullopt.
std::optional<SeparatorResult> multiway_cut_with_fractional_cover(
    const Hypergraph& h, const std::vector<VertexId>& terminals, const Rational& k);

/// Balanced separator for S with integral cover at most k. Requires k >= 1
/// and rho(S) in {3k+1, 6k+1}.
std::optional<SeparatorResult> balanced_separator(const Hypergraph& h, const VertexSet& s,
                                                  std::size_t k);

/// Balanced separator for S in the fractional sense with fractional cover at
/// most k. Requires 3k < rho*(S) <= 3k+1.
std::optional<SeparatorResult> fractional_balanced_separator(const Hypergraph& h,
                                                             const VertexSet& s,
                                                             const Rational& k);

/// cover(X) <= bound and every component C of H - X has
/// cover(C n S) < 2/3 cover(S), with cover = rho or rho* by `mode`.
/// Sets that are not subsets of V(H) yield false.
bool is_balanced_separator(const Hypergraph& h, const VertexSet& s, const VertexSet& x,
                           const Rational& bound, CoverMode mode);

}  // namespace bhw

#endif  // BHW_SEPARATORS_HPP
