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
 * Exact edge cover numbers.
 *
 * The integral cover number of S is the least number of edges whose union
 * contains S; the fractional one is the optimum of the covering LP with edge
 * weights in [0,1]. Both are computed exactly and returned with a witness.
 */

#ifndef BHW_COVER_HPP
#define BHW_COVER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"

namespace bhw {

/// Edge labels, sorted by label_less.
struct CoverCertificate {
  std::vector<std::string> edge_labels;

  std::size_t size() const { return edge_labels.size(); }
  friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

/// Edge label -> weight for every edge of non-zero weight, in edge order.
struct FractionalWeights {
  std::vector<std::pair<std::string, Rational>> weights;
  Rational total;

  friend bool operator==(const FractionalWeights&, const FractionalWeights&) = default;
};

struct IntegralCover {
  std::size_t size = 0;
  CoverCertificate certificate;
};

struct FractionalCover {
  Rational value;
  FractionalWeights weights;
};

/// Minimum cover of `s` with the lexicographically least witness among all
/// minimum witnesses (edge labels compared with label_less).
IntegralCover edge_cover_number(const Hypergraph& h, const VertexSet& s);

/// True iff s has a cover with at most p edges. Stops at the first witness.
bool is_cover_at_most(const Hypergraph& h, const VertexSet& s, std::size_t p);

FractionalCover fractional_cover_number(const Hypergraph& h, const VertexSet& s);

/// Exact test of fractional_cover_number(h, s) <= k. Throws DomainError for k < 0.
bool is_fractional_cover_at_most(const Hypergraph& h, const VertexSet& s, const Rational& k);

/// Every label names an edge of h and the named edges cover s.
bool certifies(const Hypergraph& h, const VertexSet& s, const CoverCertificate& certificate);

/// Every label names an edge of h, weights lie in [0,1], `total` is their sum
/// and every vertex of s receives weight at least one.
bool certifies(const Hypergraph& h, const VertexSet& s, const FractionalWeights& weights);

FractionalWeights as_fractional(const Hypergraph& h, const CoverCertificate& certificate);

}  // namespace bhw

#endif  // BHW_COVER_HPP
