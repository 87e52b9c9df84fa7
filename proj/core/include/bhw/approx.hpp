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
 * Separator-based approximation of generalized and fractional hypertree
 * width.
 *
 * Each call receives a set S that must end up inside the root bag. When the
 * whole hypergraph has cover at most p it becomes one bag. Otherwise S is
 * grown vertex by vertex (ascending id) until its cover exceeds p, a
 * balanced separator X of the grown set is computed, components of H - X
 * with cover at least 3k are decomposed recursively together with X, and
 * the remaining components become leaves V' u X under a root bag S u X.
 * Failure to find a separator is a proof that the width exceeds k.
 */

#ifndef BHW_APPROX_HPP
#define BHW_APPROX_HPP

#include <cstddef>
#include <map>
#include <variant>

#include "bhw/cover.hpp"
#include "bhw/decomposition.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"

namespace bhw {

/// factor4 grows S to cover 3k+1, factor6 to 6k+1.
enum class GhwMode { factor4, factor6 };

enum class ApproxMode { ghw4, ghw6, fhw };

struct RunStats {
  std::size_t invocations = 0;
  /// The outermost call has depth 1.
  std::size_t max_depth = 0;
};

struct ApproxOptions {
  /// Upper bound on concurrently running recursive calls. Results do not
  /// depend on it.
  unsigned threads = 1;
};

struct ApproxDecomposition {
  TreeDecomposition td;
  /// Maximum bag cover (rho for the integral modes, rho* for fhw).
  Rational width;
  /// Filled for the integral modes.
  std::map<NodeId, CoverCertificate> certificates;
  /// Filled for the fractional mode.
  std::map<NodeId, FractionalWeights> weights;
};

/// The width is above k: `witness` has cover above p yet no balanced
/// separator of cover at most k inside the sub-hypergraph induced on `scope`.
struct ApproxRefusal {
  VertexSet scope;
  VertexSet witness;
};

using ApproxOutcome = std::variant<ApproxDecomposition, ApproxRefusal>;

struct ApproxResult {
  ApproxOutcome outcome;
  RunStats stats;

  bool refused() const { return std::holds_alternative<ApproxRefusal>(outcome); }
};

/// Requires h connected (InternalError otherwise) and k >= 1 (DomainError).
ApproxResult approx_ghw(const Hypergraph& h, std::size_t k, GhwMode mode,
                        const ApproxOptions& options = {});

/// Requires h connected (InternalError otherwise) and k > 0 (DomainError).
ApproxResult approx_fhw(const Hypergraph& h, const Rational& k, const ApproxOptions& options = {});

/// Any hypergraph: components are decomposed separately and their roots are
/// attached to the root of the first component. The integral modes require
/// an integral k. Stats are summed (invocations) and maximized (depth).
ApproxResult approx_entry(const Hypergraph& h, const Rational& k, ApproxMode mode,
                          const ApproxOptions& options = {});

}  // namespace bhw

#endif  // BHW_APPROX_HPP
