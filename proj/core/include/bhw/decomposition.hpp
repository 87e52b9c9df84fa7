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
 * Tree decompositions of hypergraphs: the validator for the union,
 * containment and connectedness axioms, integral and fractional width
 * evaluation, and the walk that locates a bag acting as a balanced separator.
 */

#ifndef BHW_DECOMPOSITION_HPP
#define BHW_DECOMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhw/cover.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"
#include "bhw/separators.hpp"

namespace bhw {

using NodeId = std::uint32_t;

/// Bags are keyed by node id; `edges` are unordered pairs of node ids.
struct TreeDecomposition {
  std::map<NodeId, VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> edges;

  std::size_t num_nodes() const { return bags.size(); }
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class Axiom {
  tree,           // nodes and edges do not form a tree
  bag,            // a bag names a vertex outside the hypergraph
  union_cover,    // a vertex lies in no bag
  containment,    // an edge lies in no bag
  connectedness,  // the nodes holding a vertex are not connected
};

/// "tree", "bag", "union", "containment" or "connectedness".
std::string_view axiom_name(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(Axiom axiom) const;
};

/// Checks every axiom and reports every violation found.
ValidationReport validate(const Hypergraph& h, const TreeDecomposition& td);

struct GhwWidth {
  std::size_t width = 0;
  std::map<NodeId, CoverCertificate> certificates;
};

struct FhwWidth {
  Rational width;
  std::map<NodeId, FractionalWeights> weights;
};

/// Throw DomainError when td is not a valid decomposition of h.
GhwWidth ghw_width(const Hypergraph& h, const TreeDecomposition& td);
FhwWidth fhw_width(const Hypergraph& h, const TreeDecomposition& td);

/// Walks from `start` (default: smallest node id) towards the unique heavy
/// side until the current bag is a balanced separator for S, and returns
/// that node. Requires td valid with every bag of cover at most k, and
/// rho(S) >= 3k+1 (integral) or rho*(S) > 3k (fractional). Two heavy sides
/// at one step raise InternalError.
NodeId find_balanced_node(const Hypergraph& h, const TreeDecomposition& td, const Rational& k,
                          const VertexSet& s, std::optional<NodeId> start = std::nullopt,
                          CoverMode mode = CoverMode::integral);

/// Decomposition induced by eliminating vertices in `order` (a permutation of
/// V(H)) in the primal graph: node i+1 holds order[i] and its neighbours
/// eliminated later, including fill edges.
TreeDecomposition from_elimination_order(const Hypergraph& h, const std::vector<VertexId>& order);

}  // namespace bhw

#endif  // BHW_DECOMPOSITION_HPP
