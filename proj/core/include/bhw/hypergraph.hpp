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
 * Immutable labeled hypergraphs and the structural operations the width
 * algorithms are built from: induced sub-hypergraphs, vertex removal,
 * connected components, contraction, and contraction with apex edges.
 *
 * Vertices carry string labels and are addressed by dense ids 0..n-1 that
 * follow the label order (see label_less). Edges are identified by their
 * label; two edges may span the same vertex set.
 */

#ifndef BHW_HYPERGRAPH_HPP
#define BHW_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhw {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids of one hypergraph.
using VertexSet = std::vector<VertexId>;

/// Natural label order: runs of digits compare numerically, everything else
/// lexicographically ("v2" < "v10"). Ties fall back to plain string order, so
/// this is a strict total order on distinct strings.
bool label_less(std::string_view a, std::string_view b);

struct Edge {
  std::string label;
  VertexSet vertices;
  /// Set on the apex edges added by contract_with_apex.
  bool synthetic = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Hypergraph {
 public:
  /// Builds from (edge label, vertex labels) pairs. Duplicate vertex labels
  /// inside one edge collapse. Throws DomainError when an edge is empty, an
  /// edge label repeats, or there are no edges.
  static Hypergraph from_edge_list(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& edges);

  /// Low-level constructor; `vertex_labels` must be sorted by label_less and
  /// every edge must reference valid ids. All invariants are re-checked.
  Hypergraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t rank() const { return rank_; }

  const std::string& vertex_label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Throws DomainError for unknown labels.
  VertexId vertex_id(std::string_view label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> find_edge(std::string_view label) const;
  /// Indices of the edges containing `v`, ascending.
  const std::vector<std::size_t>& incident_edges(VertexId v) const { return incidence_.at(v); }

  VertexSet all_vertices() const;
  bool contains(const VertexSet& set) const;

  VertexSet ids_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const VertexSet& set) const;

  /// Structural equality: same vertex labels and the same labeled edges in
  /// the same order.
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::size_t rank_ = 0;
};

/// Maps a vertex set between two hypergraphs by label. Throws DomainError if
/// a label is missing from `to`.
VertexSet translate(const VertexSet& set, const Hypergraph& from, const Hypergraph& to);

/// H[U]: vertex set U, and for every edge meeting U its trace on U under the
/// same label. Vertex j of the result is U[j] in `h`.
Hypergraph induced(const Hypergraph& h, const VertexSet& subset);

/// H minus U, i.e. induced on the complement. Requires U to be a proper subset.
Hypergraph remove(const Hypergraph& h, const VertexSet& subset);

/// Connected components, each sorted, ordered by smallest vertex id.
std::vector<VertexSet> components(const Hypergraph& h);

/// Components of H minus `removed`, expressed in the ids of `h`. Equivalent to
/// components(remove(h, removed)) without materializing the sub-hypergraph.
std::vector<VertexSet> components_without(const Hypergraph& h, const VertexSet& removed);

bool is_connected(const Hypergraph& h);

struct ContractionPart {
  VertexSet members;
  std::string fresh_label;
};

struct ContractionSpec {
  std::vector<ContractionPart> parts;
};

/// Result of contract / contract_with_apex together with the preimage data
/// needed to carry covers back to the host hypergraph.
struct Contraction {
  Hypergraph graph;
  /// For each edge of `graph`: index of its origin edge in the host, or
  /// nullopt for synthetic apex edges.
  std::vector<std::optional<std::size_t>> origin_edge;
  /// For synthetic apex edges: the host id of the non-terminal endpoint.
  std::vector<std::optional<VertexId>> apex_vertex;
  /// Ids in `graph` of the fresh vertices, in part order.
  std::vector<VertexId> terminals;
  /// For each vertex of `graph`: its host id, or nullopt for fresh vertices.
  std::vector<std::optional<VertexId>> host_vertex;
};

/// Replaces every part by its fresh vertex. Edge labels are preserved.
/// Throws DomainError on overlapping or empty parts, label collisions, or
/// more than three parts.
Contraction contract(const Hypergraph& h, const ContractionSpec& spec);

/// contract() plus, for each u in S outside every part and each fresh vertex
/// s_i, a size-two synthetic edge {s_i, u}. Every part must lie inside S.
Contraction contract_with_apex(const Hypergraph& h, const VertexSet& s,
                               const ContractionSpec& spec);

// Small sorted-set helpers shared by the algorithms.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& set, VertexId v);
/// Sorts and deduplicates.
VertexSet normalized(VertexSet set);

}  // namespace bhw

#endif  // BHW_HYPERGRAPH_HPP
