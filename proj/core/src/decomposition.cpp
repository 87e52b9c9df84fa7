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

#include "bhw/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

using Adjacency = std::map<NodeId, std::vector<NodeId>>;

// Adjacency over well-formed edges only; malformed ones are reported.
Adjacency tree_adjacency(const TreeDecomposition& td, std::vector<Violation>* report) {
  Adjacency adj;
  for (const auto& [id, bag] : td.bags) adj[id];
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [a, b] : td.edges) {
    const std::string name = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    if (!td.bags.contains(a) || !td.bags.contains(b)) {
      if (report) report->push_back({Axiom::tree, "tree edge " + name + " names a missing node"});
      continue;
    }
    if (a == b) {
      if (report) report->push_back({Axiom::tree, "tree edge " + name + " is a loop"});
      continue;
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      if (report) report->push_back({Axiom::tree, "tree edge " + name + " is repeated"});
      continue;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [id, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

// Connected pieces of the subgraph induced by `nodes`.
std::vector<std::vector<NodeId>> pieces(const Adjacency& adj, const std::set<NodeId>& nodes) {
  std::vector<std::vector<NodeId>> out;
  std::set<NodeId> done;
  for (NodeId root : nodes) {
    if (done.contains(root)) continue;
    std::vector<NodeId> piece;
    std::deque<NodeId> queue{root};
    done.insert(root);
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop_front();
      piece.push_back(x);
      for (NodeId y : adj.at(x)) {
        if (nodes.contains(y) && done.insert(y).second) queue.push_back(y);
      }
    }
    std::sort(piece.begin(), piece.end());
    out.push_back(std::move(piece));
  }
  return out;
}

void require_valid(const Hypergraph& h, const TreeDecomposition& td) {
  const auto report = validate(h, td);
  if (!report.valid()) {
    throw DomainError("invalid tree decomposition: " + report.violations.front().detail);
  }
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::tree: return "tree";
    case Axiom::bag: return "bag";
    case Axiom::union_cover: return "union";
    case Axiom::containment: return "containment";
    case Axiom::connectedness: return "connectedness";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

ValidationReport validate(const Hypergraph& h, const TreeDecomposition& td) {
  ValidationReport report;
  auto& out = report.violations;

  if (td.bags.empty()) out.push_back({Axiom::tree, "decomposition has no nodes"});
  const Adjacency adj = tree_adjacency(td, &out);
  std::set<NodeId> all;
  std::size_t edge_count = 0;
  for (const auto& [id, nbrs] : adj) {
    all.insert(id);
    edge_count += nbrs.size();
  }
  edge_count /= 2;
  const auto parts = pieces(adj, all);
  if (parts.size() > 1) {
    out.push_back({Axiom::tree, "tree falls apart into " + std::to_string(parts.size()) +
                                    " pieces; node " + std::to_string(parts[1].front()) +
                                    " is unreachable from node " +
                                    std::to_string(parts[0].front())});
  }
  if (edge_count + parts.size() > all.size()) {
    out.push_back({Axiom::tree, "tree edges contain a cycle"});
  }

  std::vector<std::vector<NodeId>> holders(h.num_vertices());
  for (const auto& [id, bag] : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] >= h.num_vertices()) {
        out.push_back({Axiom::bag, "bag " + std::to_string(id) + " holds unknown vertex id " +
                                       std::to_string(bag[i])});
        continue;
      }
      if (i > 0 && bag[i] <= bag[i - 1]) {
        out.push_back({Axiom::bag, "bag " + std::to_string(id) + " is not sorted and duplicate-free"});
      }
      holders[bag[i]].push_back(id);
    }
  }

  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (holders[v].empty()) {
      out.push_back({Axiom::union_cover, "vertex " + h.vertex_label(v) + " is in no bag"});
    }
  }

  for (const auto& e : h.edges()) {
    const bool held = std::any_of(td.bags.begin(), td.bags.end(), [&](const auto& node) {
      return is_subset(e.vertices, node.second);
    });
    if (!held) {
      out.push_back({Axiom::containment, "edge " + e.label + " is contained in no bag"});
    }
  }

  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (holders[v].size() < 2) continue;
    const auto split = pieces(adj, std::set<NodeId>(holders[v].begin(), holders[v].end()));
    if (split.size() > 1) {
      out.push_back({Axiom::connectedness, "vertex " + h.vertex_label(v) + " occurs in " +
                                               std::to_string(split.size()) +
                                               " disconnected parts of the tree"});
    }
  }
  return report;
}

GhwWidth ghw_width(const Hypergraph& h, const TreeDecomposition& td) {
  require_valid(h, td);
  GhwWidth out;
  for (const auto& [id, bag] : td.bags) {
    auto cover = edge_cover_number(h, bag);
    out.width = std::max(out.width, cover.size);
    out.certificates.emplace(id, std::move(cover.certificate));
  }
  return out;
}

FhwWidth fhw_width(const Hypergraph& h, const TreeDecomposition& td) {
  require_valid(h, td);
  FhwWidth out;
  for (const auto& [id, bag] : td.bags) {
    auto cover = fractional_cover_number(h, bag);
    if (cover.value > out.width) out.width = cover.value;
    out.weights.emplace(id, std::move(cover.weights));
  }
  return out;
}

NodeId find_balanced_node(const Hypergraph& h, const TreeDecomposition& td, const Rational& k,
                          const VertexSet& s, std::optional<NodeId> start, CoverMode mode) {
  require_valid(h, td);
  if (!h.contains(s)) throw DomainError("S is not a subset of the hypergraph");

  auto cover = [&](const VertexSet& set) -> Rational {
    if (mode == CoverMode::integral) return static_cast<long>(edge_cover_number(h, set).size);
    return fractional_cover_number(h, set).value;
  };
  for (const auto& [id, bag] : td.bags) {
    if (cover(bag) > k) {
      throw DomainError("bag " + std::to_string(id) + " has cover number above " + to_string(k));
    }
  }
  const Rational total = cover(s);
  if (mode == CoverMode::integral ? total < 3 * k + 1 : total <= 3 * k) {
    throw DomainError("S is too small for a balanced separator to be guaranteed");
  }

  NodeId x = start.value_or(td.bags.begin()->first);
  if (!td.bags.contains(x)) throw DomainError("start node " + std::to_string(x) + " does not exist");

  const Adjacency adj = tree_adjacency(td, nullptr);
  std::set<NodeId> scope;
  for (const auto& [id, bag] : td.bags) scope.insert(id);

  for (std::size_t step = 0; step <= td.bags.size(); ++step) {
    std::set<NodeId> rest = scope;
    rest.erase(x);
    const VertexSet& here = td.bags.at(x);
    std::optional<std::vector<NodeId>> heavy;
    for (auto& piece : pieces(adj, rest)) {
      VertexSet below;
      for (NodeId y : piece) below = set_union(below, td.bags.at(y));
      const VertexSet part = set_intersection(set_difference(below, here), s);
      if (3 * cover(part) < 2 * total) continue;
      if (heavy) throw InternalError("two subtrees each hold two thirds of S");
      heavy = std::move(piece);
    }
    if (!heavy) return x;
    const auto& nbrs = adj.at(x);
    const auto next = std::find_if(nbrs.begin(), nbrs.end(), [&](NodeId y) {
      return std::binary_search(heavy->begin(), heavy->end(), y);
    });
    if (next == nbrs.end()) throw InternalError("heavy subtree is not adjacent to the current node");
    scope = std::set<NodeId>(heavy->begin(), heavy->end());
    x = *next;
  }
  throw InternalError("balanced node walk did not terminate");
}

TreeDecomposition from_elimination_order(const Hypergraph& h, const std::vector<VertexId>& order) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> pos(n, n);
  if (order.size() != n) throw DomainError("elimination order must list every vertex once");
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw DomainError("elimination order must list every vertex once");
    }
    pos[order[i]] = i;
  }

  std::vector<std::set<VertexId>> nbr(n);
  for (const auto& e : h.edges()) {
    for (VertexId a : e.vertices) {
      for (VertexId b : e.vertices) {
        if (a != b) nbr[a].insert(b);
      }
    }
  }

  TreeDecomposition td;
  std::vector<NodeId> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    VertexSet later;
    for (VertexId w : nbr[v]) {
      if (pos[w] > i) later.push_back(w);
    }
    for (VertexId a : later) {
      for (VertexId b : later) {
        if (a != b) nbr[a].insert(b);
      }
    }
    const auto id = static_cast<NodeId>(i + 1);
    td.bags.emplace(id, set_union(later, VertexSet{v}));
    if (later.empty()) {
      roots.push_back(id);
      continue;
    }
    const auto parent = *std::min_element(later.begin(), later.end(), [&](VertexId a, VertexId b) {
      return pos[a] < pos[b];
    });
    td.edges.emplace_back(id, static_cast<NodeId>(pos[parent] + 1));
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) td.edges.emplace_back(roots[i], roots.back());
  return td;
}

}  // namespace bhw
