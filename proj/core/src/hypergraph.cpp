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

#include "bhw/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs by numeric value; equal values compare equal.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    const auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? std::string_view{} : s.substr(nz);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest element stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<VertexSet> collect_components(DisjointSets& ds, std::size_t n,
                                          const std::vector<bool>& skip) {
  std::vector<VertexSet> by_root(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!skip.empty() && skip[v]) continue;
    by_root[ds.find(v)].push_back(static_cast<VertexId>(v));
  }
  std::vector<VertexSet> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

std::string unique_edge_label(const std::string& base, const std::set<std::string>& taken) {
  std::string label = base;
  for (std::size_t i = 1; taken.count(label) != 0; ++i) {
    label = base + "'" + std::to_string(i);
  }
  return label;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      const int c = compare_digit_runs(a.substr(i, ie - i), b.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if (i < a.size() || j < b.size()) return j < b.size();
  return a < b;
}

Hypergraph Hypergraph::from_edge_list(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
  std::vector<std::string> labels;
  for (const auto& [name, members] : edges) {
    labels.insert(labels.end(), members.begin(), members.end());
  }
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&labels](const std::string& label) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), label, label_less) - labels.begin());
  };
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [name, members] : edges) {
    Edge e{name, {}, false};
    for (const auto& m : members) e.vertices.push_back(id_of(m));
    e.vertices = normalized(std::move(e.vertices));
    out.push_back(std::move(e));
  }
  return Hypergraph(std::move(labels), std::move(out));
}

Hypergraph::Hypergraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  if (edges_.empty()) {
    throw DomainError("hypergraph must have at least one edge");
  }
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (!label_less(labels_[i - 1], labels_[i])) {
      throw DomainError("vertex labels must be unique and sorted");
    }
  }
  incidence_.assign(labels_.size(), {});
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.vertices.empty()) {
      throw DomainError("edge '" + e.label + "' is empty");
    }
    if (!seen.insert(e.label).second) {
      throw DomainError("duplicate edge label '" + e.label + "'");
    }
    for (std::size_t k = 0; k < e.vertices.size(); ++k) {
      if (e.vertices[k] >= labels_.size() || (k > 0 && e.vertices[k - 1] >= e.vertices[k])) {
        throw DomainError("edge '" + e.label + "' has invalid vertex ids");
      }
      incidence_[e.vertices[k]].push_back(i);
    }
    rank_ = std::max(rank_, e.vertices.size());
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (incidence_[v].empty()) {
      throw DomainError("vertex '" + labels_[v] + "' is isolated");
    }
  }
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return label_less(a, b); });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId Hypergraph::vertex_id(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw DomainError("unknown vertex '" + std::string(label) + "'");
}

std::optional<std::size_t> Hypergraph::find_edge(std::string_view label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return i;
  }
  return std::nullopt;
}

VertexSet Hypergraph::all_vertices() const {
  VertexSet all(labels_.size());
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

bool Hypergraph::contains(const VertexSet& set) const {
  return std::all_of(set.begin(), set.end(), [this](VertexId v) { return v < labels_.size(); });
}

VertexSet Hypergraph::ids_of(std::span<const std::string> labels) const {
  VertexSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(vertex_id(l));
  return normalized(std::move(out));
}

std::vector<std::string> Hypergraph::labels_of(const VertexSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (VertexId v : set) out.push_back(labels_.at(v));
  return out;
}

VertexSet translate(const VertexSet& set, const Hypergraph& from, const Hypergraph& to) {
  VertexSet out;
  out.reserve(set.size());
  for (VertexId v : set) out.push_back(to.vertex_id(from.vertex_label(v)));
  return normalized(std::move(out));
}

Hypergraph induced(const Hypergraph& h, const VertexSet& subset) {
  if (subset.empty()) {
    throw DomainError("induced sub-hypergraph needs a non-empty vertex set");
  }
  if (!h.contains(subset)) {
    throw DomainError("induced: vertex set is not contained in the hypergraph");
  }
  std::vector<VertexId> local(h.num_vertices(), static_cast<VertexId>(-1));
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    local[subset[j]] = static_cast<VertexId>(j);
    labels.push_back(h.vertex_label(subset[j]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge trace{e.label, {}, e.synthetic};
    for (VertexId v : e.vertices) {
      if (local[v] != static_cast<VertexId>(-1)) trace.vertices.push_back(local[v]);
    }
    if (!trace.vertices.empty()) edges.push_back(std::move(trace));
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph remove(const Hypergraph& h, const VertexSet& subset) {
  if (!h.contains(subset)) {
    throw DomainError("remove: vertex set is not contained in the hypergraph");
  }
  const VertexSet rest = set_difference(h.all_vertices(), subset);
  if (rest.empty()) {
    throw DomainError("remove: cannot remove every vertex");
  }
  return induced(h, rest);
}

std::vector<VertexSet> components(const Hypergraph& h) {
  return components_without(h, {});
}

std::vector<VertexSet> components_without(const Hypergraph& h, const VertexSet& removed) {
  const std::size_t n = h.num_vertices();
  std::vector<bool> skip(n, false);
  for (VertexId v : removed) {
    if (v >= n) throw DomainError("components: vertex id out of range");
    skip[v] = true;
  }
  DisjointSets ds(n);
  for (const Edge& e : h.edges()) {
    std::optional<VertexId> anchor;
    for (VertexId v : e.vertices) {
      if (skip[v]) continue;
      if (anchor) {
        ds.unite(*anchor, v);
      } else {
        anchor = v;
      }
    }
  }
  return collect_components(ds, n, skip);
}

bool is_connected(const Hypergraph& h) { return components(h).size() == 1; }

Contraction contract(const Hypergraph& h, const ContractionSpec& spec) {
  const auto& parts = spec.parts;
  if (parts.empty() || parts.size() > 3) {
    throw DomainError("contraction needs between one and three parts");
  }
  const std::size_t n = h.num_vertices();
  std::vector<int> part_of(n, -1);
  std::set<std::string> fresh;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].members.empty()) throw DomainError("contraction part is empty");
    if (!h.contains(parts[i].members)) {
      throw DomainError("contraction part is not contained in the hypergraph");
    }
    for (VertexId v : parts[i].members) {
      if (part_of[v] != -1) throw DomainError("contraction parts overlap");
      part_of[v] = static_cast<int>(i);
    }
    if (h.find_vertex(parts[i].fresh_label) || !fresh.insert(parts[i].fresh_label).second) {
      throw DomainError("fresh label '" + parts[i].fresh_label + "' collides");
    }
  }

  // New vertex universe: survivors plus fresh vertices, in label order.
  std::vector<std::pair<std::string, std::optional<VertexId>>> universe;  // label, host id
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] == -1) universe.emplace_back(h.vertex_label(v), v);
  }
  for (const auto& p : parts) universe.emplace_back(p.fresh_label, std::nullopt);
  std::sort(universe.begin(), universe.end(),
            [](const auto& a, const auto& b) { return label_less(a.first, b.first); });

  std::vector<std::string> labels;
  std::vector<std::optional<VertexId>> host_vertex;
  std::vector<VertexId> host_to_new(n, static_cast<VertexId>(-1));
  std::vector<VertexId> terminals(parts.size(), 0);
  for (std::size_t j = 0; j < universe.size(); ++j) {
    labels.push_back(universe[j].first);
    host_vertex.push_back(universe[j].second);
    if (universe[j].second) {
      host_to_new[*universe[j].second] = static_cast<VertexId>(j);
      continue;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].fresh_label == universe[j].first) terminals[i] = static_cast<VertexId>(j);
    }
  }

  std::vector<Edge> edges;
  std::vector<std::optional<std::size_t>> origin;
  edges.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edge(i);
    Edge image{e.label, {}, e.synthetic};
    for (VertexId v : e.vertices) {
      const int p = part_of[v];
      image.vertices.push_back(p == -1 ? host_to_new[v] : terminals[static_cast<std::size_t>(p)]);
    }
    image.vertices = normalized(std::move(image.vertices));
    edges.push_back(std::move(image));
    origin.emplace_back(i);
  }
  std::vector<std::optional<VertexId>> apex(edges.size());
  return Contraction{Hypergraph(std::move(labels), std::move(edges)), std::move(origin),
                     std::move(apex), std::move(terminals), std::move(host_vertex)};
}

Contraction contract_with_apex(const Hypergraph& h, const VertexSet& s,
                               const ContractionSpec& spec) {
  if (!h.contains(s)) throw DomainError("apex construction: S is not contained in the hypergraph");
  VertexSet covered;
  for (const auto& p : spec.parts) {
    if (!is_subset(normalized(p.members), s)) {
      throw DomainError("apex construction: contraction part is not inside S");
    }
    covered = set_union(covered, normalized(p.members));
  }
  Contraction base = contract(h, spec);
  const VertexSet leftover = set_difference(s, covered);
  if (leftover.empty()) return base;

  std::set<std::string> taken;
  for (const Edge& e : h.edges()) taken.insert(e.label);
  std::vector<Edge> edges = base.graph.edges();
  std::vector<std::string> labels = base.graph.vertex_labels();
  for (VertexId u : leftover) {
    const VertexId image = base.graph.vertex_id(h.vertex_label(u));
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      std::string label =
          unique_edge_label("~" + spec.parts[i].fresh_label + "~" + h.vertex_label(u), taken);
      taken.insert(label);
      edges.push_back(Edge{label, normalized({base.terminals[i], image}), true});
      base.origin_edge.emplace_back(std::nullopt);
      base.apex_vertex.emplace_back(u);
    }
  }
  base.graph = Hypergraph(std::move(labels), std::move(edges));
  return base;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool set_contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet normalized(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace bhw
