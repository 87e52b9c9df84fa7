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

#include "bhw/separators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

bool valid_set(const Hypergraph& h, const VertexSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= h.num_vertices() || (i > 0 && set[i] <= set[i - 1])) return false;
  }
  return true;
}

// Interior vertices of a shortest a-b path in H minus `removed`, or nullopt
// when b is unreachable. An empty interior means a and b share an edge.
std::optional<std::vector<VertexId>> connecting_path(const Hypergraph& h,
                                                     const std::vector<bool>& removed,
                                                     VertexId a, VertexId b) {
  std::vector<VertexId> parent(h.num_vertices(), kNone);
  std::vector<bool> edge_used(h.num_edges(), false);
  std::deque<VertexId> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (std::size_t e : h.incident_edges(v)) {
      if (edge_used[e]) continue;
      edge_used[e] = true;
      for (VertexId w : h.edge(e).vertices) {
        if (removed[w] || parent[w] != kNone) continue;
        parent[w] = v;
        if (w == b) {
          std::vector<VertexId> interior;
          for (VertexId x = parent[b]; x != a; x = parent[x]) interior.push_back(x);
          std::reverse(interior.begin(), interior.end());
          return interior;
        }
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

// First connected terminal pair in H minus `removed`, as a path interior.
std::optional<std::vector<VertexId>> connecting_path(const Hypergraph& h,
                                                     const std::vector<bool>& removed,
                                                     const std::vector<VertexId>& terminals) {
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      if (auto path = connecting_path(h, removed, terminals[i], terminals[j])) return path;
    }
  }
  return std::nullopt;
}

bool share_edge(const Hypergraph& h, VertexId a, VertexId b) {
  for (std::size_t e : h.incident_edges(a)) {
    if (set_contains(h.edge(e).vertices, b)) return true;
  }
  return false;
}

std::vector<std::string> sorted_labels(std::set<std::string> labels) {
  std::vector<std::string> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return label_less(a, b);
  });
  return out;
}

// Depth-bounded search over edge sets E' whose union (minus s, t) is tested
// as an s,t-separator. Every branch adds an edge through a vertex of the
// current shortest s-t path, which any separator must hit.
class EdgeSeparatorSearch {
 public:
  EdgeSeparatorSearch(const Hypergraph& h, VertexId s, VertexId t)
      : h_(h), s_(s), t_(t), load_(h.num_vertices(), 0), removed_(h.num_vertices(), false) {}

  std::optional<std::vector<std::size_t>> run(std::size_t budget) {
    seen_.clear();
    chosen_.clear();
    if (dfs(budget)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t budget) {
    const auto path = connecting_path(h_, removed_, s_, t_);
    if (!path) return true;
    if (budget == 0 || path->empty()) return false;
    for (VertexId u : *path) {
      for (std::size_t e : h_.incident_edges(u)) {
        std::vector<std::size_t> next = chosen_;
        next.insert(std::upper_bound(next.begin(), next.end(), e), e);
        if (std::binary_search(chosen_.begin(), chosen_.end(), e)) continue;
        if (!seen_.insert(next).second) continue;
        add(e, next);
        if (dfs(budget - 1)) return true;
        drop(e);
      }
    }
    return false;
  }

  void add(std::size_t e, std::vector<std::size_t>& next) {
    chosen_.swap(next);
    for (VertexId v : h_.edge(e).vertices) {
      if (v == s_ || v == t_) continue;
      if (load_[v]++ == 0) removed_[v] = true;
    }
  }

  void drop(std::size_t e) {
    chosen_.erase(std::lower_bound(chosen_.begin(), chosen_.end(), e));
    for (VertexId v : h_.edge(e).vertices) {
      if (v == s_ || v == t_) continue;
      if (--load_[v] == 0) removed_[v] = false;
    }
  }

  const Hypergraph& h_;
  VertexId s_;
  VertexId t_;
  std::vector<std::size_t> load_;
  std::vector<bool> removed_;
  std::vector<std::size_t> chosen_;
  std::set<std::vector<std::size_t>> seen_;
};

// Enumerates inclusion-minimal multiway cuts of exactly `size` vertices by
// branching on shortest terminal paths; `accept` decides whether to stop.
class VertexCutSearch {
 public:
  VertexCutSearch(const Hypergraph& h, const std::vector<VertexId>& terminals,
                  std::function<bool(const VertexSet&)> accept)
      : h_(h), terminals_(terminals), accept_(std::move(accept)),
        removed_(h.num_vertices(), false) {}

  std::optional<VertexSet> run(std::size_t size) {
    seen_.clear();
    chosen_.clear();
    if (dfs(size)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t size) {
    const auto path = connecting_path(h_, removed_, terminals_);
    if (!path) return chosen_.size() == size && minimal() && accept_(chosen_);
    if (chosen_.size() == size || path->empty()) return false;
    for (VertexId u : *path) {
      if (std::find(terminals_.begin(), terminals_.end(), u) != terminals_.end()) continue;
      VertexSet next = chosen_;
      next.insert(std::upper_bound(next.begin(), next.end(), u), u);
      if (!seen_.insert(next).second) continue;
      chosen_.swap(next);
      removed_[u] = true;
      if (dfs(size)) return true;
      removed_[u] = false;
      chosen_.erase(std::lower_bound(chosen_.begin(), chosen_.end(), u));
    }
    return false;
  }

  bool minimal() {
    for (VertexId v : chosen_) {
      removed_[v] = false;
      const bool still_cut = !connecting_path(h_, removed_, terminals_);
      removed_[v] = true;
      if (still_cut) return false;
    }
    return true;
  }

  const Hypergraph& h_;
  const std::vector<VertexId>& terminals_;
  std::function<bool(const VertexSet&)> accept_;
  std::vector<bool> removed_;
  VertexSet chosen_;
  std::set<VertexSet> seen_;
};

std::string fresh_label(const Hypergraph& h, std::size_t index) {
  std::string label = "$s" + std::to_string(index + 1);
  while (h.find_vertex(label)) label.insert(0, "$");
  return label;
}

// Subsets R of S (by size, then lexicographically) for which `fits(R)`;
// supersets of rejected sets are never generated.
template <typename Fits, typename Visit>
bool for_each_small_subset(const VertexSet& s, Fits fits, Visit visit) {
  std::vector<std::vector<std::size_t>> level{{}};
  while (!level.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& idx : level) {
      VertexSet r;
      for (std::size_t i : idx) r.push_back(s[i]);
      if (visit(r)) return true;
      for (std::size_t i = idx.empty() ? 0 : idx.back() + 1; i < s.size(); ++i) {
        auto grown = idx;
        grown.push_back(i);
        VertexSet g = r;
        g.push_back(s[i]);
        if (fits(g)) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return false;
}

// Vertices of `rest` joined by a shared edge end up in one class.
std::vector<VertexSet> linked_classes(const Hypergraph& h, const VertexSet& rest) {
  std::vector<std::size_t> parent(rest.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::map<VertexId, std::size_t> local;
  for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = i;
  for (const auto& e : h.edges()) {
    std::size_t first = rest.size();
    for (VertexId v : e.vertices) {
      auto it = local.find(v);
      if (it == local.end()) continue;
      if (first == rest.size()) {
        first = it->second;
      } else {
        const auto a = find(first);
        const auto b = find(it->second);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, VertexSet> groups;
  for (std::size_t i = 0; i < rest.size(); ++i) groups[find(i)].push_back(rest[i]);
  std::vector<VertexSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// Assignments of classes to exactly q parts, class 0 in part 0 and parts
// opened in order, in lexicographic order of the assignment vector.
template <typename Visit>
bool for_each_assignment(std::size_t classes, std::size_t q, Visit visit) {
  std::vector<std::size_t> assign(classes, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (classes - i < q - used) return false;
    if (i == classes) return visit(assign);
    for (std::size_t p = 0; p <= std::min(used, q - 1); ++p) {
      assign[i] = p;
      if (rec(i + 1, std::max(used, p + 1))) return true;
    }
    return false;
  };
  if (classes < q) return false;
  assign[0] = 0;
  return rec(1, 1);
}

std::vector<VertexSet> parts_of(const std::vector<VertexSet>& classes,
                                const std::vector<std::size_t>& assign, std::size_t q) {
  std::vector<VertexSet> parts(q);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    parts[assign[c]] = set_union(parts[assign[c]], classes[c]);
  }
  return parts;
}

Contraction apex_graph(const Hypergraph& h, const VertexSet& s, const std::vector<VertexSet>& parts) {
  ContractionSpec spec;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    spec.parts.push_back(ContractionPart{parts[i], fresh_label(h, i)});
  }
  return contract_with_apex(h, s, spec);
}

VertexSet to_host(const Contraction& c, const VertexSet& x) {
  VertexSet out;
  for (VertexId v : x) {
    if (!c.host_vertex[v]) throw InternalError("separator contains a contracted terminal");
    out.push_back(*c.host_vertex[v]);
  }
  return normalized(std::move(out));
}

// Host edge standing in for edge `idx` of the contracted graph.
std::size_t host_edge(const Hypergraph& h, const Contraction& c, std::size_t idx) {
  if (c.origin_edge[idx]) return *c.origin_edge[idx];
  return h.incident_edges(*c.apex_vertex[idx]).front();
}

}  // namespace

bool separates(const Hypergraph& h, const VertexSet& x, const std::vector<VertexId>& terminals) {
  std::vector<bool> removed(h.num_vertices(), false);
  for (VertexId v : x) removed[v] = true;
  for (VertexId t : terminals) {
    if (removed[t]) return false;
  }
  return !connecting_path(h, removed, terminals);
}

std::optional<SeparatorResult> st_separator_with_cover(const Hypergraph& h, VertexId s,
                                                       VertexId t, std::size_t k) {
  if (s >= h.num_vertices() || t >= h.num_vertices()) {
    throw DomainError("terminal is not a vertex of the hypergraph");
  }
  if (s == t) throw DomainError("terminals must be distinct");
  if (share_edge(h, s, t)) return std::nullopt;

  EdgeSeparatorSearch search(h, s, t);
  for (std::size_t budget = 0; budget <= k; ++budget) {
    const auto edges = search.run(budget);
    if (!edges) continue;
    VertexSet x;
    std::set<std::string> labels;
    for (std::size_t e : *edges) {
      labels.insert(h.edge(e).label);
      for (VertexId v : h.edge(e).vertices) {
        if (v != s && v != t) x.push_back(v);
      }
    }
    return SeparatorResult{normalized(std::move(x)),
                           CoverCertificate{sorted_labels(std::move(labels))}};
  }
  return std::nullopt;
}

std::optional<SeparatorResult> multiway_cut_with_fractional_cover(
    const Hypergraph& h, const std::vector<VertexId>& terminals, const Rational& k) {
  if (terminals.size() < 2 || terminals.size() > 3) {
    throw DomainError("multiway cut needs two or three terminals");
  }
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (terminals[i] >= h.num_vertices()) throw DomainError("terminal is not a vertex");
    for (std::size_t j = 0; j < i; ++j) {
      if (terminals[i] == terminals[j]) throw DomainError("duplicate terminal");
    }
  }
  if (k <= 0) throw DomainError("cover bound must be positive");
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      if (share_edge(h, terminals[i], terminals[j])) return std::nullopt;
    }
  }

  // A set of fractional cover at most k has at most k * rank vertices.
  const auto limit = std::min<std::size_t>(
      static_cast<std::size_t>(floor(k * static_cast<long>(h.rank()))),
      h.num_vertices() - terminals.size());
  const auto whole = static_cast<std::size_t>(floor(k));
  std::optional<FractionalWeights> weights;
  VertexCutSearch search(h, terminals, [&](const VertexSet& x) {
    if (is_cover_at_most(h, x, whole)) {
      weights = as_fractional(h, edge_cover_number(h, x).certificate);
      return true;
    }
    if (is_fractional_cover_at_most(h, x, k)) {
      weights = fractional_cover_number(h, x).weights;
      return true;
    }
    return false;
  });
  for (std::size_t size = 0; size <= limit; ++size) {
    if (auto x = search.run(size)) return SeparatorResult{std::move(*x), std::move(*weights)};
  }
  return std::nullopt;
}

std::optional<SeparatorResult> balanced_separator(const Hypergraph& h, const VertexSet& s,
                                                  std::size_t k) {
  if (k == 0) throw DomainError("balanced separator needs k >= 1");
  if (!valid_set(h, s)) throw DomainError("S is not a sorted subset of the hypergraph");
  const std::size_t rho = edge_cover_number(h, s).size;
  if (rho != 3 * k + 1 && rho != 6 * k + 1) {
    throw DomainError("balanced separator needs rho(S) = 3k+1 or 6k+1, got rho(S) = " +
                      std::to_string(rho));
  }
  // 3 rho(part) < 2 rho(S)
  const std::size_t part_limit = (2 * rho - 1) / 3;

  std::optional<SeparatorResult> found;
  for_each_small_subset(
      s, [&](const VertexSet& r) { return is_cover_at_most(h, r, k); },
      [&](const VertexSet& r) {
        const auto classes = linked_classes(h, set_difference(s, r));
        return for_each_assignment(classes.size(), 2, [&](const std::vector<std::size_t>& assign) {
          const auto parts = parts_of(classes, assign, 2);
          for (const auto& part : parts) {
            if (!is_cover_at_most(h, part, part_limit)) return false;
          }
          const Contraction c = apex_graph(h, s, parts);
          const auto cut = st_separator_with_cover(c.graph, c.terminals[0], c.terminals[1], k);
          if (!cut) return false;

          std::set<std::string> labels;
          for (const auto& label : std::get<CoverCertificate>(cut->certificate).edge_labels) {
            labels.insert(h.edge(host_edge(h, c, *c.graph.find_edge(label))).label);
          }
          SeparatorResult result{to_host(c, cut->separator),
                                 CoverCertificate{sorted_labels(std::move(labels))}};
          const auto& cert = std::get<CoverCertificate>(result.certificate);
          if (cert.size() > k || !certifies(h, result.separator, cert) ||
              !is_balanced_separator(h, s, result.separator, Rational(static_cast<long>(k)),
                                     CoverMode::integral)) {
            throw InternalError("terminal cut of the apex graph is not a balanced separator");
          }
          found = std::move(result);
          return true;
        });
      });
  return found;
}

std::optional<SeparatorResult> fractional_balanced_separator(const Hypergraph& h,
                                                             const VertexSet& s,
                                                             const Rational& k) {
  if (k <= 0) throw DomainError("fractional balanced separator needs k > 0");
  if (!valid_set(h, s)) throw DomainError("S is not a sorted subset of the hypergraph");
  const Rational rho = fractional_cover_number(h, s).value;
  if (!(3 * k < rho && rho <= 3 * k + 1)) {
    throw DomainError("fractional balanced separator needs 3k < rho*(S) <= 3k+1, got rho*(S) = " +
                      to_string(rho));
  }
  const Rational part_limit = Rational(2) * rho / 3;
  std::map<VertexSet, bool> light;
  auto is_light = [&](const VertexSet& part) {
    auto it = light.find(part);
    if (it == light.end()) {
      it = light.emplace(part, fractional_cover_number(h, part).value < part_limit).first;
    }
    return it->second;
  };

  std::optional<SeparatorResult> found;
  for_each_small_subset(
      s, [&](const VertexSet& r) { return is_fractional_cover_at_most(h, r, k); },
      [&](const VertexSet& r) {
        const auto classes = linked_classes(h, set_difference(s, r));
        for (std::size_t q = 2; q <= 3; ++q) {
          const bool hit = for_each_assignment(classes.size(), q, [&](const std::vector<std::size_t>& assign) {
            const auto parts = parts_of(classes, assign, q);
            for (const auto& part : parts) {
              if (!is_light(part)) return false;
            }
            const Contraction c = apex_graph(h, s, parts);
            const auto cut = multiway_cut_with_fractional_cover(c.graph, c.terminals, k);
            if (!cut) return false;

            std::map<std::size_t, Rational> by_host;
            for (const auto& [label, w] : std::get<FractionalWeights>(cut->certificate).weights) {
              Rational& slot = by_host[host_edge(h, c, *c.graph.find_edge(label))];
              slot = std::min(Rational(slot + w), Rational(1));
            }
            FractionalWeights weights;
            for (auto& [e, w] : by_host) {
              weights.weights.emplace_back(h.edge(e).label, w);
              weights.total += w;
            }
            SeparatorResult result{to_host(c, cut->separator), std::move(weights)};
            const auto& wts = std::get<FractionalWeights>(result.certificate);
            if (wts.total > k || !certifies(h, result.separator, wts) ||
                !is_balanced_separator(h, s, result.separator, k, CoverMode::fractional)) {
              throw InternalError("terminal cut of the apex graph is not a balanced separator");
            }
            found = std::move(result);
            return true;
          });
          if (hit) return true;
        }
        return false;
      });
  return found;
}

bool is_balanced_separator(const Hypergraph& h, const VertexSet& s, const VertexSet& x,
                           const Rational& bound, CoverMode mode) {
  if (!valid_set(h, s) || !valid_set(h, x) || bound < 0) return false;
  const auto parts = components_without(h, x);
  if (mode == CoverMode::integral) {
    if (!is_cover_at_most(h, x, static_cast<std::size_t>(floor(bound)))) return false;
    const std::size_t total = edge_cover_number(h, s).size;
    for (const auto& part : parts) {
      if (3 * edge_cover_number(h, set_intersection(part, s)).size >= 2 * total) return false;
    }
    return true;
  }
  if (!is_fractional_cover_at_most(h, x, bound)) return false;
  const Rational total = fractional_cover_number(h, s).value;
  for (const auto& part : parts) {
    if (3 * fractional_cover_number(h, set_intersection(part, s)).value >= 2 * total) return false;
  }
  return true;
}

}  // namespace bhw
