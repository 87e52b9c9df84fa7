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

#include "bhw/cover.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <variant>

#include <boost/dynamic_bitset.hpp>

#include "bhw/errors.hpp"
#include "bhw/ratlp.hpp"

namespace bhw {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kExactIndependenceLimit = 48;

// Covering instance restricted to S: local vertex i is s[i], and every
// candidate edge is stored by its trace on S.
struct CoverProblem {
  std::size_t n = 0;
  std::vector<std::size_t> host_edge;
  std::vector<Bits> trace;
  std::vector<std::vector<std::size_t>> covering;  // local vertex -> candidate positions
  std::size_t max_trace = 0;
};

void require_subset(const Hypergraph& h, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= h.num_vertices() || (i > 0 && s[i] <= s[i - 1])) {
      throw DomainError("vertex set is not a sorted subset of the hypergraph");
    }
  }
}

// Candidates are the edges meeting S, ordered by label. With `reduce`, an
// edge whose trace is contained in another candidate's trace is dropped
// (equal traces keep the first one).
CoverProblem build_problem(const Hypergraph& h, const VertexSet& s, bool reduce) {
  CoverProblem p;
  p.n = s.size();
  std::vector<std::size_t> local(h.num_vertices(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = i;

  std::vector<std::size_t> order(h.num_edges());
  for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return label_less(h.edge(a).label, h.edge(b).label);
  });

  std::vector<std::size_t> edges;
  std::vector<Bits> traces;
  for (std::size_t e : order) {
    Bits t(p.n);
    for (VertexId v : h.edge(e).vertices) {
      if (local[v] != std::numeric_limits<std::size_t>::max()) t.set(local[v]);
    }
    if (t.none()) continue;
    edges.push_back(e);
    traces.push_back(std::move(t));
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (reduce) {
      bool dominated = false;
      for (std::size_t j = 0; j < edges.size() && !dominated; ++j) {
        if (i == j) continue;
        if (traces[i] == traces[j]) {
          dominated = j < i;
        } else {
          dominated = traces[i].is_subset_of(traces[j]);
        }
      }
      if (dominated) continue;
    }
    p.host_edge.push_back(edges[i]);
    p.trace.push_back(traces[i]);
  }

  p.covering.assign(p.n, {});
  for (std::size_t pos = 0; pos < p.trace.size(); ++pos) {
    p.max_trace = std::max(p.max_trace, p.trace[pos].count());
    for (auto v = p.trace[pos].find_first(); v != Bits::npos; v = p.trace[pos].find_next(v)) {
      p.covering[v].push_back(pos);
    }
  }
  return p;
}

// Can `uncovered` be covered by at most `budget` candidates at positions >=
// `first`? On success the chosen positions are appended to `chosen`.
bool coverable(const CoverProblem& p, const Bits& uncovered, std::size_t budget,
               std::size_t first, std::vector<std::size_t>* chosen) {
  if (uncovered.none()) return true;
  if (budget == 0) return false;
  if (uncovered.count() > budget * p.max_trace) return false;

  std::size_t pick = Bits::npos;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto v = uncovered.find_first(); v != Bits::npos; v = uncovered.find_next(v)) {
    const auto& cov = p.covering[v];
    const auto options = static_cast<std::size_t>(
        cov.end() - std::lower_bound(cov.begin(), cov.end(), first));
    if (options < best) {
      best = options;
      pick = v;
      if (options <= 1) break;
    }
  }
  if (best == 0) return false;

  const auto& cov = p.covering[pick];
  for (auto it = std::lower_bound(cov.begin(), cov.end(), first); it != cov.end(); ++it) {
    if (coverable(p, uncovered - p.trace[*it], budget - 1, first, chosen)) {
      if (chosen) chosen->push_back(*it);
      return true;
    }
  }
  return false;
}

Bits full(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

std::size_t lower_bound_size(const CoverProblem& p) {
  return p.max_trace == 0 ? p.n : (p.n + p.max_trace - 1) / p.max_trace;
}

// Minimum cover size and one witness (positions into p) via iterative deepening.
std::size_t minimum_cover(const CoverProblem& p, std::vector<std::size_t>* chosen) {
  const Bits all = full(p.n);
  for (std::size_t budget = lower_bound_size(p);; ++budget) {
    if (chosen) chosen->clear();
    if (coverable(p, all, budget, 0, chosen)) return budget;
  }
}

std::vector<Bits> conflict_graph(const CoverProblem& p) {
  std::vector<Bits> adj(p.n, Bits(p.n));
  for (const Bits& t : p.trace) {
    for (auto v = t.find_first(); v != Bits::npos; v = t.find_next(v)) adj[v] |= t;
  }
  for (std::size_t v = 0; v < p.n; ++v) adj[v].reset(v);
  return adj;
}

// Vertices of S no two of which share an edge. Any such set bounds the
// fractional cover number from below by its size.
std::size_t greedy_independent(const std::vector<Bits>& adj) {
  Bits alive = full(adj.size());
  std::size_t size = 0;
  while (alive.any()) {
    std::size_t pick = Bits::npos;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
      const std::size_t d = (adj[v] & alive).count();
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    ++size;
    alive -= adj[pick];
    alive.reset(pick);
  }
  return size;
}

void max_independent(const std::vector<Bits>& adj, Bits candidates, std::size_t size,
                     std::size_t& best, std::size_t target) {
  if (best >= target) return;
  if (candidates.none()) {
    best = std::max(best, size);
    return;
  }
  if (size + candidates.count() <= best) return;
  const auto v = candidates.find_first();
  Bits with = candidates - adj[v];
  with.reset(v);
  max_independent(adj, with, size + 1, best, target);
  candidates.reset(v);
  max_independent(adj, candidates, size, best, target);
}

// Exact maximum when small enough, greedy otherwise; never exceeds `target`
// by more than needed since the search stops once `target` is reached.
std::size_t independence_bound(const CoverProblem& p, std::size_t target) {
  const auto adj = conflict_graph(p);
  std::size_t best = greedy_independent(adj);
  if (best < target && p.n <= kExactIndependenceLimit) {
    max_independent(adj, full(p.n), 0, best, target);
  }
  return best;
}

FractionalWeights integral_weights(const Hypergraph& h, std::vector<std::size_t> host_edges) {
  std::sort(host_edges.begin(), host_edges.end());
  FractionalWeights w;
  for (std::size_t e : host_edges) w.weights.emplace_back(h.edge(e).label, Rational(1));
  w.total = static_cast<long>(host_edges.size());
  return w;
}

FractionalCover solve_cover_lp(const Hypergraph& h, const CoverProblem& p) {
  // The upper bounds gamma <= 1 are left out: an optimal point never puts
  // more than unit weight on an edge, since lowering it stays feasible.
  const std::size_t m = p.trace.size();
  LinearProgram lp;
  lp.objective.assign(m, Rational(1));
  lp.bounds.assign(m, VariableBound{});
  for (std::size_t v = 0; v < p.n; ++v) {
    Constraint c{std::vector<Rational>(m), Relation::greater_equal, Rational(1)};
    for (std::size_t pos : p.covering[v]) c.coefficients[pos] = 1;
    lp.constraints.push_back(std::move(c));
  }
  const LpResult result = solve_min(lp);
  const auto* opt = std::get_if<LpOptimal>(&result);
  if (!opt) throw InternalError("covering program has no optimum");

  std::map<std::size_t, Rational> by_host;
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (opt->point[pos] > 1) throw InternalError("optimal cover weight exceeds one");
    if (opt->point[pos] != 0) by_host.emplace(p.host_edge[pos], opt->point[pos]);
  }
  FractionalCover out;
  out.value = opt->value;
  for (auto& [e, w] : by_host) out.weights.weights.emplace_back(h.edge(e).label, w);
  out.weights.total = out.value;
  return out;
}

}  // namespace

IntegralCover edge_cover_number(const Hypergraph& h, const VertexSet& s) {
  require_subset(h, s);
  if (s.empty()) return {};

  const std::size_t rho = minimum_cover(build_problem(h, s, true), nullptr);

  // Fix the certificate one label at a time: the smallest next label that
  // still admits a completion among later labels.
  const CoverProblem p = build_problem(h, s, false);
  Bits uncovered = full(p.n);
  std::vector<std::size_t> picked;
  std::size_t first = 0;
  for (std::size_t slot = 0; slot < rho; ++slot) {
    const std::size_t rest = rho - slot - 1;
    std::size_t pos = first;
    for (; pos < p.trace.size(); ++pos) {
      if (coverable(p, uncovered - p.trace[pos], rest, pos + 1, nullptr)) break;
    }
    if (pos == p.trace.size()) throw InternalError("lost a minimum cover while fixing labels");
    picked.push_back(pos);
    uncovered -= p.trace[pos];
    first = pos + 1;
  }

  IntegralCover out;
  out.size = rho;
  for (std::size_t pos : picked) out.certificate.edge_labels.push_back(h.edge(p.host_edge[pos]).label);
  return out;
}

bool is_cover_at_most(const Hypergraph& h, const VertexSet& s, std::size_t p) {
  require_subset(h, s);
  if (s.empty()) return true;
  if (s.size() > p * h.rank()) return false;
  const CoverProblem problem = build_problem(h, s, true);
  return coverable(problem, full(problem.n), p, 0, nullptr);
}

FractionalCover fractional_cover_number(const Hypergraph& h, const VertexSet& s) {
  require_subset(h, s);
  if (s.empty()) return {};

  const CoverProblem p = build_problem(h, s, true);
  std::vector<std::size_t> chosen;
  const std::size_t rho = minimum_cover(p, &chosen);
  if (rho == 1 || independence_bound(p, rho) >= rho) {
    std::vector<std::size_t> host;
    for (std::size_t pos : chosen) host.push_back(p.host_edge[pos]);
    FractionalCover out;
    out.value = static_cast<long>(rho);
    out.weights = integral_weights(h, std::move(host));
    return out;
  }
  return solve_cover_lp(h, p);
}

bool is_fractional_cover_at_most(const Hypergraph& h, const VertexSet& s, const Rational& k) {
  if (k < 0) throw DomainError("cover bound must be non-negative");
  require_subset(h, s);
  if (s.empty()) return true;
  if (Rational(static_cast<long>(s.size())) > k * static_cast<long>(h.rank())) return false;

  const CoverProblem p = build_problem(h, s, true);
  const auto whole = static_cast<std::size_t>(floor(k));
  if (coverable(p, full(p.n), whole, 0, nullptr)) return true;
  if (Rational(static_cast<long>(independence_bound(p, whole + 1))) > k) return false;
  return solve_cover_lp(h, p).value <= k;
}

bool certifies(const Hypergraph& h, const VertexSet& s, const CoverCertificate& certificate) {
  VertexSet covered;
  for (const auto& label : certificate.edge_labels) {
    const auto e = h.find_edge(label);
    if (!e) return false;
    covered = set_union(covered, h.edge(*e).vertices);
  }
  return is_subset(s, covered);
}

bool certifies(const Hypergraph& h, const VertexSet& s, const FractionalWeights& weights) {
  std::vector<Rational> load(h.num_vertices());
  Rational total = 0;
  for (const auto& [label, w] : weights.weights) {
    const auto e = h.find_edge(label);
    if (!e || w < 0 || w > 1) return false;
    total += w;
    for (VertexId v : h.edge(*e).vertices) load[v] += w;
  }
  if (total != weights.total) return false;
  for (VertexId v : s) {
    if (v >= load.size() || load[v] < 1) return false;
  }
  return true;
}

FractionalWeights as_fractional(const Hypergraph& h, const CoverCertificate& certificate) {
  std::vector<std::size_t> host;
  for (const auto& label : certificate.edge_labels) {
    const auto e = h.find_edge(label);
    if (!e) throw DomainError("unknown edge label '" + label + "'");
    host.push_back(*e);
  }
  return integral_weights(h, std::move(host));
}

}  // namespace bhw
