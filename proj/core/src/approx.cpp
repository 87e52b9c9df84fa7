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

#include "bhw/approx.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <optional>
#include <utility>

#include "bhw/errors.hpp"
#include "bhw/separators.hpp"

namespace bhw {

namespace {

// Rooted tree with node 0 as root, bags in the ids of the hypergraph the
// call was made on.
struct LocalTree {
  std::vector<VertexSet> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct LocalRefusal {
  VertexSet scope;
  VertexSet witness;
};

struct Step {
  std::variant<LocalTree, LocalRefusal> result;
  RunStats stats;
};

struct Oracles {
  // cover(S) <= p
  std::function<bool(const Hypergraph&, const VertexSet&)> within_budget;
  // cover(V_i) >= 3k
  std::function<bool(const Hypergraph&, const VertexSet&)> needs_recursion;
  std::function<std::optional<VertexSet>(const Hypergraph&, const VertexSet&)> separator;
};

VertexSet lift(const VertexSet& local, const VertexSet& universe) {
  VertexSet out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(universe[v]);
  return out;
}

VertexSet lower(const VertexSet& set, const VertexSet& universe) {
  VertexSet out;
  out.reserve(set.size());
  for (VertexId v : set) {
    out.push_back(static_cast<VertexId>(
        std::lower_bound(universe.begin(), universe.end(), v) - universe.begin()));
  }
  return out;
}

class Driver {
 public:
  Driver(Oracles oracles, unsigned threads)
      : oracles_(std::move(oracles)), spare_(threads > 1 ? static_cast<int>(threads) - 1 : 0) {}

  Step run(const Hypergraph& h, const VertexSet& s, std::size_t depth) {
    Step out;
    out.stats = {1, depth};
    const VertexSet all = h.all_vertices();
    if (oracles_.within_budget(h, all)) {
      out.result = LocalTree{{all}, {}};
      return out;
    }

    VertexSet grown = s;
    for (VertexId v : all) {
      if (!oracles_.within_budget(h, grown)) break;
      if (!set_contains(grown, v)) grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
    }
    if (oracles_.within_budget(h, grown)) {
      out.result = LocalTree{{all}, {}};
      return out;
    }

    const auto x = oracles_.separator(h, grown);
    if (!x) {
      out.result = LocalRefusal{all, grown};
      return out;
    }

    const auto parts = components_without(h, *x);
    struct Child {
      VertexSet universe;
      std::optional<std::future<Step>> pending;
      std::optional<Step> done;
    };
    std::vector<std::optional<Child>> children(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!oracles_.needs_recursion(h, parts[i])) continue;
      Child child;
      child.universe = set_union(parts[i], *x);
      if (reserve()) {
        auto sub = std::make_shared<Hypergraph>(induced(h, child.universe));
        auto sub_s = lower(set_union(set_intersection(grown, parts[i]), *x), child.universe);
        child.pending = std::async(std::launch::async, [this, sub, sub_s, depth] {
          struct Release {
            Driver* d;
            ~Release() { d->release(); }
          } guard{this};
          return run(*sub, sub_s, depth + 1);
        });
      }
      children[i] = std::move(child);
    }

    LocalTree tree;
    tree.bags.push_back(set_union(s, *x));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!children[i]) {
        tree.edges.emplace_back(0, tree.bags.size());
        tree.bags.push_back(set_union(parts[i], *x));
        continue;
      }
      Child& child = *children[i];
      Step sub = child.pending
                     ? child.pending->get()
                     : run(induced(h, child.universe),
                           lower(set_union(set_intersection(grown, parts[i]), *x), child.universe),
                           depth + 1);
      out.stats.invocations += sub.stats.invocations;
      out.stats.max_depth = std::max(out.stats.max_depth, sub.stats.max_depth);
      if (auto* refusal = std::get_if<LocalRefusal>(&sub.result)) {
        out.result = LocalRefusal{lift(refusal->scope, child.universe),
                                  lift(refusal->witness, child.universe)};
        return out;
      }
      const auto& sub_tree = std::get<LocalTree>(sub.result);
      const std::size_t offset = tree.bags.size();
      tree.edges.emplace_back(0, offset);
      for (const auto& bag : sub_tree.bags) tree.bags.push_back(lift(bag, child.universe));
      for (const auto& [a, b] : sub_tree.edges) tree.edges.emplace_back(a + offset, b + offset);
    }
    out.result = std::move(tree);
    return out;
  }

 private:
  bool reserve() {
    int cur = spare_.load();
    while (cur > 0) {
      if (spare_.compare_exchange_weak(cur, cur - 1)) return true;
    }
    return false;
  }
  void release() { spare_.fetch_add(1); }

  Oracles oracles_;
  std::atomic<int> spare_;
};

TreeDecomposition to_decomposition(const LocalTree& tree) {
  TreeDecomposition td;
  for (std::size_t i = 0; i < tree.bags.size(); ++i) {
    td.bags.emplace(static_cast<NodeId>(i + 1), tree.bags[i]);
  }
  for (const auto& [a, b] : tree.edges) {
    td.edges.emplace_back(static_cast<NodeId>(a + 1), static_cast<NodeId>(b + 1));
  }
  return td;
}

// Validates and measures the decomposition; any failure is a bug, so the
// result is never handed out unchecked.
ApproxDecomposition finish(const Hypergraph& h, TreeDecomposition td, bool fractional) {
  const auto report = validate(h, td);
  if (!report.valid()) {
    throw InternalError("constructed decomposition is invalid: " + report.violations.front().detail);
  }
  ApproxDecomposition out;
  if (fractional) {
    auto w = fhw_width(h, td);
    out.width = std::move(w.width);
    out.weights = std::move(w.weights);
  } else {
    auto w = ghw_width(h, td);
    out.width = static_cast<long>(w.width);
    out.certificates = std::move(w.certificates);
  }
  out.td = std::move(td);
  return out;
}

ApproxResult package(const Hypergraph& h, Step step, bool fractional) {
  ApproxResult result;
  result.stats = step.stats;
  if (auto* refusal = std::get_if<LocalRefusal>(&step.result)) {
    result.outcome = ApproxRefusal{std::move(refusal->scope), std::move(refusal->witness)};
  } else {
    result.outcome = finish(h, to_decomposition(std::get<LocalTree>(step.result)), fractional);
  }
  return result;
}

void require_connected(const Hypergraph& h) {
  if (!is_connected(h)) {
    throw InternalError("approximation driver called on a disconnected hypergraph");
  }
}

}  // namespace

ApproxResult approx_ghw(const Hypergraph& h, std::size_t k, GhwMode mode,
                        const ApproxOptions& options) {
  if (k == 0) throw DomainError("width parameter k must be at least 1");
  require_connected(h);
  const std::size_t p = mode == GhwMode::factor4 ? 3 * k : 6 * k;
  Oracles oracles{
      [p](const Hypergraph& g, const VertexSet& s) { return is_cover_at_most(g, s, p); },
      [k](const Hypergraph& g, const VertexSet& c) { return !is_cover_at_most(g, c, 3 * k - 1); },
      [k](const Hypergraph& g, const VertexSet& s) -> std::optional<VertexSet> {
        auto found = balanced_separator(g, s, k);
        if (!found) return std::nullopt;
        return std::move(found->separator);
      }};
  Driver driver(std::move(oracles), options.threads);
  ApproxResult result = package(h, driver.run(h, {}, 1), false);
  if (auto* d = std::get_if<ApproxDecomposition>(&result.outcome)) {
    const std::size_t bound = mode == GhwMode::factor4 ? 4 * k : 6 * k;
    if (d->width > static_cast<long>(bound)) {
      throw InternalError("decomposition width " + to_string(d->width) + " exceeds " +
                          std::to_string(bound));
    }
  }
  return result;
}

ApproxResult approx_fhw(const Hypergraph& h, const Rational& k, const ApproxOptions& options) {
  if (k <= 0) throw DomainError("width parameter k must be positive");
  require_connected(h);
  const Rational p = 3 * k;
  Oracles oracles{
      [p](const Hypergraph& g, const VertexSet& s) { return is_fractional_cover_at_most(g, s, p); },
      [p](const Hypergraph& g, const VertexSet& c) {
        return fractional_cover_number(g, c).value >= p;
      },
      [k](const Hypergraph& g, const VertexSet& s) -> std::optional<VertexSet> {
        auto found = fractional_balanced_separator(g, s, k);
        if (!found) return std::nullopt;
        return std::move(found->separator);
      }};
  Driver driver(std::move(oracles), options.threads);
  ApproxResult result = package(h, driver.run(h, {}, 1), true);
  if (auto* d = std::get_if<ApproxDecomposition>(&result.outcome)) {
    if (d->width >= 4 * k + 1) {
      throw InternalError("fractional decomposition width " + to_string(d->width) +
                          " is not below " + to_string(Rational(4 * k + 1)));
    }
  }
  return result;
}

ApproxResult approx_entry(const Hypergraph& h, const Rational& k, ApproxMode mode,
                          const ApproxOptions& options) {
  const bool fractional = mode == ApproxMode::fhw;
  std::size_t whole = 0;
  if (!fractional) {
    if (!is_integral(k) || k < 1) throw DomainError("integral modes need an integer k >= 1");
    whole = static_cast<std::size_t>(floor(k));
  }
  auto run = [&](const Hypergraph& g) {
    if (fractional) return approx_fhw(g, k, options);
    return approx_ghw(g, whole, mode == ApproxMode::ghw4 ? GhwMode::factor4 : GhwMode::factor6,
                      options);
  };

  const auto parts = components(h);
  if (parts.size() == 1) return run(h);

  ApproxResult total;
  TreeDecomposition joined;
  for (const auto& part : parts) {
    ApproxResult sub = run(induced(h, part));
    total.stats.invocations += sub.stats.invocations;
    total.stats.max_depth = std::max(total.stats.max_depth, sub.stats.max_depth);
    if (auto* refusal = std::get_if<ApproxRefusal>(&sub.outcome)) {
      total.outcome = ApproxRefusal{lift(refusal->scope, part), lift(refusal->witness, part)};
      return total;
    }
    const auto& td = std::get<ApproxDecomposition>(sub.outcome).td;
    const auto offset = static_cast<NodeId>(joined.bags.size());
    for (const auto& [id, bag] : td.bags) joined.bags.emplace(id + offset, lift(bag, part));
    for (const auto& [a, b] : td.edges) joined.edges.emplace_back(a + offset, b + offset);
    if (offset > 0) joined.edges.emplace_back(1, offset + 1);
  }
  total.outcome = finish(h, std::move(joined), fractional);
  return total;
}

}  // namespace bhw
