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

#include "bhw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include "bhw/cover.hpp"
#include "bhw/errors.hpp"

namespace bhw {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kHardVertexCap = 24;

class EliminationDp {
 public:
  using Cost = std::function<Rational(const VertexSet&)>;

  EliminationDp(const Hypergraph& h, const OracleBudget& budget, Cost cost)
      : h_(h), budget_(budget), cost_(std::move(cost)), n_(h.num_vertices()), adj_(n_, 0) {
    if (n_ > budget.max_vertices || n_ > kHardVertexCap) {
      throw BudgetExceeded("exact oracle limited to " +
                           std::to_string(std::min(budget.max_vertices, kHardVertexCap)) +
                           " vertices, got " + std::to_string(n_));
    }
    for (const auto& e : h.edges()) {
      Mask m = 0;
      for (VertexId v : e.vertices) m |= Mask{1} << v;
      for (VertexId v : e.vertices) adj_[v] |= m & ~(Mask{1} << v);
    }
  }

  // Optimal width; `last_` records the vertex eliminated last in each set.
  Rational solve() {
    const Mask full = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    width_.assign(std::size_t{full} + 1, Rational(0));
    last_.assign(std::size_t{full} + 1, 0);
    for (Mask s = 1; s <= full && s != 0; ++s) {
      std::optional<Rational> best;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<VertexId>(std::countr_zero(rest));
        const Mask before = s & ~(Mask{1} << v);
        const Rational& prior = width_[before];
        if (best && prior >= *best) continue;
        const Rational& here = bag_cost(bag(before, v));
        const Rational& value = prior > here ? prior : here;
        if (!best || value < *best) {
          best = value;
          last_[s] = v;
        }
      }
      width_[s] = *best;
      if (s == full) break;
    }
    return width_[full];
  }

  // True iff some ordering keeps every bag within k; cheaper than solve().
  bool decide(const std::function<bool(const VertexSet&)>& fits) {
    const Mask full = (Mask{1} << n_) - 1;
    std::vector<bool> ok(std::size_t{full} + 1, false);
    std::unordered_map<Mask, bool> memo;
    ok[0] = true;
    for (Mask s = 1; s <= full; ++s) {
      for (Mask rest = s; rest != 0 && !ok[s]; rest &= rest - 1) {
        const auto v = static_cast<VertexId>(std::countr_zero(rest));
        const Mask before = s & ~(Mask{1} << v);
        if (!ok[before]) continue;
        const Mask b = bag(before, v);
        auto it = memo.find(b);
        if (it == memo.end()) {
          charge(memo.size());
          it = memo.emplace(b, fits(to_set(b))).first;
        }
        ok[s] = it->second;
      }
      if (s == full) break;
    }
    return ok[full];
  }

  std::vector<VertexId> order() const {
    std::vector<VertexId> out;
    Mask s = (Mask{1} << n_) - 1;
    while (s != 0) {
      out.push_back(last_[s]);
      s &= ~(Mask{1} << last_[s]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  // {v} plus everything outside `before` reachable from v through `before`.
  Mask bag(Mask before, VertexId v) const {
    Mask seen = Mask{1} << v;
    Mask out = seen;
    Mask stack = seen;
    while (stack != 0) {
      const auto u = static_cast<VertexId>(std::countr_zero(stack));
      stack &= stack - 1;
      const Mask fresh = adj_[u] & ~seen;
      seen |= fresh;
      out |= fresh & ~before;
      stack |= fresh & before;
    }
    return out;
  }

  VertexSet to_set(Mask m) const {
    VertexSet out;
    for (; m != 0; m &= m - 1) out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    return out;
  }

  void charge(std::size_t evaluated) const {
    if (evaluated >= budget_.max_candidate_bags) {
      throw BudgetExceeded("exact oracle exceeded " + std::to_string(budget_.max_candidate_bags) +
                           " candidate bags");
    }
  }

  const Rational& bag_cost(Mask b) {
    auto it = costs_.find(b);
    if (it == costs_.end()) {
      charge(costs_.size());
      it = costs_.emplace(b, cost_(to_set(b))).first;
    }
    return it->second;
  }

  const Hypergraph& h_;
  const OracleBudget& budget_;
  Cost cost_;
  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Rational> width_;
  std::vector<VertexId> last_;
  std::unordered_map<Mask, Rational> costs_;
};

EliminationDp::Cost integral_cost(const Hypergraph& h) {
  return [&h](const VertexSet& bag) {
    return Rational(static_cast<long>(edge_cover_number(h, bag).size));
  };
}

EliminationDp::Cost fractional_cost(const Hypergraph& h) {
  return [&h](const VertexSet& bag) { return fractional_cover_number(h, bag).value; };
}

ExactResult optimum(const Hypergraph& h, const OracleBudget& budget, bool fractional) {
  EliminationDp dp(h, budget, fractional ? fractional_cost(h) : integral_cost(h));
  ExactResult out;
  out.width = dp.solve();
  out.td = from_elimination_order(h, dp.order());
  const Rational check =
      fractional ? fhw_width(h, out.td).width : Rational(static_cast<long>(ghw_width(h, out.td).width));
  if (check != out.width) {
    throw InternalError("elimination ordering does not attain the computed width");
  }
  return out;
}

}  // namespace

bool exact_ghw_decide(const Hypergraph& h, std::size_t k, const OracleBudget& budget) {
  EliminationDp dp(h, budget, integral_cost(h));
  return dp.decide([&](const VertexSet& bag) { return is_cover_at_most(h, bag, k); });
}

std::size_t exact_ghw(const Hypergraph& h, const OracleBudget& budget) {
  EliminationDp dp(h, budget, integral_cost(h));
  return static_cast<std::size_t>(floor(dp.solve()));
}

Rational exact_fhw(const Hypergraph& h, const OracleBudget& budget) {
  EliminationDp dp(h, budget, fractional_cost(h));
  return dp.solve();
}

ExactResult exact_ghw_decomposition(const Hypergraph& h, const OracleBudget& budget) {
  return optimum(h, budget, false);
}

ExactResult exact_fhw_decomposition(const Hypergraph& h, const OracleBudget& budget) {
  return optimum(h, budget, true);
}

}  // namespace bhw
