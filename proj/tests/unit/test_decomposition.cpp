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

#include <random>

#include <gtest/gtest.h>

#include "bhw/cover.hpp"
#include "bhw/decomposition.hpp"
#include "bhw/errors.hpp"
#include "bhw/oracle.hpp"
#include "brute.hpp"
#include "fixtures.hpp"

namespace bhw {
namespace {

using fixtures::ids;

TreeDecomposition edge_bag_path(const Hypergraph& h) {
  TreeDecomposition td;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    td.bags[static_cast<NodeId>(i + 1)] = h.edge(i).vertices;
    if (i > 0) td.edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  }
  return td;
}

std::set<std::string> names(const ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(std::string(axiom_name(v.axiom)));
  return out;
}

TEST(Validate, PathIsValid) {
  const auto p5 = fixtures::p5();
  EXPECT_TRUE(validate(p5, edge_bag_path(p5)).valid());
}

TEST(Validate, MissingEdge) {
  const auto p5 = fixtures::p5();
  auto td = edge_bag_path(p5);
  td.bags[2] = ids(p5, {"2"});
  const auto report = validate(p5, td);
  EXPECT_TRUE(report.has(Axiom::containment));
  EXPECT_EQ(names(report), (std::set<std::string>{"containment"}));
  EXPECT_NE(report.violations[0].detail.find("2-3"), std::string::npos);
}

TEST(Validate, DisconnectedOccurrences) {
  const auto p5 = fixtures::p5();
  auto td = edge_bag_path(p5);
  td.bags[4] = set_union(td.bags[4], ids(p5, {"1"}));
  const auto report = validate(p5, td);
  EXPECT_EQ(names(report), (std::set<std::string>{"connectedness"}));
}

TEST(Validate, TreeShapeAndUnknownVertices) {
  const auto p5 = fixtures::p5();
  auto cyc = edge_bag_path(p5);
  cyc.edges.emplace_back(1, 4);
  EXPECT_TRUE(validate(p5, cyc).has(Axiom::tree));

  auto forest = edge_bag_path(p5);
  forest.edges.pop_back();
  EXPECT_TRUE(validate(p5, forest).has(Axiom::tree));

  auto dangling = edge_bag_path(p5);
  dangling.edges.emplace_back(4, 9);
  EXPECT_TRUE(validate(p5, dangling).has(Axiom::tree));

  auto loop = edge_bag_path(p5);
  loop.edges.emplace_back(2, 2);
  EXPECT_TRUE(validate(p5, loop).has(Axiom::tree));

  auto stray = edge_bag_path(p5);
  stray.bags[1].push_back(17);
  EXPECT_TRUE(validate(p5, stray).has(Axiom::bag));

  auto missing = edge_bag_path(p5);
  missing.bags.erase(4);
  missing.edges.pop_back();
  EXPECT_EQ(names(validate(p5, missing)), (std::set<std::string>{"union", "containment"}));

  EXPECT_TRUE(validate(p5, TreeDecomposition{}).has(Axiom::tree));
}

TEST(Validate, ReportsEveryViolation) {
  const auto p5 = fixtures::p5();
  TreeDecomposition td;
  td.bags = {{1, ids(p5, {"1", "2"})}, {2, ids(p5, {"3"})}, {3, ids(p5, {"1"})}};
  td.edges = {{1, 2}, {2, 3}};
  EXPECT_EQ(names(validate(p5, td)),
            (std::set<std::string>{"union", "containment", "connectedness"}));
}

TEST(Widths, Examples) {
  const auto p5 = fixtures::p5();
  EXPECT_EQ(ghw_width(p5, edge_bag_path(p5)).width, 1u);
  const auto tri = fixtures::tri();
  TreeDecomposition single;
  single.bags[1] = tri.all_vertices();
  const auto g = ghw_width(tri, single);
  EXPECT_EQ(g.width, 2u);
  EXPECT_TRUE(certifies(tri, single.bags[1], g.certificates.at(1)));
  const auto f = fhw_width(tri, single);
  EXPECT_EQ(f.width, Rational(3, 2));
  EXPECT_TRUE(certifies(tri, single.bags[1], f.weights.at(1)));

  auto bad = edge_bag_path(p5);
  bad.bags.erase(1);
  EXPECT_THROW(ghw_width(p5, bad), DomainError);
  EXPECT_THROW(fhw_width(p5, bad), DomainError);
}

TEST(EliminationOrder, ProducesValidDecompositions) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = fixtures::random_instance(3 + seed % 9, 3, seed);
    std::vector<VertexId> order = h.all_vertices();
    std::shuffle(order.begin(), order.end(), rng);
    const auto td = from_elimination_order(h, order);
    EXPECT_TRUE(validate(h, td).valid()) << "seed " << seed;
    EXPECT_TRUE(brute::violated_axioms(h, td).empty()) << "seed " << seed;
    EXPECT_EQ(td.num_nodes(), h.num_vertices());
  }
  const auto p5 = fixtures::p5();
  EXPECT_THROW(from_elimination_order(p5, {0, 1, 2}), DomainError);
}

TEST(FindBalancedNode, PathOfEdges) {
  const auto p9 = fixtures::p9();
  const auto td = edge_bag_path(p9);
  const auto all = p9.all_vertices();
  const NodeId x = find_balanced_node(p9, td, 1, all, NodeId{1});
  EXPECT_TRUE(is_balanced_separator(p9, all, td.bags.at(x), 1, CoverMode::integral));
  EXPECT_EQ(find_balanced_node(p9, td, 1, all), x);
  // Starting from the answer returns it unchanged.
  EXPECT_EQ(find_balanced_node(p9, td, 1, all, x), x);
  const NodeId y = find_balanced_node(p9, td, 1, all, NodeId{8}, CoverMode::fractional);
  EXPECT_TRUE(is_balanced_separator(p9, all, td.bags.at(y), 1, CoverMode::fractional));
}

TEST(FindBalancedNode, Preconditions) {
  const auto p9 = fixtures::p9();
  const auto td = edge_bag_path(p9);
  EXPECT_THROW(find_balanced_node(p9, td, 1, ids(p9, {"1", "3", "5"})), DomainError);
  EXPECT_THROW(find_balanced_node(p9, td, 1, p9.all_vertices(), NodeId{42}), DomainError);
  auto wide = td;
  wide.bags[1] = ids(p9, {"1", "2", "4"});
  wide.bags[2] = ids(p9, {"2", "3", "4"});
  EXPECT_THROW(find_balanced_node(p9, wide, 1, p9.all_vertices()), DomainError);
}

TEST(FindBalancedNode, OnOptimalDecompositions) {
  std::mt19937_64 rng(11);
  int walks = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto h = fixtures::random_instance(5 + seed % 6, 2 + seed % 2, seed);
    const auto best = exact_ghw_decomposition(h);
    const auto k = static_cast<std::size_t>(best.width.convert_to<long>());
    VertexSet s = h.all_vertices();
    if (edge_cover_number(h, s).size < 3 * k + 1) continue;
    for (int start = 0; start < 3; ++start) {
      auto it = best.td.bags.begin();
      std::advance(it, static_cast<long>(rng() % best.td.bags.size()));
      const NodeId x = find_balanced_node(h, best.td, Rational(static_cast<long>(k)), s, it->first);
      EXPECT_TRUE(is_balanced_separator(h, s, best.td.bags.at(x), Rational(static_cast<long>(k)),
                                        CoverMode::integral));
      EXPECT_TRUE(brute::is_balanced(h, brute::to_mask(s), brute::to_mask(best.td.bags.at(x)), false));
      ++walks;
    }
  }
  EXPECT_GT(walks, 30);
}

// Components of T - x and the vertices B(V') - B(x) they hold.
std::vector<VertexSet> pieces_below(const TreeDecomposition& td, NodeId x) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<VertexSet> out;
  for (NodeId n : adj[x]) {
    std::set<NodeId> seen{x, n};
    std::vector<NodeId> stack{n};
    VertexSet verts;
    while (!stack.empty()) {
      const NodeId cur = stack.back();
      stack.pop_back();
      verts = set_union(verts, td.bags.at(cur));
      for (NodeId next : adj[cur]) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    out.push_back(set_difference(verts, td.bags.at(x)));
  }
  return out;
}

TEST(DecompositionProperties, PiecesAreUnionsOfComponentsAndCoversAdd) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto h = fixtures::random_instance(4 + seed % 7, 3, seed);
    std::vector<VertexId> order = h.all_vertices();
    std::shuffle(order.begin(), order.end(), rng);
    const auto td = from_elimination_order(h, order);
    for (const auto& [x, bag] : td.bags) {
      const auto comps = brute::components_avoiding(h, brute::to_mask(bag));
      VertexSet all_u;
      Rational frac_sum = 0;
      std::size_t int_sum = 0;
      for (const auto& piece : pieces_below(td, x)) {
        const auto pm = brute::to_mask(piece);
        for (auto c : comps) EXPECT_TRUE((c & pm) == 0 || (c & ~pm) == 0);
        VertexSet u;
        for (VertexId v : piece) {
          if (rng() & 1) u.push_back(v);
        }
        all_u = set_union(all_u, u);
        int_sum += brute::rho(h, u);
        frac_sum += brute::rho_star(h, u);
      }
      EXPECT_EQ(brute::rho(h, all_u), int_sum);
      EXPECT_EQ(brute::rho_star(h, all_u), frac_sum);
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace bhw
