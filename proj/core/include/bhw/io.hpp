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
 * Text formats.
 *
 * Hypergraphs (.hg): one edge per line, whitespace-separated vertex names,
 * an optional leading `label:` token, `#` comments. Unlabeled edges are
 * named e1, e2, ... by their position among the edges.
 *
 * Decompositions:
 *
 *     s ghtd <bags> <num>/<den> <vertices> <edges>
 *     b <id> <vertex>...
 *     t <id> <id>
 *     c <id> <edge label>...
 */

#ifndef BHW_IO_HPP
#define BHW_IO_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bhw/approx.hpp"
#include "bhw/cover.hpp"
#include "bhw/decomposition.hpp"
#include "bhw/hypergraph.hpp"
#include "bhw/rational.hpp"

namespace bhw {

struct HgDocument {
  std::vector<std::string> lines;
  Hypergraph hypergraph;
  /// 1-based source line of each edge, in edge order.
  std::vector<std::size_t> edge_lines;
};

/// Throws ParseError for a line with a label but no vertices, a repeated
/// edge label, an empty label, or input without any edge.
HgDocument parse_hg_document(std::string_view text);
Hypergraph parse_hypergraph(std::string_view text);

/// Every edge as `label: v...` in edge order.
std::string serialize_hypergraph(const Hypergraph& h);

/// Bags are renumbered 1..N in ascending id order. Throws DomainError if td
/// is not valid for h.
std::string serialize_decomposition(const Hypergraph& h, const TreeDecomposition& td,
                                    const Rational& width,
                                    const std::map<NodeId, CoverCertificate>* certificates = nullptr);

struct DecompositionDocument {
  Rational width;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  TreeDecomposition td;
  std::map<NodeId, CoverCertificate> certificates;
};

/// Vertex names are resolved against h. Structural problems (bad header,
/// unknown vertex, count mismatch) raise ParseError; axiom violations are
/// left to validate().
DecompositionDocument parse_decomposition(std::string_view text, const Hypergraph& h);

/// `{invocations: N, depth: D}`
std::string format_stats(const RunStats& stats);

/// Vertices v1..vn; m edges e1..em whose sizes are uniform in [2, rank],
/// followed by size-two bridging edges that join consecutive components.
/// The output depends only on the arguments. Requires n >= 2, m >= 1 and
/// 2 <= rank <= n.
Hypergraph generate_random(std::size_t n, std::size_t m, std::size_t rank, std::uint64_t seed);

}  // namespace bhw

#endif  // BHW_IO_HPP
