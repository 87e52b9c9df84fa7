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

#include "bhw/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace

HgDocument parse_hg_document(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::string> taken;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto toks = tokens(strip_comment(lines[i]));
    if (toks.empty()) continue;

    std::string label;
    if (toks.front().back() == ':') {
      label = toks.front().substr(0, toks.front().size() - 1);
      if (label.empty()) throw ParseError(line_no, "empty edge label");
      toks.erase(toks.begin());
      if (toks.empty()) throw ParseError(line_no, "edge '" + label + "' has no vertices");
    } else {
      label = "e" + std::to_string(edges.size() + 1);
    }
    if (!taken.insert(label).second) {
      throw ParseError(line_no, "duplicate edge label '" + label + "'");
    }
    edges.emplace_back(std::move(label), std::move(toks));
    edge_lines.push_back(line_no);
  }
  if (edges.empty()) {
    throw ParseError(std::max<std::size_t>(lines.size(), 1), "input contains no edges");
  }
  return HgDocument{std::move(lines), Hypergraph::from_edge_list(edges), std::move(edge_lines)};
}

Hypergraph parse_hypergraph(std::string_view text) { return parse_hg_document(text).hypergraph; }

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    out += e.label;
    out += ':';
    for (VertexId v : e.vertices) {
      out += ' ';
      out += h.vertex_label(v);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_decomposition(const Hypergraph& h, const TreeDecomposition& td,
                                    const Rational& width,
                                    const std::map<NodeId, CoverCertificate>* certificates) {
  const auto report = validate(h, td);
  if (!report.valid()) {
    throw DomainError("refusing to write an invalid decomposition: " +
                      report.violations.front().detail);
  }
  std::map<NodeId, NodeId> renumber;
  for (const auto& [id, bag] : td.bags) {
    renumber.emplace(id, static_cast<NodeId>(renumber.size() + 1));
  }

  std::string out = "s ghtd " + std::to_string(td.bags.size()) + " " + format_fraction(width) +
                    " " + std::to_string(h.num_vertices()) + " " +
                    std::to_string(h.num_edges()) + "\n";
  for (const auto& [id, bag] : td.bags) {
    out += "b " + std::to_string(renumber.at(id));
    for (VertexId v : bag) out += " " + h.vertex_label(v);
    out += '\n';
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [a, b] : td.edges) edges.push_back(std::minmax(renumber.at(a), renumber.at(b)));
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) {
    out += "t " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  if (certificates) {
    for (const auto& [id, cert] : *certificates) {
      out += "c " + std::to_string(renumber.at(id));
      for (const auto& label : cert.edge_labels) out += " " + label;
      out += '\n';
    }
  }
  return out;
}

DecompositionDocument parse_decomposition(std::string_view text, const Hypergraph& h) {
  const auto lines = split_lines(text);
  DecompositionDocument doc;
  bool header = false;
  std::size_t declared_bags = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto toks = tokens(strip_comment(lines[i]));
    if (toks.empty()) continue;
    const std::string& kind = toks.front();

    if (!header) {
      if (kind != "s" || toks.size() != 6 || toks[1] != "ghtd") {
        throw ParseError(line_no, "expected header 's ghtd <bags> <width> <n> <m>'");
      }
      declared_bags = parse_count(toks[2], line_no, "bag count");
      try {
        doc.width = parse_rational(toks[3]);
      } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
      }
      doc.num_vertices = parse_count(toks[4], line_no, "vertex count");
      doc.num_edges = parse_count(toks[5], line_no, "edge count");
      header = true;
      continue;
    }

    if (kind == "b") {
      if (toks.size() < 2) throw ParseError(line_no, "bag line needs an id");
      const auto id = static_cast<NodeId>(parse_count(toks[1], line_no, "bag id"));
      VertexSet bag;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        const auto v = h.find_vertex(toks[t]);
        if (!v) throw ParseError(line_no, "unknown vertex '" + toks[t] + "'");
        bag.push_back(*v);
      }
      if (!doc.td.bags.emplace(id, normalized(std::move(bag))).second) {
        throw ParseError(line_no, "bag " + std::to_string(id) + " declared twice");
      }
    } else if (kind == "t") {
      if (toks.size() != 3) throw ParseError(line_no, "tree edge line needs two ids");
      doc.td.edges.emplace_back(static_cast<NodeId>(parse_count(toks[1], line_no, "node id")),
                                static_cast<NodeId>(parse_count(toks[2], line_no, "node id")));
    } else if (kind == "c") {
      if (toks.size() < 2) throw ParseError(line_no, "certificate line needs an id");
      const auto id = static_cast<NodeId>(parse_count(toks[1], line_no, "bag id"));
      CoverCertificate cert;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        if (!h.find_edge(toks[t])) throw ParseError(line_no, "unknown edge '" + toks[t] + "'");
        cert.edge_labels.push_back(toks[t]);
      }
      std::sort(cert.edge_labels.begin(), cert.edge_labels.end(),
                [](const std::string& a, const std::string& b) { return label_less(a, b); });
      doc.certificates[id] = std::move(cert);
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!header) throw ParseError(std::max<std::size_t>(lines.size(), 1), "missing header");
  if (doc.td.bags.size() != declared_bags) {
    throw ParseError(0, "header declares " + std::to_string(declared_bags) + " bags, found " +
                            std::to_string(doc.td.bags.size()));
  }
  return doc;
}

std::string format_stats(const RunStats& stats) {
  return "{invocations: " + std::to_string(stats.invocations) +
         ", depth: " + std::to_string(stats.max_depth) + "}";
}

}  // namespace bhw
