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

// Command-line front end. Exit codes: 0 success, 1 NO / invalid / refused,
// 2 usage or input errors, 3 internal errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bhw/approx.hpp"
#include "bhw/cover.hpp"
#include "bhw/decomposition.hpp"
#include "bhw/errors.hpp"
#include "bhw/io.hpp"
#include "bhw/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bhw::DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bhw::DomainError("cannot write '" + path + "'");
  out << text;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
  return out;
}

struct ApproxArgs {
  std::string k;
  std::string mode = "ghw4";
  std::string input;
  std::string output;
  bool stats = false;
  unsigned threads = 1;
};

int run_approx(const ApproxArgs& a) {
  const bhw::Hypergraph h = bhw::parse_hypergraph(read_file(a.input));
  const bhw::Rational k = bhw::parse_rational(a.k);
  const bhw::ApproxMode mode = a.mode == "ghw4"   ? bhw::ApproxMode::ghw4
                               : a.mode == "ghw6" ? bhw::ApproxMode::ghw6
                                                  : bhw::ApproxMode::fhw;
  const auto result = bhw::approx_entry(h, k, mode, bhw::ApproxOptions{a.threads});
  if (a.stats) std::cerr << bhw::format_stats(result.stats) << '\n';
  if (const auto* no = std::get_if<bhw::ApproxRefusal>(&result.outcome)) {
    std::cout << "NO\n";
    std::cerr << "no balanced separator of cover at most " << bhw::to_string(k) << " for {"
              << join_labels(h.labels_of(no->witness)) << "}\n";
    return kNo;
  }
  const auto& d = std::get<bhw::ApproxDecomposition>(result.outcome);
  const auto* certs = mode == bhw::ApproxMode::fhw ? nullptr : &d.certificates;
  write_output(a.output, bhw::serialize_decomposition(h, d.td, d.width, certs));
  return kOk;
}

int run_exact(const std::string& mode, const std::string& input, const std::string& output) {
  const bhw::Hypergraph h = bhw::parse_hypergraph(read_file(input));
  const auto result =
      mode == "ghw" ? bhw::exact_ghw_decomposition(h) : bhw::exact_fhw_decomposition(h);
  std::cout << mode << ' ' << bhw::to_string(result.width) << '\n';
  if (!output.empty()) {
    const std::map<bhw::NodeId, bhw::CoverCertificate> certs =
        mode == "ghw" ? bhw::ghw_width(h, result.td).certificates
                      : std::map<bhw::NodeId, bhw::CoverCertificate>{};
    write_output(output, bhw::serialize_decomposition(h, result.td, result.width,
                                                      mode == "ghw" ? &certs : nullptr));
  }
  return kOk;
}

int run_validate(const std::string& hg_path, const std::string& td_path,
                 const std::string& check_width, bool fractional) {
  const bhw::Hypergraph h = bhw::parse_hypergraph(read_file(hg_path));
  const auto doc = bhw::parse_decomposition(read_file(td_path), h);

  std::vector<std::string> problems;
  if (doc.num_vertices != h.num_vertices() || doc.num_edges != h.num_edges()) {
    problems.push_back("header: decomposition was written for a different hypergraph");
  }
  for (const auto& v : bhw::validate(h, doc.td).violations) {
    problems.push_back(std::string(bhw::axiom_name(v.axiom)) + ": " + v.detail);
  }
  if (problems.empty()) {
    for (const auto& [id, cert] : doc.certificates) {
      const auto bag = doc.td.bags.find(id);
      if (bag == doc.td.bags.end() || !bhw::certifies(h, bag->second, cert) ||
          (!fractional && bhw::Rational(static_cast<long>(cert.size())) > doc.width)) {
        problems.push_back("certificate: line for bag " + std::to_string(id) +
                           " does not cover it within the declared width");
      }
    }
    const bhw::Rational width = fractional
                                    ? bhw::fhw_width(h, doc.td).width
                                    : bhw::Rational(static_cast<long>(bhw::ghw_width(h, doc.td).width));
    std::cout << (fractional ? "fhw " : "ghw ") << bhw::to_string(width) << '\n';
    if (!check_width.empty() && width > bhw::parse_rational(check_width)) {
      problems.push_back("width: " + bhw::to_string(width) + " exceeds " + check_width);
    }
  }
  if (problems.empty()) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid\n";
  for (const auto& p : problems) std::cout << p << '\n';
  return kNo;
}

int run_cover(const std::string& input, const std::string& set, bool fractional,
              const std::string& at_most) {
  const bhw::Hypergraph h = bhw::parse_hypergraph(read_file(input));
  std::vector<std::string> names;
  std::stringstream in(set);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) names.push_back(item);
  }
  bhw::VertexSet s;
  for (const auto& name : names) s.push_back(h.vertex_id(name));
  s = bhw::normalized(std::move(s));

  if (!at_most.empty()) {
    const bhw::Rational p = bhw::parse_rational(at_most);
    bool yes = false;
    if (fractional) {
      yes = bhw::is_fractional_cover_at_most(h, s, p);
    } else {
      if (p < 0 || !bhw::is_integral(p)) throw bhw::DomainError("--at-most needs a natural number");
      yes = bhw::is_cover_at_most(h, s, static_cast<std::size_t>(bhw::floor(p)));
    }
    std::cout << (yes ? "yes" : "no") << '\n';
    return yes ? kOk : kNo;
  }
  if (fractional) {
    const auto c = bhw::fractional_cover_number(h, s);
    std::cout << "rho* " << bhw::to_string(c.value) << '\n';
    for (const auto& [label, w] : c.weights.weights) {
      std::cout << label << ' ' << bhw::to_string(w) << '\n';
    }
  } else {
    const auto c = bhw::edge_cover_number(h, s);
    std::cout << "rho " << c.size << '\n' << join_labels(c.certificate.edge_labels) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypertree width approximation via balanced separators"};
  app.require_subcommand(1);

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "approximate ghw or fhw");
  approx_cmd->add_option("--k", approx.k, "width parameter (integer or p/q)")->required();
  approx_cmd->add_option("--mode", approx.mode, "ghw4, ghw6 or fhw")
      ->check(CLI::IsMember({"ghw4", "ghw6", "fhw"}));
  approx_cmd->add_option("--input", approx.input, ".hg file")->required();
  approx_cmd->add_option("--output", approx.output, "write the decomposition here");
  approx_cmd->add_flag("--stats", approx.stats, "print recursion statistics to stderr");
  approx_cmd->add_option("--threads", approx.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string exact_mode = "ghw", exact_input, exact_output;
  auto* exact_cmd = app.add_subcommand("exact", "exact width of a small hypergraph");
  exact_cmd->add_option("--mode", exact_mode, "ghw or fhw")->check(CLI::IsMember({"ghw", "fhw"}));
  exact_cmd->add_option("--input", exact_input, ".hg file")->required();
  exact_cmd->add_option("--output", exact_output, "write an optimal decomposition here");

  std::string val_hg, val_td, val_width;
  bool val_fractional = false;
  auto* validate_cmd = app.add_subcommand("validate", "check a decomposition");
  validate_cmd->add_option("--hypergraph", val_hg, ".hg file")->required();
  validate_cmd->add_option("--decomposition", val_td, "decomposition file")->required();
  validate_cmd->add_option("--check-width", val_width, "fail if the width exceeds W");
  validate_cmd->add_flag("--fractional", val_fractional, "measure bags by rho* instead of rho");

  std::string cover_input, cover_set, cover_at_most;
  bool cover_fractional = false;
  auto* cover_cmd = app.add_subcommand("cover", "edge cover number of a vertex set");
  cover_cmd->add_option("--input", cover_input, ".hg file")->required();
  cover_cmd->add_option("--set", cover_set, "comma-separated vertex names")->required();
  cover_cmd->add_flag("--fractional", cover_fractional, "fractional cover number");
  cover_cmd->add_option("--at-most", cover_at_most, "only decide cover <= P");

  std::size_t gen_n = 0, gen_m = 0, gen_rank = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "random connected hypergraph");
  gen_cmd->add_option("--n", gen_n, "vertices")->required();
  gen_cmd->add_option("--m", gen_m, "edges before bridging")->required();
  gen_cmd->add_option("--rank", gen_rank, "maximum edge size")->required();
  gen_cmd->add_option("--seed", gen_seed, "random seed")->required();
  gen_cmd->add_option("--output", gen_output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*approx_cmd) return run_approx(approx);
    if (*exact_cmd) return run_exact(exact_mode, exact_input, exact_output);
    if (*validate_cmd) return run_validate(val_hg, val_td, val_width, val_fractional);
    if (*cover_cmd) return run_cover(cover_input, cover_set, cover_fractional, cover_at_most);
    if (*gen_cmd) {
      write_output(gen_output, bhw::serialize_hypergraph(
                                   bhw::generate_random(gen_n, gen_m, gen_rank, gen_seed)));
      return kOk;
    }
  } catch (const bhw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const bhw::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bhw::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kNo;
  } catch (const bhw::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
