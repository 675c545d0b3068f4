// Copyright 2026 The symgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symgauss/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "symgauss/error.hpp"

namespace symgauss {

namespace {

const std::vector<std::string> kSections = {"vertices",       "edges",      "vertex_classes",
                                            "edge_classes",   "generators", "mean_partition"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// Labels separated by whitespace and/or commas.
std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

void check_label(const std::string& label, int line) {
  static constexpr std::string_view kForbidden = "{}()[]#,\"'";
  const bool bad = label.empty() || label.find_first_of(kForbidden) != std::string::npos ||
                   label.find("--") != std::string::npos || label.find("->") != std::string::npos ||
                   std::any_of(label.begin(), label.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (bad) parse_fail(line, "invalid vertex label '" + label + "'");
}

std::pair<std::string, std::string> parse_edge(std::string_view text, int line) {
  const auto pos = text.find("--");
  if (pos == std::string_view::npos) parse_fail(line, "expected 'A -- B', got '" + std::string(text) + "'");
  const auto left = tokens(text.substr(0, pos));
  const auto right = tokens(text.substr(pos + 2));
  if (left.size() != 1 || right.size() != 1) parse_fail(line, "expected 'A -- B', got '" + std::string(trim(text)) + "'");
  return {left[0], right[0]};
}

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::string_view text, int line) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto piece : split(text, ',')) {
    if (trim(piece).empty()) continue;
    out.push_back(parse_edge(piece, line));
  }
  return out;
}

// One block per line, or several in brace notation.
std::vector<std::vector<std::string>> parse_block_line(std::string_view text, int line) {
  if (trim(text).starts_with('{')) {
    try {
      return parse_blocks(text);
    } catch (const Error& e) {
      parse_fail(line, e.what());
    }
  }
  return {tokens(text)};
}

std::vector<std::vector<std::string>> parse_cycles(std::string_view text, int line) {
  std::vector<std::vector<std::string>> cycles;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() != '(') parse_fail(line, "expected '(' in cycle notation");
    const auto close = rest.find(')');
    if (close == std::string_view::npos) parse_fail(line, "unterminated cycle");
    auto cycle = tokens(rest.substr(1, close - 1));
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    rest = trim(rest.substr(close + 1));
  }
  return cycles;
}

Permutation parse_generator(std::string_view text, const std::vector<std::string>& vertices, int line) {
  try {
    if (trim(text).starts_with('(')) return Permutation::from_cycles(vertices, parse_cycles(text, line));
    std::map<std::string, std::string> mapping;
    for (auto piece : split(text, ',')) {
      if (trim(piece).empty()) continue;
      const auto pos = piece.find("->");
      if (pos == std::string_view::npos) parse_fail(line, "expected 'A -> B' or cycle notation");
      const auto from = tokens(piece.substr(0, pos));
      const auto to = tokens(piece.substr(pos + 2));
      if (from.size() != 1 || to.size() != 1) parse_fail(line, "expected 'A -> B'");
      if (!mapping.emplace(from[0], to[0]).second) parse_fail(line, "'" + from[0] + "' mapped twice");
    }
    return Permutation::from_mapping(vertices, mapping);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ValidationError, "line " + std::to_string(line) + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

template <typename F>
auto as_validation_error(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAutomorphism || e.kind() == ErrorKind::ValidationError ||
        e.kind() == ErrorKind::ParseError) {
      throw;
    }
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

}  // namespace

std::vector<std::vector<std::string>> parse_blocks(std::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() == ',') {
      rest = trim(rest.substr(1));
      continue;
    }
    if (rest.front() != '{') throw Error(ErrorKind::ParseError, "expected '{' in partition '" + std::string(text) + "'");
    const auto close = rest.find('}');
    if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "unterminated block in '" + std::string(text) + "'");
    blocks.push_back(tokens(rest.substr(1, close - 1)));
    rest = trim(rest.substr(close + 1));
  }
  if (blocks.empty()) throw Error(ErrorKind::ParseError, "empty partition");
  return blocks;
}

ModelSpec parse_model(std::string_view text) {
  std::map<std::string, std::vector<std::pair<int, std::string>>> sections;
  std::string current;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(lineno, "malformed section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), current) == kSections.end()) {
        parse_fail(lineno, "unknown section [" + current + "]");
      }
      if (!sections.emplace(current, std::vector<std::pair<int, std::string>>{}).second) {
        parse_fail(lineno, "duplicate section [" + current + "]");
      }
      continue;
    }
    if (current.empty()) parse_fail(lineno, "content before the first section header");
    sections[current].emplace_back(lineno, std::string(line));
  }

  ModelSpec spec;
  if (!sections.contains("vertices")) throw Error(ErrorKind::ParseError, "missing [vertices] section");
  for (const auto& [ln, line] : sections["vertices"]) {
    for (auto& label : tokens(line)) {
      check_label(label, ln);
      spec.vertices.push_back(std::move(label));
    }
  }
  if (auto it = sections.find("edges"); it != sections.end()) {
    for (const auto& [ln, line] : it->second) {
      auto edges = parse_edge_list(line, ln);
      spec.edges.insert(spec.edges.end(), edges.begin(), edges.end());
    }
  }
  if (auto it = sections.find("vertex_classes"); it != sections.end()) {
    auto& classes = spec.vertex_classes.emplace();
    for (const auto& [ln, line] : it->second) {
      auto blocks = parse_block_line(line, ln);
      classes.insert(classes.end(), blocks.begin(), blocks.end());
    }
  }
  if (auto it = sections.find("edge_classes"); it != sections.end()) {
    auto& classes = spec.edge_classes.emplace();
    for (const auto& [ln, line] : it->second) classes.push_back(parse_edge_list(line, ln));
  }
  if (auto it = sections.find("generators"); it != sections.end()) {
    auto& gens = spec.generators.emplace();
    for (const auto& [ln, line] : it->second) gens.push_back(parse_generator(line, spec.vertices, ln));
  }
  if (auto it = sections.find("mean_partition"); it != sections.end()) {
    auto& blocks = spec.mean_partition.emplace();
    for (const auto& [ln, line] : it->second) {
      auto parsed = parse_block_line(line, ln);
      blocks.insert(blocks.end(), parsed.begin(), parsed.end());
    }
  }
  return spec;
}

std::string serialize_model(const ModelSpec& spec) {
  std::string out = "[vertices]\n" + join(spec.vertices, " ") + "\n";
  if (!spec.edges.empty()) {
    out += "\n[edges]\n";
    for (const auto& [a, b] : spec.edges) out += a + " -- " + b + "\n";
  }
  if (spec.vertex_classes) {
    out += "\n[vertex_classes]\n";
    for (const auto& block : *spec.vertex_classes) out += join(block, " ") + "\n";
  }
  if (spec.edge_classes) {
    out += "\n[edge_classes]\n";
    for (const auto& block : *spec.edge_classes) {
      std::vector<std::string> parts;
      for (const auto& [a, b] : block) parts.push_back(a + " -- " + b);
      out += join(parts, ", ") + "\n";
    }
  }
  if (spec.generators) {
    out += "\n[generators]\n";
    for (const auto& g : *spec.generators) out += g.to_cycle_string(spec.vertices) + "\n";
  }
  if (spec.mean_partition) {
    out += "\n[mean_partition]\n";
    for (const auto& block : *spec.mean_partition) out += join(block, " ") + "\n";
  }
  return out;
}

Graph build_graph(const ModelSpec& spec) {
  return as_validation_error([&] { return Graph(spec.vertices, spec.edges); });
}

ColoredGraph build_colored_graph(const ModelSpec& spec) {
  Graph graph = build_graph(spec);
  const bool explicit_coloring = spec.vertex_classes.has_value() || spec.edge_classes.has_value();
  if (explicit_coloring && spec.generators) {
    throw Error(ErrorKind::ValidationError, "give either an explicit coloring or generators, not both");
  }
  if (spec.generators) {
    for (const auto& g : *spec.generators) {
      if (g.size() != graph.num_vertices()) throw Error(ErrorKind::ValidationError, "generator size mismatch");
    }
    return rcop_coloring(graph, *spec.generators);
  }
  if (!spec.vertex_classes) throw Error(ErrorKind::ValidationError, "the model needs [vertex_classes] or [generators]");
  if (!spec.edge_classes && graph.num_edges() > 0) {
    throw Error(ErrorKind::ValidationError, "[edge_classes] is required when the graph has edges");
  }
  const auto edge_classes = spec.edge_classes.value_or(std::vector<std::vector<std::pair<std::string, std::string>>>{});
  return as_validation_error(
      [&] { return ColoredGraph::from_labels(std::move(graph), *spec.vertex_classes, edge_classes); });
}

Partition resolve_partition(std::string_view text, const ColoredGraph& g) {
  const std::string_view t = trim(text);
  if (t == "singletons") return Partition::singletons(g.num_vertices());
  if (t == "classes") return g.vertex_coloring();
  const auto blocks = parse_blocks(t);
  return as_validation_error([&] { return make_partition(g.graph().vertices(), blocks); });
}

Dataset parse_csv(std::string_view text, const std::vector<std::string>& vertices) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  auto unquote = [](std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return std::string(s);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (header.empty()) {
      for (auto f : fields) header.push_back(unquote(f));
      continue;
    }
    if (fields.size() != header.size()) {
      parse_fail(lineno, "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    }
    auto& row = rows.emplace_back();
    for (auto f : fields) {
      const std::string_view v = trim(f);
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
      if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
        parse_fail(lineno, "not a number: '" + std::string(v) + "'");
      }
      row.push_back(x);
    }
  }
  if (header.empty()) throw Error(ErrorKind::ParseError, "data file is empty");

  std::vector<std::size_t> column_of;
  for (const auto& v : vertices) {
    const auto hits = std::count(header.begin(), header.end(), v);
    if (hits == 0) throw Error(ErrorKind::ColumnMismatch, "data has no column '" + v + "'");
    if (hits > 1) throw Error(ErrorKind::ColumnMismatch, "data has duplicate column '" + v + "'");
    column_of.push_back(static_cast<std::size_t>(std::find(header.begin(), header.end(), v) - header.begin()));
  }
  for (const auto& h : header) {
    if (std::find(vertices.begin(), vertices.end(), h) == vertices.end()) {
      throw Error(ErrorKind::ColumnMismatch, "data column '" + h + "' is not a model vertex");
    }
  }
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][column_of[j]];
  return as_validation_error([&] { return Dataset(vertices, std::move(m)); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace symgauss
