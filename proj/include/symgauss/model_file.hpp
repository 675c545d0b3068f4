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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/estimation.hpp"
#include "symgauss/rcop.hpp"

namespace symgauss {

// Text model file, sections introduced by "[name]" lines, '#' comments:
//
//   [vertices]        labels separated by spaces or commas
//   [edges]           "A -- B", one or more per line separated by commas
//   [vertex_classes]  one class per line: "B1 B2" (or "{B1,B2}{L1,L2}")
//   [edge_classes]    one class per line: "B1 -- L1, B2 -- L2"
//   [generators]      one permutation per line, cycle notation "(B1 B2)(L1 L2)"
//                     or explicit mapping "B1 -> B2, B2 -> B1"
//   [mean_partition]  blocks as for vertex_classes
//
// Exactly one of {vertex_classes (+ edge_classes when there are edges),
// generators} must be present.
struct ModelSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::vector<std::vector<std::string>>> vertex_classes;
  std::optional<std::vector<std::vector<std::pair<std::string, std::string>>>> edge_classes;
  std::optional<std::vector<Permutation>> generators;
  std::optional<std::vector<std::vector<std::string>>> mean_partition;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// Throws ParseError (syntax, with line number) or ValidationError.
ModelSpec parse_model(std::string_view text);
// Generators are written in cycle notation.
std::string serialize_model(const ModelSpec& spec);

// Throws ValidationError; NotAutomorphism for a bad generator.
Graph build_graph(const ModelSpec& spec);
ColoredGraph build_colored_graph(const ModelSpec& spec);

// Blocks in brace notation: "{B1,B2}{L1,L2}" (commas between blocks and
// whitespace are allowed). Throws ParseError.
std::vector<std::vector<std::string>> parse_blocks(std::string_view text);

// A mean partition from a flag value: brace notation, "singletons", or
// "classes" (the vertex coloring). Throws ParseError or ValidationError.
Partition resolve_partition(std::string_view text, const ColoredGraph& g);

// Comma-separated data with a header row of variable names. Columns are
// matched to `vertices` by name and reordered to vertex order. Throws
// ParseError or ColumnMismatch.
Dataset parse_csv(std::string_view text, const std::vector<std::string>& vertices);

std::string read_file(const std::string& path);

// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace symgauss
