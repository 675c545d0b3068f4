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

#include "symgauss/partition.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "symgauss/error.hpp"

namespace symgauss {

Partition Partition::from_blocks(std::size_t ground_size, std::vector<std::vector<int>> blocks) {
  std::vector<int> owner(ground_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::EmptyBlock, "block " + std::to_string(b) + " is empty");
    for (int e : blocks[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= ground_size) {
        throw Error(ErrorKind::UnknownElement, "element " + std::to_string(e) + " is outside the ground set");
      }
      if (owner[static_cast<std::size_t>(e)] != -1) {
        throw Error(ErrorKind::OverlappingBlocks,
                    "element " + std::to_string(e) + " appears in more than one block");
      }
      owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
  for (std::size_t e = 0; e < ground_size; ++e) {
    if (owner[e] == -1) {
      throw Error(ErrorKind::UncoveredElement, "element " + std::to_string(e) + " is in no block");
    }
  }
  return from_labels(owner);
}

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.block_of_.assign(labels.size(), -1);
  std::unordered_map<int, int> index_of_label;
  for (std::size_t e = 0; e < labels.size(); ++e) {
    auto [it, inserted] = index_of_label.try_emplace(labels[e], static_cast<int>(p.blocks_.size()));
    if (inserted) p.blocks_.emplace_back();
    p.blocks_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(e));
    p.block_of_[e] = it->second;
  }
  return p;
}

Partition Partition::singletons(std::size_t ground_size) {
  std::vector<int> labels(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) labels[i] = static_cast<int>(i);
  return from_labels(labels);
}

Partition Partition::whole(std::size_t ground_size) {
  std::vector<int> labels(ground_size, 0);
  return from_labels(labels);
}

bool is_finer(const Partition& m1, const Partition& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw Error(ErrorKind::GroundMismatch, "partitions have ground sizes " + std::to_string(m1.ground_size()) +
                                               " and " + std::to_string(m2.ground_size()));
  }
  for (const auto& block : m1.blocks()) {
    const int target = m2.block_of(block.front());
    for (int e : block) {
      if (m2.block_of(e) != target) return false;
    }
  }
  return true;
}

Partition make_partition(std::span<const std::string> ground,
                         const std::vector<std::vector<std::string>>& blocks) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!index.emplace(ground[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::ValidationError, "duplicate ground element '" + ground[i] + "'");
    }
  }
  std::vector<std::vector<int>> idx_blocks;
  idx_blocks.reserve(blocks.size());
  for (const auto& block : blocks) {
    auto& out = idx_blocks.emplace_back();
    for (const auto& label : block) {
      auto it = index.find(label);
      if (it == index.end()) throw Error(ErrorKind::UnknownElement, "'" + label + "' is not in the ground set");
      out.push_back(it->second);
    }
  }
  try {
    return Partition::from_blocks(ground.size(), std::move(idx_blocks));
  } catch (const Error& e) {
    // Re-raise with labels rather than indices.
    if (e.kind() == ErrorKind::UncoveredElement) {
      std::vector<bool> seen(ground.size(), false);
      for (const auto& b : blocks)
        for (const auto& l : b) seen[static_cast<std::size_t>(index.at(l))] = true;
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (!seen[i]) throw Error(ErrorKind::UncoveredElement, "'" + ground[i] + "' is in no block");
    }
    if (e.kind() == ErrorKind::OverlappingBlocks) {
      std::vector<int> count(ground.size(), 0);
      for (const auto& b : blocks)
        for (const auto& l : b)
          if (++count[static_cast<std::size_t>(index.at(l))] > 1)
            throw Error(ErrorKind::OverlappingBlocks, "'" + l + "' appears in more than one block");
    }
    throw;
  }
}

std::string format_partition(const Partition& p, std::span<const std::string> labels) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += labels[static_cast<std::size_t>(block[i])];
    }
    out += '}';
  }
  return out;
}

void for_each_restricted_growth_string(std::size_t n,
                                       const std::function<bool(std::span<const int>)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<int> rgs(n, 0);
  // prefix_max[i] = max(rgs[0..i]).
  std::vector<int> prefix_max(n, 0);
  while (true) {
    if (!visit(rgs)) return;
    // Find the rightmost position that can be incremented.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::size_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace symgauss
