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

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace symgauss {

// A set partition of the ground set {0, ..., n-1}.
//
// Canonical form: each block is sorted ascending and blocks are ordered by
// their smallest element, so operator== is semantic equality. Block index i
// therefore always refers to the block whose minimum is the i-th smallest
// block minimum.
class Partition {
 public:
  Partition() = default;

  // Validates and canonicalizes. Throws EmptyBlock, OverlappingBlocks,
  // UncoveredElement, or UnknownElement (index out of range).
  static Partition from_blocks(std::size_t ground_size, std::vector<std::vector<int>> blocks);

  // Groups elements with equal labels. labels[i] is any integer tag.
  static Partition from_labels(std::span<const int> labels);

  static Partition singletons(std::size_t ground_size);
  static Partition whole(std::size_t ground_size);

  std::size_t ground_size() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(std::size_t i) const { return blocks_[i]; }
  int block_of(int element) const { return block_of_[static_cast<std::size_t>(element)]; }
  const std::vector<int>& block_index() const { return block_of_; }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// True iff every block of m1 lies inside some block of m2 (m1 <= m2).
// Throws GroundMismatch when the ground sizes differ.
bool is_finer(const Partition& m1, const Partition& m2);

// Builds a partition of `ground` from blocks given by label.
Partition make_partition(std::span<const std::string> ground,
                         const std::vector<std::vector<std::string>>& blocks);

// "{B1,B2}{L1,L2}" using the supplied labels for the ground elements.
std::string format_partition(const Partition& p, std::span<const std::string> labels);

// Visits every set partition of {0..n-1} as a restricted-growth string
// (rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])) in lexicographic order.
// The callback returns false to stop early.
void for_each_restricted_growth_string(std::size_t n,
                                       const std::function<bool(std::span<const int>)>& visit);

// Bell number B(n); exact for n <= 25.
std::size_t bell_number(std::size_t n);

}  // namespace symgauss
