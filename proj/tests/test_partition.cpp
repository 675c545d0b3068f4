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

#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symgauss/error.hpp"
#include "symgauss/partition.hpp"

using namespace symgauss;

namespace {

const std::vector<std::string> kFrets = {"B1", "B2", "L1", "L2"};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("make_partition builds canonical partitions") {
  const std::vector<std::string> ab = {"a", "b"};
  CHECK(make_partition(ab, {{"b"}, {"a"}}) == Partition::singletons(2));

  const auto p = make_partition(kFrets, {{"L2", "L1"}, {"B2", "B1"}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(format_partition(p, kFrets) == "{B1,B2}{L1,L2}");
}

TEST_CASE("make_partition rejects malformed blocks") {
  const std::vector<std::string> ab = {"a", "b"};
  CHECK(kind_of([&] { make_partition(ab, {{"a", "b"}, {"b"}}); }) == ErrorKind::OverlappingBlocks);
  CHECK(kind_of([&] { make_partition(ab, {{"a"}}); }) == ErrorKind::UncoveredElement);
  CHECK(kind_of([&] { make_partition(ab, {{"a", "b"}, {}}); }) == ErrorKind::EmptyBlock);
  CHECK(kind_of([&] { make_partition(ab, {{"a", "c"}}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("is_finer examples") {
  const auto coarse = make_partition(kFrets, {{"B1", "B2"}, {"L1", "L2"}});
  CHECK(is_finer(Partition::singletons(4), coarse));
  CHECK(is_finer(make_partition(kFrets, {{"B1", "B2"}, {"L1"}, {"L2"}}), coarse));
  CHECK_FALSE(is_finer(make_partition(kFrets, {{"B1", "L1"}, {"B2", "L2"}}), coarse));
  CHECK(kind_of([&] { is_finer(coarse, Partition::singletons(3)); }) == ErrorKind::GroundMismatch);
}

TEST_CASE("is_finer is a partial order on random partitions") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    const auto a = testing::random_partition(rng, n);
    const auto b = testing::random_coarsening(rng, a);
    const auto c = testing::random_coarsening(rng, b);
    const auto d = testing::random_partition(rng, n);
    CHECK(is_finer(a, a));
    CHECK(is_finer(a, b));
    CHECK(is_finer(a, c));  // transitivity along a chain
    if (is_finer(a, d) && is_finer(d, a)) CHECK(a == d);
    if (is_finer(a, d) && is_finer(d, c)) CHECK(is_finer(a, c));
  }
}

TEST_CASE("from_labels uses first-seen order") {
  const std::vector<int> labels = {7, 3, 7, 1, 3};
  const auto p = Partition::from_labels(labels);
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3}});
  CHECK(p.block_of(4) == 1);
  CHECK(p.same_block(1, 4));
}

TEST_CASE("restricted growth strings enumerate every set partition once") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<int> previous;
    std::size_t count = 0;
    for_each_restricted_growth_string(n, [&](std::span<const int> rgs) {
      std::vector<int> cur(rgs.begin(), rgs.end());
      if (count > 0) CHECK(previous < cur);  // strictly lexicographic
      previous = cur;
      seen.insert(Partition::from_labels(rgs).blocks());
      ++count;
      return true;
    });
    CHECK(count == bell_number(n));
    CHECK(seen.size() == count);
  }
  CHECK(bell_number(8) == 4140);
}

}  // TEST_SUITE
