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

#include <cstdint>
#include <random>
#include <string_view>

namespace symgauss {

// Identifier recorded in reports. Engine: std::mt19937_64 (bit-exact across
// platforms). Doubles come from the top 53 bits; normals from Box-Muller.
// Child streams are seeded with splitmix64(seed + golden * (stream + 1)).
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53/box-muller/splitmix64-derive";

std::uint64_t splitmix64(std::uint64_t x);

// Seed of stream `stream` derived from `seed`; equals Rng(seed).derive(stream).seed().
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1).
  double uniform01();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n);
  bool coin(double p_true) { return uniform01() < p_true; }
  double normal();

  // Independent stream for parallel or nested work; does not advance *this.
  Rng derive(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace symgauss
