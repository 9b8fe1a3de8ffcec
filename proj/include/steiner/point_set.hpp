// Copyright 2026 The Authors.
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

#ifndef STEINER_POINT_SET_HPP_
#define STEINER_POINT_SET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace steiner {

// Point sets are bitmasks over point indices of one structure.
using Mask = std::uint64_t;

inline constexpr int kMaxPoints = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask set, int i) { return (set >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Calls fn(sub) for every submask of `universe`, including 0 and universe.
template <typename Fn>
void for_each_submask(Mask universe, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;
  }
}

}  // namespace steiner

#endif  // STEINER_POINT_SET_HPP_
