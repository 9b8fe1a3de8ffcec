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

#include <bit>
#include <cstdint>

#include "steiner/kernels.hpp"

namespace steiner::kernels {

void delta_batch_scalar(std::span<const Mask> lines, std::span<const Mask> sets,
                        std::span<int> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Mask s = sets[i];
    int nullity = 0;
    for (Mask line : lines) {
      const int k = std::popcount(line & s);
      if (k > 2) nullity += k - 2;
    }
    out[i] = std::popcount(s) - nullity;
  }
}

int delta_one(std::span<const Mask> lines, Mask set) {
  int nullity = 0;
  for (Mask line : lines) {
    const int k = std::popcount(line & set);
    if (k > 2) nullity += k - 2;
  }
  return std::popcount(set) - nullity;
}

}  // namespace steiner::kernels
