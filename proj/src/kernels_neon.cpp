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

#include <arm_neon.h>

#include "steiner/kernels.hpp"

namespace steiner::kernels {
namespace {

inline uint64x2_t popcount_u64x2(uint64x2_t v) {
  const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
}

}  // namespace

void delta_batch_neon(std::span<const Mask> lines, std::span<const Mask> sets,
                      std::span<int> out) {
  const std::size_t n = sets.size();
  const int64x2_t two = vdupq_n_s64(2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t s = vld1q_u64(sets.data() + i);
    int64x2_t nullity = vdupq_n_s64(0);
    for (Mask line : lines) {
      const int64x2_t k = vreinterpretq_s64_u64(
          popcount_u64x2(vandq_u64(s, vdupq_n_u64(line))));
      const uint64x2_t over = vcgtq_s64(k, two);
      nullity = vaddq_s64(
          nullity, vandq_s64(vreinterpretq_s64_u64(over), vsubq_s64(k, two)));
    }
    const int64x2_t delta =
        vsubq_s64(vreinterpretq_s64_u64(popcount_u64x2(s)), nullity);
    out[i] = static_cast<int>(vgetq_lane_s64(delta, 0));
    out[i + 1] = static_cast<int>(vgetq_lane_s64(delta, 1));
  }
  for (; i < n; ++i) out[i] = delta_one(lines, sets[i]);
}

}  // namespace steiner::kernels
