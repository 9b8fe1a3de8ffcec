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

#include <immintrin.h>

#include <bit>

#include "steiner/kernels.hpp"

namespace steiner::kernels {
namespace {

// Per-lane 64-bit popcount: nibble lookup with vpshufb, then a horizontal
// byte sum per 64-bit lane with vpsadbw.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibbles);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                         _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

void delta_batch_avx2(std::span<const Mask> lines, std::span<const Mask> sets,
                      std::span<int> out) {
  const std::size_t n = sets.size();
  const __m256i two = _mm256_set1_epi64x(2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(sets.data() + i));
    __m256i nullity = _mm256_setzero_si256();
    for (Mask line : lines) {
      const __m256i k = popcount_epi64(
          _mm256_and_si256(s, _mm256_set1_epi64x(static_cast<long long>(line))));
      const __m256i over = _mm256_cmpgt_epi64(k, two);
      nullity = _mm256_add_epi64(
          nullity, _mm256_and_si256(over, _mm256_sub_epi64(k, two)));
    }
    const __m256i delta = _mm256_sub_epi64(popcount_epi64(s), nullity);
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), delta);
    out[i] = static_cast<int>(lanes[0]);
    out[i + 1] = static_cast<int>(lanes[1]);
    out[i + 2] = static_cast<int>(lanes[2]);
    out[i + 3] = static_cast<int>(lanes[3]);
  }
  for (; i < n; ++i) out[i] = delta_one(lines, sets[i]);
}

}  // namespace steiner::kernels
