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

#include <cstdlib>
#include <string>

#include "steiner/kernels.hpp"

namespace steiner::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(STEINER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa probe() {
  if (const char* forced = std::getenv("STEINER_ISA")) {
    if (std::string(forced) == "scalar") return Isa::kScalar;
  }
  if (cpu_has_avx2()) return Isa::kAvx2;
#if defined(STEINER_HAVE_NEON)
  return Isa::kNeon;
#else
  return Isa::kScalar;
#endif
}

}  // namespace

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return cpu_has_avx2();
    case Isa::kNeon:
#if defined(STEINER_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

DeltaBatchFn delta_batch_for(Isa isa) {
  switch (isa) {
#if defined(STEINER_HAVE_AVX2)
    case Isa::kAvx2:
      return &delta_batch_avx2;
#endif
#if defined(STEINER_HAVE_NEON)
    case Isa::kNeon:
      return &delta_batch_neon;
#endif
    default:
      return &delta_batch_scalar;
  }
}

void delta_batch(std::span<const Mask> lines, std::span<const Mask> sets,
                 std::span<int> out) {
  static const DeltaBatchFn fn = delta_batch_for(detected_isa());
  fn(lines, sets, out);
}

}  // namespace steiner::kernels
