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

#ifndef STEINER_KERNELS_HPP_
#define STEINER_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "steiner/point_set.hpp"

// Batched predimension evaluation. The scalar routine is the reference;
// vector variants must agree with it bit for bit and are chosen at runtime.
namespace steiner::kernels {

// out[i] = |sets[i]| - sum over lines l with |l & sets[i]| >= 2 of
// (|l & sets[i]| - 2).  out.size() must be >= sets.size().
using DeltaBatchFn = void (*)(std::span<const Mask> lines,
                              std::span<const Mask> sets, std::span<int> out);

void delta_batch_scalar(std::span<const Mask> lines, std::span<const Mask> sets,
                        std::span<int> out);

#if defined(STEINER_HAVE_AVX2)
void delta_batch_avx2(std::span<const Mask> lines, std::span<const Mask> sets,
                      std::span<int> out);
#endif
#if defined(STEINER_HAVE_NEON)
void delta_batch_neon(std::span<const Mask> lines, std::span<const Mask> sets,
                      std::span<int> out);
#endif

enum class Isa { kScalar, kAvx2, kNeon };

// Best variant supported by the running CPU. STEINER_ISA=scalar in the
// environment pins the reference path.
Isa detected_isa();
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
DeltaBatchFn delta_batch_for(Isa isa);

// Dispatching entry point used by the library.
void delta_batch(std::span<const Mask> lines, std::span<const Mask> sets,
                 std::span<int> out);

// Scalar single-set form, for call sites that are not batch shaped.
int delta_one(std::span<const Mask> lines, Mask set);

}  // namespace steiner::kernels

#endif  // STEINER_KERNELS_HPP_
