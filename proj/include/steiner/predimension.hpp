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


#ifndef STEINER_PREDIMENSION_HPP_
#define STEINER_PREDIMENSION_HPP_

#include "steiner/linear_space.hpp"
#include "steiner/point_set.hpp"

namespace steiner {

// Largest number of free points an exact superset search will branch over
// (after pruning points that can never lower delta).
inline constexpr int kDefaultSearchCapacity = 24;

struct SearchOptions {
  int capacity = kDefaultSearchCapacity;
};

// |A| minus the summed nullities |l & A| - 2 of stored lines meeting A in at
// least 2 points. Throws InputError if A has points outside M.
int delta(const PartialLinearSpace& m, Mask a);

// delta(A u B) - delta(B). Throws InputError if A and B overlap.
int rel_delta(const PartialLinearSpace& m, Mask a, Mask b);

// Minimum of delta over all X with A <= X <= within (within defaults to all
// points). The smallest minimizer is unique; it is returned in *argmin.
int d(const PartialLinearSpace& m, Mask a, const SearchOptions& opts = {},
      Mask* argmin = nullptr);
int d_within(const PartialLinearSpace& m, Mask a, Mask within,
             const SearchOptions& opts = {}, Mask* argmin = nullptr);

// A <= within: no X with A <= X <= within has delta(X) < delta(A).
bool is_strong(const PartialLinearSpace& m, Mask a, const SearchOptions& opts = {});
bool is_strong_within(const PartialLinearSpace& m, Mask a, Mask within,
                      const SearchOptions& opts = {});

// Least strong superset of A.
Mask icl(const PartialLinearSpace& m, Mask a, const SearchOptions& opts = {});

// Least superset of X containing every stored line that meets it in at
// least 2 points.
Mask r_closure(const PartialLinearSpace& m, Mask x);

}  // namespace steiner

#endif  // STEINER_PREDIMENSION_HPP_
