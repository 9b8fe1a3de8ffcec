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


#ifndef STEINER_AMALGAM_HPP_
#define STEINER_AMALGAM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "steiner/linear_space.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

struct AmalgamOptions {
  // Throw ConstraintViolation instead of warning when C is not strong in A.
  bool strict = false;
  // Skip the C <= A check entirely.
  bool check_strong = true;
  std::optional<int> max_line_length;
  SearchOptions search;
};

struct AmalgamResult {
  PartialLinearSpace space;
  std::vector<std::string> warnings;
  bool base_strong_in_a = true;
};

// Free amalgam of A and B over their common points, which must be exactly
// `c` (by label). Points of A come first, then B - C. Lines meeting C in two
// or more points are merged across the sides; nothing else relates A - C to
// B - C.
AmalgamResult free_amalgam(const PartialLinearSpace& a, const PartialLinearSpace& b,
                           const std::vector<std::string>& c,
                           const AmalgamOptions& opts = {});

}  // namespace steiner

#endif  // STEINER_AMALGAM_HPP_
