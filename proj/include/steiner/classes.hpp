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


#ifndef STEINER_CLASSES_HPP_
#define STEINER_CLASSES_HPP_

#include <optional>
#include <string>

#include "steiner/block_algebra.hpp"
#include "steiner/linear_space.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

enum class Profile {
  kBaseK0,     // every subset has delta >= 0
  kSparse,     // |B| > 1 -> delta(B) > 1 and |B| > 3 -> delta(B) > 2
  kAntiPasch,  // K0, lines of 3 points, no Pasch
  kAntiMitre,  // K0, lines of 3 points, no mitre
  kAntiMia,    // K0, lines of 3 points, no mia
  kHruStar,    // K0, lines of 3 points, every set of <= 3 points strong
  kTwoTrans,   // K0, every set of <= 2 points strong
  kQuasi,      // lines of exactly q points carrying the free algebra, K0
};

std::string profile_name(Profile p);
// Accepts the names above in lower case with '-' (e.g. "anti-pasch").
std::optional<Profile> profile_from_name(const std::string& name);

struct ClassSpec {
  Profile profile = Profile::kBaseK0;
  std::optional<int> line_length_cap;
  // Free algebra F2 for kQuasi; q is its size.
  std::optional<StarTable> free_algebra;
  SearchOptions search;
};

struct ClassResult {
  bool ok = true;
  std::string reason;
  Mask witness = 0;
};

// Throws InputError for kQuasi without a free algebra or without a star
// table on M.
ClassResult satisfies_class(const PartialLinearSpace& m, const ClassSpec& spec);

// No subset of M violates the sparseness condition; brute force over all
// subsets (CapacityError above 26 points).
ClassResult check_sparse(const PartialLinearSpace& m);

}  // namespace steiner

#endif  // STEINER_CLASSES_HPP_
