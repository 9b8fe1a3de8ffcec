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


#ifndef STEINER_CANONICAL_HPP_
#define STEINER_CANONICAL_HPP_

#include <string>
#include <vector>

#include "steiner/linear_space.hpp"

namespace steiner {

// Canonical labelling of the pair (B, C) as the induced structure on B u C
// with B marked. Positions 0..|B|-1 are base points.
struct PairCanon {
  // "b<|B|>c<|C|>" followed by "/i.j.k" per line in canonical positions.
  std::string type_key;
  // Lexicographically least base ordering (M indices) over all optimal
  // labellings. Two copies over the same base set share it iff an
  // isomorphism fixes the base pointwise.
  std::vector<int> base_tuple;
  // One optimal labelling: position -> M index.
  std::vector<int> order;
};

// Throws CapacityError when the refined cells admit more than `max_perms`
// labellings.
PairCanon canonical_pair(const PartialLinearSpace& m, Mask b, Mask c,
                         long long max_perms = 5'000'000);

// Rebuilds the structure named by a type key with points "b0".. and "c0"..;
// *base receives the mask of the b-points. Throws InputError on bad keys.
PartialLinearSpace structure_from_key(const std::string& key, Mask* base);

}  // namespace steiner

#endif  // STEINER_CANONICAL_HPP_
