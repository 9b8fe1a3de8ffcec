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


#ifndef STEINER_CONFIGURATIONS_HPP_
#define STEINER_CONFIGURATIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "steiner/embedding.hpp"
#include "steiner/linear_space.hpp"

namespace steiner {

enum class Template { kPasch, kMitre, kMia, kFano };

std::string template_name(Template t);
std::optional<Template> template_from_name(const std::string& name);

// pasch: {D,G,E} {F,E,X} {F,D,H} {H,G,X}.
// mitre: {a,b,c} {a',b',c'} {x,a,c'} {x,b,b'} {x,c,a'}.
// mia: pasch plus {E,H,M}.
// fano: {1,2,3} {1,4,5} {1,6,7} {2,4,6} {2,5,7} {3,4,7} {3,5,6}.
PartialLinearSpace config_template(Template t);

// Injections of the template sending each template line into a stored line
// (exactly 3 points when strict). limit = 0 lists all.
std::vector<Embedding> find_config(const PartialLinearSpace& m, Template t, bool strict,
                                   std::size_t limit = 0);

struct SparseCheck {
  bool ok = true;
  Mask witness = 0;
};

// No A with 6 <= |A| <= size_cap and delta(A) = 2. Exhaustive over subsets;
// CapacityError above 26 points.
SparseCheck is_infinity_sparse(const PartialLinearSpace& m, int size_cap);

// Subsets of n + 2 points meeting exactly n stored lines in 3 points and
// none in more.
long long count_configurations(const PartialLinearSpace& m, int n);

}  // namespace steiner

#endif  // STEINER_CONFIGURATIONS_HPP_
