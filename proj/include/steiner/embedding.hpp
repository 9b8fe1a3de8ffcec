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


#ifndef STEINER_EMBEDDING_HPP_
#define STEINER_EMBEDDING_HPP_

#include <functional>
#include <vector>

#include "steiner/linear_space.hpp"

namespace steiner {

// Map from pattern point index to host point index.
using Embedding = std::vector<int>;
// Return false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

// Injections sending every pattern line into a stored host line. With
// `strict`, the host line must have exactly as many points as the pattern
// line.
void for_each_line_embedding(const PartialLinearSpace& pattern,
                             const PartialLinearSpace& host, bool strict,
                             const EmbeddingVisitor& visit);

// Injections onto induced copies: three pattern points are collinear iff
// their images are. `fixed[i] >= 0` pins pattern point i; images of the
// free points avoid `forbidden`.
void for_each_induced_embedding(const PartialLinearSpace& pattern,
                                const PartialLinearSpace& host,
                                const std::vector<int>& fixed, Mask forbidden,
                                const EmbeddingVisitor& visit);

}  // namespace steiner

#endif  // STEINER_EMBEDDING_HPP_
