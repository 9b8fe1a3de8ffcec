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


#ifndef STEINER_EXAMPLES_HPP_
#define STEINER_EXAMPLES_HPP_

#include <string>
#include <vector>

#include "steiner/linear_space.hpp"

namespace steiner {

// "pasch", "mitre", "mia", "fano", "mermelstein". Throws InputError for
// other names.
PartialLinearSpace build_example(const std::string& name);
std::vector<std::string> example_names();

// Mermelstein structure: B = {a, b1..b4}, C = {c1..c4}, lines
// {c1,b1,c2} {c2,b2,c3} {c3,b3,c4} {a,b2,b3} {c4,c1,b4}.
std::vector<std::string> mermelstein_base();
std::vector<std::string> mermelstein_extension();

}  // namespace steiner

#endif  // STEINER_EXAMPLES_HPP_
