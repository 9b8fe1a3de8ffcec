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


#include "steiner/examples.hpp"

#include "steiner/configurations.hpp"
#include "steiner/errors.hpp"

namespace steiner {

std::vector<std::string> mermelstein_base() { return {"a", "b1", "b2", "b3", "b4"}; }
std::vector<std::string> mermelstein_extension() { return {"c1", "c2", "c3", "c4"}; }

std::vector<std::string> example_names() { return {"fano", "mermelstein", "mia", "mitre", "pasch"}; }

PartialLinearSpace build_example(const std::string& name) {
  if (auto t = template_from_name(name)) return config_template(*t);
  if (name == "mermelstein") {
    PartialLinearSpace m;
    for (const auto& p : mermelstein_base()) m.add_point(p);
    for (const auto& p : mermelstein_extension()) m.add_point(p);
    const std::vector<std::vector<std::string>> lines = {{"c1", "b1", "c2"},
                                                         {"c2", "b2", "c3"},
                                                         {"c3", "b3", "c4"},
                                                         {"a", "b2", "b3"},
                                                         {"c4", "c1", "b4"}};
    for (const auto& l : lines) m.add_line(m.mask_of(l));
    return m;
  }
  throw InputError("unknown example '" + name + "'");
}

}  // namespace steiner
