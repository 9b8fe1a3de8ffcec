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


#include "steiner/amalgam.hpp"

#include <set>

#include "steiner/errors.hpp"

namespace steiner {

AmalgamResult free_amalgam(const PartialLinearSpace& a, const PartialLinearSpace& b,
                           const std::vector<std::string>& c,
                           const AmalgamOptions& opts) {
  const std::set<std::string> cset(c.begin(), c.end());
  for (const auto& l : b.labels()) {
    if (a.index_of(l) && !cset.count(l)) {
      throw InputError("point '" + l + "' is shared but not in the base");
    }
  }
  const Mask ca = a.mask_of(c);
  const Mask cb = b.mask_of(c);
  if (!a.induced(ca).same_as(b.induced(cb))) {
    throw InputError("the two sides disagree on the base");
  }

  AmalgamResult res;
  if (opts.check_strong && !is_strong(a, ca, opts.search)) {
    res.base_strong_in_a = false;
    if (opts.strict) throw ConstraintViolation("base is not strong in the first side");
    res.warnings.push_back("base is not strong in the first side");
  }

  PartialLinearSpace& out = res.space;
  for (const auto& l : a.labels()) out.add_point(l);
  std::vector<int> from_b(b.size());
  for (int i = 0; i < b.size(); ++i) {
    auto j = out.index_of(b.label(i));
    from_b[i] = j ? *j : out.add_point(b.label(i));
  }
  auto map_b = [&](Mask m) {
    Mask r = 0;
    for (int i : indices_of(m)) r |= bit(from_b[i]);
    return r;
  };

  std::vector<Mask> lines(a.lines().begin(), a.lines().end());
  for (Mask l : b.lines()) lines.push_back(map_b(l));
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < lines.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (popcount(lines[i] & lines[j]) >= 2) {
          lines[i] |= lines[j];
          lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
          break;
        }
      }
    }
  }
  for (Mask l : lines) {
    if (opts.max_line_length && popcount(l) > *opts.max_line_length) {
      throw ConstraintViolation("merged line {" + [&] {
        std::string s;
        for (const auto& x : out.labels_of(l)) s += (s.empty() ? "" : ",") + x;
        return s;
      }() + "} exceeds length cap " + std::to_string(*opts.max_line_length));
    }
    out.add_line(l);
  }

  if (a.has_star_table() || b.has_star_table()) out.enable_star_table();
  for (const auto& [xy, z] : a.star_entries()) out.set_star(xy.first, xy.second, z);
  for (const auto& [xy, z] : b.star_entries()) {
    out.set_star(from_b[xy.first], from_b[xy.second], from_b[z]);
  }
  return res;
}

}  // namespace steiner
