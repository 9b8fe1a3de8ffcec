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


#include <set>
#include <utility>

#include "steiner/path_graph.hpp"

namespace steiner {

namespace {

// Domain points on the lines of `p` through the given anchor.
Mask launch_points(const Path& p, int anchor, Mask domain) {
  Mask out = 0;
  for (Mask l : p.lines) {
    if (contains(l, anchor)) out |= l;
  }
  return out & domain;
}

}  // namespace

Fan build_fan(const PartialLinearSpace& m, const PathGraph& g, int d1, int depth,
              FanReading reading, int max_steps) {
  Fan fan;
  fan.a = g.a;
  fan.b = g.b;
  fan.seed = d1;

  std::set<std::pair<int, Color>> launched;
  std::vector<Path> frontier;
  Mask points = 0;
  auto launch = [&](int e, Color c, std::vector<Path>& into) {
    if (!launched.insert({e, c}).second) return;
    Path p = generate_path(m, g, e, c, max_steps);
    points |= envelope(p);
    into.push_back(std::move(p));
  };

  std::vector<Path> roots;
  launch(d1, Color::kA, roots);
  launch(d1, Color::kB, roots);
  auto next_level = [&](const std::vector<Path>& level) {
    std::vector<Path> out;
    for (const Path& p : level) {
      const bool from_b_lines =
          reading == FanReading::kBothFamilies || p.first == Color::kA;
      const bool from_a_lines =
          reading == FanReading::kBothFamilies || p.first == Color::kB;
      if (from_b_lines) {
        for (int e : indices_of(launch_points(p, g.b, g.domain))) launch(e, Color::kA, out);
      }
      if (from_a_lines) {
        for (int e : indices_of(launch_points(p, g.a, g.domain))) launch(e, Color::kB, out);
      }
    }
    return out;
  };

  frontier = next_level(roots);
  fan.levels.push_back(points);
  for (int n = 0; n < depth; ++n) {
    if (frontier.empty()) break;
    frontier = next_level(frontier);
    fan.levels.push_back(points);
  }
  fan.fixpoint = frontier.empty();
  return fan;
}

}  // namespace steiner
