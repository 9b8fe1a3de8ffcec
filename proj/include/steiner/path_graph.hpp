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


#ifndef STEINER_PATH_GRAPH_HPP_
#define STEINER_PATH_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steiner/linear_space.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

// Points removed from the domain: the stored line through a and b (or just
// {a, b}), or icl({a, b}).
enum class Exclusion { kLine, kIcl };
enum class Color { kA, kB };

Color other(Color c);
std::string color_name(Color c);
std::string exclusion_name(Exclusion e);

struct PathGraph {
  int a = -1;
  int b = -1;
  Exclusion mode = Exclusion::kLine;
  Mask excluded = 0;
  Mask domain = 0;
  // adj[color][x]: neighbours of x joined by an edge of that color.
  std::vector<Mask> adj_a;
  std::vector<Mask> adj_b;

  const std::vector<Mask>& adj(Color c) const { return c == Color::kA ? adj_a : adj_b; }
  int edge_count(Color c) const;
};

// Throws InputError if a == b.
PathGraph build_graph(const PartialLinearSpace& m, int a, int b, Exclusion mode,
                      const SearchOptions& opts = {});

enum class PathKind { kPseudoCycle, kTruncated };
enum class Truncation { kNone, kOpenEnd, kLeftDomain, kStepBudget };

std::string truncation_name(Truncation t);

struct Path {
  int a = -1;
  int b = -1;
  Color first = Color::kA;
  std::vector<int> points;  // d_1, d_2, ...
  std::vector<Mask> lines;  // line k joins d_k and d_{k+1}
  PathKind kind = PathKind::kTruncated;
  Truncation truncation = Truncation::kNone;
  // For pseudo-cycles: the intersecting pair of line positions (0-based).
  std::pair<int, int> closing{-1, -1};

  int line_count() const { return static_cast<int>(lines.size()); }
};

// Alternating walk d_{k+1} = c_k * d_k with c_k = a, b, a, ... (or b first)
// until a line meets a non-adjacent earlier line outside {a, b}. Throws
// InputError when a needed product lies on a stored line without a star
// entry.
Path generate_path(const PartialLinearSpace& m, const PathGraph& g, int d1, Color first,
                   int max_steps = 256);

// Union of the path's lines.
Mask envelope(const Path& p);

enum class FanReading {
  // Paths launch from every level path: a-first from points on its b-lines,
  // b-first from points on its a-lines.
  kBothFamilies,
  // a-first paths only from a-first paths, b-first only from b-first.
  kSeparateFamilies,
};

struct Fan {
  int a = -1;
  int b = -1;
  int seed = -1;
  std::vector<Mask> levels;  // cumulative point sets F^0, F^1, ...
  bool fixpoint = false;
  Mask points() const { return levels.empty() ? 0 : levels.back(); }
};

Fan build_fan(const PartialLinearSpace& m, const PathGraph& g, int d1, int depth,
              FanReading reading = FanReading::kBothFamilies, int max_steps = 256);

// Colored graph isomorphism of the domains; with allow_color_swap the map
// may exchange the colors.
bool graphs_isomorphic(const PathGraph& g1, const PathGraph& g2, bool allow_color_swap);

struct UniformityReport {
  bool uniform = true;
  // Anchor pairs (a, b) whose graph differs from the first pair's.
  std::optional<std::pair<int, int>> reference;
  std::optional<std::pair<int, int>> counterexample;
  int pairs_checked = 0;
};

// Ordered anchor pairs (a, b), a != b, all compared against the first.
UniformityReport is_uniform(const PartialLinearSpace& m, Exclusion mode,
                            bool allow_color_swap = false,
                            const SearchOptions& opts = {});

// Pseudo-cycles found from every seed and both first colors over every pair
// {a, b} strong in M, in icl mode.
std::vector<Path> pseudo_cycles_over_strong_pairs(const PartialLinearSpace& m,
                                                  const SearchOptions& opts = {},
                                                  int max_steps = 256,
                                                  bool stop_at_first = false);

// Greedy search for a large set of points each outside the R-closure of the
// others chosen before it, over `budget` seeded random orders.
struct RDimensionBound {
  int bound = 0;
  Mask witness = 0;
};
RDimensionBound r_dimension_lower_bound(const PartialLinearSpace& m, int budget,
                                        std::uint64_t seed = 1);

}  // namespace steiner

#endif  // STEINER_PATH_GRAPH_HPP_
