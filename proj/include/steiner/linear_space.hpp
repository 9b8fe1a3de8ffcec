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

#ifndef STEINER_LINEAR_SPACE_HPP_
#define STEINER_LINEAR_SPACE_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steiner/point_set.hpp"

namespace steiner {

// A finite partial linear space: labelled points and stored lines of size at
// least 3, any two points on at most one stored line. Two-point lines are
// implicit and never stored. An optional star table records the graph of a
// quasigroup operation; each entry x*y=z must lie inside one stored line.
//
// Points are addressed by index (insertion order); Mask bit i is point i.
class PartialLinearSpace {
 public:
  PartialLinearSpace() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  Mask all_points() const { return full_mask(size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  // Throws InputError naming the first unknown label.
  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  std::span<const Mask> lines() const { return lines_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  // Index of the stored line through x and y, or -1.
  int line_through(int x, int y) const;
  bool collinear(int x, int y, int z) const;
  // Stored lines containing point p.
  std::vector<int> lines_at(int p) const;

  // Throws InputError on duplicate labels or when the 64 point limit is hit.
  int add_point(std::string label);
  // Throws InputError if the line has fewer than 3 points or shares two
  // points with an existing line.
  int add_line(Mask line);
  // Replaces a stored line by a superset of it.
  void extend_line(int line_index, Mask superset);

  bool has_star_table() const { return has_star_; }
  void enable_star_table() { has_star_ = true; }
  // Throws InputError unless x, y, z lie on one stored line and the entry is
  // consistent with any existing entry for (x, y).
  void set_star(int x, int y, int z);
  std::optional<int> star_entry(int x, int y) const;
  const std::map<std::pair<int, int>, int>& star_entries() const {
    return star_;
  }

  // Quasigroup product used for walking paths: the explicit entry when
  // present, x itself when x == y, the third point of a 3-point line
  // (Steiner quasigroup) otherwise, and nullopt when x, y span no stored line
  // or a longer line lacks the entry.
  std::optional<int> product(int x, int y) const;

  // Induced substructure on `subset`: traces of size >= 3 become lines; star
  // entries with all three points inside are kept. Points keep their labels
  // and relative order.
  PartialLinearSpace induced(Mask subset) const;

  // Copy with point i renamed to new_labels[i].
  PartialLinearSpace relabelled(const std::vector<std::string>& new_labels) const;

  // Structural equality up to point order (labels, lines, star entries).
  bool same_as(const PartialLinearSpace& other) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<Mask> lines_;
  std::vector<std::vector<int>> line_of_;  // line_of_[x][y], -1 if none
  std::map<std::pair<int, int>, int> star_;
  bool has_star_ = false;
};

}  // namespace steiner

#endif  // STEINER_LINEAR_SPACE_HPP_
