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

#include "steiner/linear_space.hpp"

#include <algorithm>
#include <set>

#include "steiner/errors.hpp"

namespace steiner {

std::optional<int> PartialLinearSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Mask PartialLinearSpace::mask_of(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw InputError("unknown point label '" + l + "'");
    m |= bit(*i);
  }
  return m;
}

std::vector<std::string> PartialLinearSpace::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i : indices_of(m)) out.push_back(labels_[i]);
  return out;
}

int PartialLinearSpace::line_through(int x, int y) const {
  if (x == y) return -1;
  return line_of_[x][y];
}

bool PartialLinearSpace::collinear(int x, int y, int z) const {
  const int l = line_through(x, y);
  return l >= 0 && contains(lines_[l], z);
}

std::vector<int> PartialLinearSpace::lines_at(int p) const {
  std::vector<int> out;
  for (int l = 0; l < line_count(); ++l) {
    if (contains(lines_[l], p)) out.push_back(l);
  }
  return out;
}

int PartialLinearSpace::add_point(std::string label) {
  if (size() >= kMaxPoints) {
    throw InputError("structure exceeds " + std::to_string(kMaxPoints) +
                     " points");
  }
  if (index_.count(label)) throw InputError("duplicate point label '" + label + "'");
  const int i = size();
  index_.emplace(label, i);
  labels_.push_back(std::move(label));
  for (auto& row : line_of_) row.push_back(-1);
  line_of_.emplace_back(size(), -1);
  return i;
}

int PartialLinearSpace::add_line(Mask line) {
  if (!is_subset(line, all_points())) throw InputError("line uses unknown points");
  if (popcount(line) < 3) throw InputError("stored lines need at least 3 points");
  const auto pts = indices_of(line);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (line_of_[pts[i]][pts[j]] >= 0) {
        throw InputError("points '" + labels_[pts[i]] + "' and '" +
                         labels_[pts[j]] + "' already share a line");
      }
    }
  }
  const int idx = line_count();
  lines_.push_back(line);
  for (int a : pts) {
    for (int b : pts) {
      if (a != b) line_of_[a][b] = idx;
    }
  }
  return idx;
}

void PartialLinearSpace::extend_line(int line_index, Mask superset) {
  const Mask old = lines_.at(line_index);
  if (!is_subset(old, superset)) throw InputError("extend_line needs a superset");
  const auto added = indices_of(superset & ~old);
  const auto pts = indices_of(superset);
  for (int a : added) {
    for (int b : pts) {
      if (a != b && line_of_[a][b] >= 0 && line_of_[a][b] != line_index) {
        throw InputError("points '" + labels_[a] + "' and '" + labels_[b] +
                         "' already share a line");
      }
    }
  }
  lines_[line_index] = superset;
  for (int a : pts) {
    for (int b : pts) {
      if (a != b) line_of_[a][b] = line_index;
    }
  }
}

void PartialLinearSpace::set_star(int x, int y, int z) {
  const bool on_line = (x == y) ? z == x : (x != z && y != z && collinear(x, y, z));
  if (!on_line) {
    throw InputError("star entry " + labels_[x] + "*" + labels_[y] + "=" +
                     labels_[z] + " is not inside one stored line");
  }
  has_star_ = true;
  auto [it, inserted] = star_.emplace(std::make_pair(x, y), z);
  if (!inserted && it->second != z) {
    throw InputError("conflicting star entries for " + labels_[x] + "*" +
                     labels_[y]);
  }
}

std::optional<int> PartialLinearSpace::star_entry(int x, int y) const {
  auto it = star_.find({x, y});
  if (it == star_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> PartialLinearSpace::product(int x, int y) const {
  if (x == y) return x;
  if (auto z = star_entry(x, y)) return z;
  const int l = line_through(x, y);
  if (l < 0) return std::nullopt;
  const Mask rest = lines_[l] & ~bit(x) & ~bit(y);
  if (popcount(rest) == 1) return std::countr_zero(rest);
  return std::nullopt;
}

PartialLinearSpace PartialLinearSpace::induced(Mask subset) const {
  PartialLinearSpace out;
  std::vector<int> remap(size(), -1);
  for (int i : indices_of(subset & all_points())) remap[i] = out.add_point(labels_[i]);
  for (Mask line : lines_) {
    const Mask trace = line & subset;
    if (popcount(trace) < 3) continue;
    Mask m = 0;
    for (int i : indices_of(trace)) m |= bit(remap[i]);
    out.add_line(m);
  }
  out.has_star_ = has_star_;
  for (const auto& [xy, z] : star_) {
    if (contains(subset, xy.first) && contains(subset, xy.second) &&
        contains(subset, z)) {
      out.star_.emplace(std::make_pair(remap[xy.first], remap[xy.second]), remap[z]);
    }
  }
  return out;
}

PartialLinearSpace PartialLinearSpace::relabelled(
    const std::vector<std::string>& new_labels) const {
  if (static_cast<int>(new_labels.size()) != size()) {
    throw InputError("relabelled: label count mismatch");
  }
  PartialLinearSpace out;
  for (const auto& l : new_labels) out.add_point(l);
  for (Mask line : lines_) out.add_line(line);
  out.has_star_ = has_star_;
  out.star_ = star_;
  return out;
}

bool PartialLinearSpace::same_as(const PartialLinearSpace& other) const {
  if (size() != other.size() || line_count() != other.line_count()) return false;
  if (has_star_ != other.has_star_ || star_.size() != other.star_.size()) return false;
  std::vector<int> to_other(size());
  for (int i = 0; i < size(); ++i) {
    auto j = other.index_of(labels_[i]);
    if (!j) return false;
    to_other[i] = *j;
  }
  auto map_mask = [&](Mask m) {
    Mask r = 0;
    for (int i : indices_of(m)) r |= bit(to_other[i]);
    return r;
  };
  std::set<Mask> mine, theirs(other.lines_.begin(), other.lines_.end());
  for (Mask l : lines_) mine.insert(map_mask(l));
  if (mine != theirs) return false;
  for (const auto& [xy, z] : star_) {
    auto e = other.star_entry(to_other[xy.first], to_other[xy.second]);
    if (!e || *e != to_other[z]) return false;
  }
  return true;
}

}  // namespace steiner
