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


#include "steiner/embedding.hpp"

namespace steiner {

namespace {

class Matcher {
 public:
  Matcher(const PartialLinearSpace& p, const PartialLinearSpace& h, bool induced,
          bool strict, Mask forbidden, const EmbeddingVisitor& visit)
      : p_(p), h_(h), induced_(induced), strict_(strict), forbidden_(forbidden),
        visit_(visit), map_(p.size(), -1) {}

  void run(const std::vector<int>& fixed) {
    Mask used = 0;
    for (int i = 0; i < p_.size(); ++i) {
      if (i < static_cast<int>(fixed.size()) && fixed[i] >= 0) {
        if (contains(used, fixed[i])) return;
        map_[i] = fixed[i];
        used |= bit(fixed[i]);
        placed_ |= bit(i);
      }
    }
    for (int i : indices_of(placed_)) {
      if (!consistent(i)) return;
    }
    order_free();
    extend(0, used);
  }

 private:
  void order_free() {
    Mask placed = placed_;
    while (popcount(placed) < p_.size()) {
      int best = -1, best_score = -1;
      for (int i = 0; i < p_.size(); ++i) {
        if (contains(placed, i)) continue;
        int score = 0;
        for (int l : p_.lines_at(i)) score += 1 + 4 * popcount(p_.lines()[l] & placed);
        if (score > best_score) {
          best_score = score;
          best = i;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  Mask candidates(int i) const {
    Mask out = h_.all_points() & ~forbidden_;
    for (int l : p_.lines_at(i)) {
      const auto pts = indices_of(p_.lines()[l] & placed_);
      if (pts.size() >= 2) {
        const int hl = h_.line_through(map_[pts[0]], map_[pts[1]]);
        if (hl < 0) return 0;
        out &= h_.lines()[hl];
      } else if (pts.size() == 1) {
        Mask reach = 0;
        for (int hl : h_.lines_at(map_[pts[0]])) reach |= h_.lines()[hl];
        out &= reach;
      }
    }
    return out;
  }

  bool consistent(int i) const {
    for (int l : p_.lines_at(i)) {
      const Mask pl = p_.lines()[l];
      if (!is_subset(pl, placed_)) continue;
      const auto pts = indices_of(pl);
      const int hl = h_.line_through(map_[pts[0]], map_[pts[1]]);
      if (hl < 0) return false;
      for (int q : pts) {
        if (!contains(h_.lines()[hl], map_[q])) return false;
      }
      if (strict_ && popcount(h_.lines()[hl]) != popcount(pl)) return false;
    }
    if (!induced_) return true;
    const auto placed = indices_of(placed_ & ~bit(i));
    for (std::size_t x = 0; x < placed.size(); ++x) {
      for (std::size_t y = x + 1; y < placed.size(); ++y) {
        const bool pc = p_.collinear(placed[x], placed[y], i);
        const bool hc = h_.collinear(map_[placed[x]], map_[placed[y]], map_[i]);
        if (pc != hc) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t k, Mask used) {
    if (k == order_.size()) return visit_(map_);
    const int i = order_[k];
    for (int c : indices_of(candidates(i) & ~used)) {
      map_[i] = c;
      placed_ |= bit(i);
      if (consistent(i) && !extend(k + 1, used | bit(c))) return false;
      placed_ &= ~bit(i);
      map_[i] = -1;
    }
    return true;
  }

  const PartialLinearSpace& p_;
  const PartialLinearSpace& h_;
  bool induced_;
  bool strict_;
  Mask forbidden_;
  const EmbeddingVisitor& visit_;
  std::vector<int> map_;
  std::vector<int> order_;
  Mask placed_ = 0;
};

}  // namespace

void for_each_line_embedding(const PartialLinearSpace& pattern,
                             const PartialLinearSpace& host, bool strict,
                             const EmbeddingVisitor& visit) {
  Matcher(pattern, host, false, strict, 0, visit).run({});
}

void for_each_induced_embedding(const PartialLinearSpace& pattern,
                                const PartialLinearSpace& host,
                                const std::vector<int>& fixed, Mask forbidden,
                                const EmbeddingVisitor& visit) {
  Matcher(pattern, host, true, false, forbidden, visit).run(fixed);
}

}  // namespace steiner
