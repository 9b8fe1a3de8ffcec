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


#include "steiner/predimension.hpp"

#include <limits>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/kernels.hpp"

namespace steiner {

namespace {

void check_points(const PartialLinearSpace& m, Mask a) {
  if (!is_subset(a, m.all_points())) throw InputError("point set has unknown points");
}

constexpr int kLeafBatch = 8;
constexpr int kMinInt = std::numeric_limits<int>::min();

// Branch and bound for the smallest minimizer of delta over A <= X <= S.
class MinimizerSearch {
 public:
  MinimizerSearch(std::vector<Mask> lines, Mask a, int stop_below)
      : lines_(std::move(lines)), stop_below_(stop_below) {
    best_delta_ = kernels::delta_one(lines_, a);
    best_set_ = a;
  }

  void run(Mask x, Mask w) { dfs(x, w); }
  int best_delta() const { return best_delta_; }
  Mask best_set() const { return best_set_; }

 private:
  bool done() const { return best_delta_ < stop_below_; }

  void offer(int dv, Mask set) {
    if (dv < best_delta_ ||
        (dv == best_delta_ && popcount(set) < popcount(best_set_)) ||
        (dv == best_delta_ && popcount(set) == popcount(best_set_) && set < best_set_)) {
      best_delta_ = dv;
      best_set_ = set;
    }
  }

  void leaves(Mask x, Mask w) {
    sets_.clear();
    for_each_submask(w, [&](Mask sub) { sets_.push_back(x | sub); });
    out_.resize(sets_.size());
    kernels::delta_batch(lines_, sets_, out_);
    for (std::size_t i = 0; i < sets_.size(); ++i) offer(out_[i], sets_[i]);
  }

  void dfs(Mask x, Mask w) {
    if (done()) return;
    if (popcount(w) <= kLeafBatch) {
      leaves(x, w);
      return;
    }
    const Mask reach = x | w;
    int lb = kernels::delta_one(lines_, x);
    int pick = -1;
    int pick_deg = -1;
    for (int p : indices_of(w)) {
      int deg = 0;
      for (Mask l : lines_) {
        if (contains(l, p) && popcount(l & reach & ~bit(p)) >= 2) ++deg;
      }
      if (deg > 1) lb += 1 - deg;
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = p;
      }
    }
    if (lb > best_delta_ || (lb == best_delta_ && popcount(x) >= popcount(best_set_))) {
      return;
    }
    dfs(x | bit(pick), w & ~bit(pick));
    dfs(x, w & ~bit(pick));
  }

  std::vector<Mask> lines_;
  int stop_below_;
  int best_delta_;
  Mask best_set_;
  std::vector<Mask> sets_;
  std::vector<int> out_;
};

// Removes points of S - A lying on fewer than two lines with at least three
// points in S; no smallest minimizer uses them.
Mask peel(std::span<const Mask> lines, Mask a, Mask s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p : indices_of(s & ~a)) {
      int k = 0;
      for (Mask l : lines) {
        if (contains(l, p) && popcount(l & s) >= 3) ++k;
      }
      if (k < 2) {
        s &= ~bit(p);
        changed = true;
      }
    }
  }
  return s;
}

int search(const PartialLinearSpace& m, Mask a, Mask within,
           const SearchOptions& opts, int stop_below, Mask* argmin) {
  check_points(m, a | within);
  within |= a;
  const Mask s = peel(m.lines(), a, within);
  std::vector<Mask> lines;
  for (Mask l : m.lines()) {
    if (popcount(l & s) >= 3) lines.push_back(l & s);
  }
  const Mask free = s & ~a;
  if (popcount(free) > opts.capacity) {
    throw CapacityError("superset search over " + std::to_string(popcount(free)) +
                        " points exceeds capacity " + std::to_string(opts.capacity));
  }
  MinimizerSearch ms(std::move(lines), a, stop_below);
  ms.run(a, free);
  if (argmin) *argmin = ms.best_set();
  return ms.best_delta();
}

}  // namespace

int delta(const PartialLinearSpace& m, Mask a) {
  check_points(m, a);
  return kernels::delta_one(m.lines(), a);
}

int rel_delta(const PartialLinearSpace& m, Mask a, Mask b) {
  if ((a & b) != 0) throw InputError("rel_delta needs disjoint sets");
  return delta(m, a | b) - delta(m, b);
}

int d(const PartialLinearSpace& m, Mask a, const SearchOptions& opts, Mask* argmin) {
  return d_within(m, a, m.all_points(), opts, argmin);
}

int d_within(const PartialLinearSpace& m, Mask a, Mask within,
             const SearchOptions& opts, Mask* argmin) {
  return search(m, a, within, opts, kMinInt, argmin);
}

bool is_strong(const PartialLinearSpace& m, Mask a, const SearchOptions& opts) {
  return is_strong_within(m, a, m.all_points(), opts);
}

bool is_strong_within(const PartialLinearSpace& m, Mask a, Mask within,
                      const SearchOptions& opts) {
  const int da = delta(m, a);
  return search(m, a, within, opts, da, nullptr) == da;
}

Mask icl(const PartialLinearSpace& m, Mask a, const SearchOptions& opts) {
  Mask out = a;
  search(m, a, m.all_points(), opts, kMinInt, &out);
  return out;
}

Mask r_closure(const PartialLinearSpace& m, Mask x) {
  check_points(m, x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask l : m.lines()) {
      if (popcount(l & x) >= 2 && !is_subset(l, x)) {
        x |= l;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace steiner
