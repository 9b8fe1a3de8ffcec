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


#include "steiner/path_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "steiner/errors.hpp"

namespace steiner {

Color other(Color c) { return c == Color::kA ? Color::kB : Color::kA; }
std::string color_name(Color c) { return c == Color::kA ? "a" : "b"; }
std::string exclusion_name(Exclusion e) { return e == Exclusion::kLine ? "line" : "icl"; }

std::string truncation_name(Truncation t) {
  switch (t) {
    case Truncation::kNone: return "none";
    case Truncation::kOpenEnd: return "open end";
    case Truncation::kLeftDomain: return "left domain";
    case Truncation::kStepBudget: return "step budget";
  }
  return "?";
}

int PathGraph::edge_count(Color c) const {
  int total = 0;
  for (Mask m : adj(c)) total += popcount(m);
  return total / 2;
}

PathGraph build_graph(const PartialLinearSpace& m, int a, int b, Exclusion mode,
                      const SearchOptions& opts) {
  if (a == b) throw InputError("path graph anchors must differ");
  if (a < 0 || b < 0 || a >= m.size() || b >= m.size()) {
    throw InputError("path graph anchor out of range");
  }
  PathGraph g;
  g.a = a;
  g.b = b;
  g.mode = mode;
  if (mode == Exclusion::kLine) {
    const int l = m.line_through(a, b);
    g.excluded = l >= 0 ? m.lines()[l] : bit(a) | bit(b);
  } else {
    g.excluded = icl(m, bit(a) | bit(b), opts) | bit(a) | bit(b);
  }
  g.domain = m.all_points() & ~g.excluded;
  g.adj_a.assign(m.size(), 0);
  g.adj_b.assign(m.size(), 0);
  for (int x : indices_of(g.domain)) {
    const int la = m.line_through(a, x);
    if (la >= 0) g.adj_a[x] = m.lines()[la] & g.domain & ~bit(x);
    const int lb = m.line_through(b, x);
    if (lb >= 0) g.adj_b[x] = m.lines()[lb] & g.domain & ~bit(x);
  }
  return g;
}

Path generate_path(const PartialLinearSpace& m, const PathGraph& g, int d1, Color first,
                   int max_steps) {
  if (d1 < 0 || d1 >= m.size() || !contains(g.domain, d1)) {
    throw InputError("path seed is not in the graph domain");
  }
  Path p;
  p.a = g.a;
  p.b = g.b;
  p.first = first;
  p.points.push_back(d1);
  const Mask anchors = bit(g.a) | bit(g.b);
  Color c = first;
  int cur = d1;
  while (true) {
    if (p.line_count() >= max_steps) {
      p.truncation = Truncation::kStepBudget;
      break;
    }
    const int anchor = c == Color::kA ? g.a : g.b;
    const int l = m.line_through(anchor, cur);
    if (l < 0) {
      p.truncation = Truncation::kOpenEnd;
      break;
    }
    const auto next = m.product(anchor, cur);
    if (!next) {
      throw InputError("no star entry for " + m.label(anchor) + "*" + m.label(cur));
    }
    const Mask line = m.lines()[l];
    const int k = p.line_count();
    p.lines.push_back(line);
    for (int j = 0; j + 1 < k; ++j) {
      if ((line & p.lines[j] & ~anchors) != 0) {
        p.kind = PathKind::kPseudoCycle;
        p.closing = {j, k};
        return p;
      }
    }
    if (!contains(g.domain, *next)) {
      p.truncation = Truncation::kLeftDomain;
      break;
    }
    p.points.push_back(*next);
    cur = *next;
    c = other(c);
  }
  return p;
}

Mask envelope(const Path& p) {
  Mask e = 0;
  for (Mask l : p.lines) e |= l;
  for (int d : p.points) e |= bit(d);
  return e;
}

namespace {

// Colour refinement on the domain; returns per-point colours comparable
// across graphs (same numbering scheme for equal inputs).
std::vector<std::vector<int>> refine_signature(const PathGraph& g, bool swap,
                                               std::vector<int>* colors) {
  const int n = static_cast<int>(g.adj_a.size());
  const auto& first = swap ? g.adj_b : g.adj_a;
  const auto& second = swap ? g.adj_a : g.adj_b;
  std::vector<int> col(n, -1);
  for (int x : indices_of(g.domain)) col[x] = 0;
  std::vector<std::vector<int>> history;
  int classes = 1;
  for (int round = 0; round < n + 1; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int x : indices_of(g.domain)) {
      sig[x].push_back(col[x]);
      std::vector<int> na, nb;
      for (int y : indices_of(first[x])) na.push_back(col[y]);
      for (int y : indices_of(second[x])) nb.push_back(col[y]);
      std::sort(na.begin(), na.end());
      std::sort(nb.begin(), nb.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), na.begin(), na.end());
      sig[x].push_back(-2);
      sig[x].insert(sig[x].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq;
    for (int x : indices_of(g.domain)) uniq.push_back(sig[x]);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> hist(uniq.size(), 0);
    for (int x : indices_of(g.domain)) {
      col[x] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[x]) -
                                uniq.begin());
      ++hist[col[x]];
    }
    history.push_back(hist);
    for (auto& u : uniq) history.push_back(u);
    if (static_cast<int>(uniq.size()) == classes && round > 0) break;
    classes = static_cast<int>(uniq.size());
  }
  *colors = col;
  return history;
}

class GraphIso {
 public:
  GraphIso(const PathGraph& g1, const PathGraph& g2, bool swap,
           std::vector<int> c1, std::vector<int> c2)
      : g1_(g1), g2_(g2), swap_(swap), c1_(std::move(c1)), c2_(std::move(c2)),
        map_(g1.adj_a.size(), -1) {
    // Visit points so that each new one touches already mapped ones.
    Mask left = g1.domain;
    while (left) {
      int start = std::countr_zero(left);
      std::vector<int> queue{start};
      left &= ~bit(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (int y : indices_of((g1.adj_a[queue[i]] | g1.adj_b[queue[i]]) & left)) {
          queue.push_back(y);
          left &= ~bit(y);
        }
      }
    }
  }

  bool run() { return extend(0, 0); }

 private:
  const std::vector<Mask>& h_adj(Color c) const {
    return (c == Color::kA) != swap_ ? g2_.adj_a : g2_.adj_b;
  }

  bool fits(int x, int y) const {
    for (Color c : {Color::kA, Color::kB}) {
      const Mask nx = g1_.adj(c)[x];
      const Mask ny = h_adj(c)[y];
      for (int u : order_) {
        const int v = map_[u];
        if (v < 0) continue;
        if (contains(nx, u) != contains(ny, v)) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t k, Mask used) {
    if (k == order_.size()) return true;
    const int x = order_[k];
    for (int y : indices_of(g2_.domain & ~used)) {
      if (c2_[y] != c1_[x] || !fits(x, y)) continue;
      map_[x] = y;
      if (extend(k + 1, used | bit(y))) return true;
      map_[x] = -1;
    }
    return false;
  }

  const PathGraph& g1_;
  const PathGraph& g2_;
  bool swap_;
  std::vector<int> c1_, c2_;
  std::vector<int> map_;
  std::vector<int> order_;
};

bool iso_with(const PathGraph& g1, const PathGraph& g2, bool swap) {
  if (popcount(g1.domain) != popcount(g2.domain)) return false;
  std::vector<int> c1, c2;
  if (refine_signature(g1, false, &c1) != refine_signature(g2, swap, &c2)) return false;
  return GraphIso(g1, g2, swap, c1, c2).run();
}

}  // namespace

bool graphs_isomorphic(const PathGraph& g1, const PathGraph& g2, bool allow_color_swap) {
  if (iso_with(g1, g2, false)) return true;
  return allow_color_swap && iso_with(g1, g2, true);
}

UniformityReport is_uniform(const PartialLinearSpace& m, Exclusion mode,
                            bool allow_color_swap, const SearchOptions& opts) {
  UniformityReport r;
  std::optional<PathGraph> ref;
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) {
      if (a == b) continue;
      PathGraph g = build_graph(m, a, b, mode, opts);
      ++r.pairs_checked;
      if (!ref) {
        ref = std::move(g);
        r.reference = std::make_pair(a, b);
        continue;
      }
      if (!graphs_isomorphic(*ref, g, allow_color_swap)) {
        r.uniform = false;
        r.counterexample = std::make_pair(a, b);
        return r;
      }
    }
  }
  return r;
}

std::vector<Path> pseudo_cycles_over_strong_pairs(const PartialLinearSpace& m,
                                                  const SearchOptions& opts, int max_steps,
                                                  bool stop_at_first) {
  std::vector<Path> out;
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      if (!is_strong(m, bit(a) | bit(b), opts)) continue;
      const PathGraph g = build_graph(m, a, b, Exclusion::kIcl, opts);
      for (int d : indices_of(g.domain)) {
        for (Color c : {Color::kA, Color::kB}) {
          Path p = generate_path(m, g, d, c, max_steps);
          if (p.kind != PathKind::kPseudoCycle) continue;
          out.push_back(std::move(p));
          if (stop_at_first) return out;
        }
      }
    }
  }
  return out;
}

RDimensionBound r_dimension_lower_bound(const PartialLinearSpace& m, int budget,
                                        std::uint64_t seed) {
  RDimensionBound best;
  std::mt19937_64 rng(seed);
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  for (int round = 0; round < std::max(1, budget); ++round) {
    if (round > 0) std::shuffle(order.begin(), order.end(), rng);
    Mask chosen = 0, closed = 0;
    for (int p : order) {
      if (contains(closed, p)) continue;
      chosen |= bit(p);
      closed = r_closure(m, chosen);
    }
    if (popcount(chosen) > best.bound) {
      best.bound = popcount(chosen);
      best.witness = chosen;
    }
  }
  return best;
}

}  // namespace steiner
