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


#include "steiner/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

struct Local {
  std::vector<int> pts;    // local -> M index
  std::vector<Mask> lines;  // over local indices
  int nb = 0;
};

std::vector<int> refine(const Local& s) {
  const int n = static_cast<int>(s.pts.size());
  std::vector<int> color(n);
  for (int i = 0; i < n; ++i) color[i] = i < s.nb ? 0 : 1;
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<std::vector<int>>>> sig(n);
    for (int p = 0; p < n; ++p) {
      sig[p].first = color[p];
      for (Mask l : s.lines) {
        if (!contains(l, p)) continue;
        std::vector<int> others;
        for (int q : indices_of(l & ~bit(p))) others.push_back(color[q]);
        std::sort(others.begin(), others.end());
        sig[p].second.push_back(std::move(others));
      }
      std::sort(sig[p].second.begin(), sig[p].second.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int p = 0; p < n; ++p) {
      color[p] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[p]) -
                                  uniq.begin());
    }
    if (static_cast<int>(uniq.size()) == classes) break;
    classes = static_cast<int>(uniq.size());
  }
  return color;
}

class Labeller {
 public:
  Labeller(const Local& s, std::vector<std::vector<int>> cells)
      : s_(s), cells_(std::move(cells)) {}

  void run() {
    perm_.clear();
    used_.assign(s_.pts.size(), false);
    walk(0, 0);
  }

  std::vector<Mask> best_code;
  std::vector<std::vector<int>> best_perms;  // position -> local index

 private:
  void walk(std::size_t cell, std::size_t within) {
    if (cell == cells_.size()) {
      evaluate();
      return;
    }
    if (within == cells_[cell].size()) {
      walk(cell + 1, 0);
      return;
    }
    for (int p : cells_[cell]) {
      if (used_[p]) continue;
      used_[p] = true;
      perm_.push_back(p);
      walk(cell, within + 1);
      perm_.pop_back();
      used_[p] = false;
    }
  }

  void evaluate() {
    std::vector<int> pos(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) pos[perm_[i]] = static_cast<int>(i);
    code_.clear();
    for (Mask l : s_.lines) {
      Mask r = 0;
      for (int q : indices_of(l)) r |= bit(pos[q]);
      code_.push_back(r);
    }
    std::sort(code_.begin(), code_.end());
    if (best_perms.empty() || code_ < best_code) {
      best_code = code_;
      best_perms.clear();
    }
    if (code_ == best_code) best_perms.push_back(perm_);
  }

  const Local& s_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::vector<Mask> code_;
};

}  // namespace

PairCanon canonical_pair(const PartialLinearSpace& m, Mask b, Mask c, long long max_perms) {
  if ((b & c) != 0) throw InputError("canonical_pair needs disjoint sets");
  Local s;
  for (int i : indices_of(b)) s.pts.push_back(i);
  s.nb = static_cast<int>(s.pts.size());
  for (int i : indices_of(c)) s.pts.push_back(i);
  const Mask bc = b | c;
  for (Mask l : m.lines()) {
    const Mask t = l & bc;
    if (popcount(t) < 3) continue;
    Mask r = 0;
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
      if (contains(t, s.pts[i])) r |= bit(static_cast<int>(i));
    }
    s.lines.push_back(r);
  }

  const auto color = refine(s);
  const int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> cells(ncolors);
  for (std::size_t p = 0; p < color.size(); ++p) cells[color[p]].push_back(static_cast<int>(p));
  long double count = 1;
  for (const auto& cell : cells) {
    for (std::size_t k = 2; k <= cell.size(); ++k) count *= static_cast<long double>(k);
  }
  if (count > static_cast<long double>(max_perms)) {
    throw CapacityError("canonical labelling needs too many permutations");
  }

  Labeller lab(s, cells);
  lab.run();

  PairCanon out;
  std::ostringstream key;
  key << 'b' << s.nb << 'c' << (s.pts.size() - s.nb);
  for (Mask l : lab.best_code) {
    key << '/';
    bool first = true;
    for (int q : indices_of(l)) {
      key << (first ? "" : ".") << q;
      first = false;
    }
  }
  out.type_key = key.str();
  for (const auto& perm : lab.best_perms) {
    std::vector<int> tuple;
    for (int i = 0; i < s.nb; ++i) tuple.push_back(s.pts[perm[i]]);
    if (out.base_tuple.empty() || tuple < out.base_tuple) {
      out.base_tuple = tuple;
      out.order.clear();
      for (int p : perm) out.order.push_back(s.pts[p]);
    }
  }
  if (lab.best_perms.empty()) out.order = s.pts;
  return out;
}

PartialLinearSpace structure_from_key(const std::string& key, Mask* base) {
  int nb = 0, nc = 0;
  char sep = 0;
  std::istringstream in(key);
  if (!(in.get() == 'b' && in >> nb && in.get() == 'c' && in >> nc) || nb < 0 || nc < 0 ||
      nb + nc > kMaxPoints) {
    throw InputError("bad pair key '" + key + "'");
  }
  PartialLinearSpace m;
  for (int i = 0; i < nb; ++i) m.add_point("b" + std::to_string(i));
  for (int i = 0; i < nc; ++i) m.add_point("c" + std::to_string(i));
  while (in.get(sep)) {
    if (sep != '/') throw InputError("bad pair key '" + key + "'");
    Mask l = 0;
    int q = 0;
    while (in >> q) {
      if (q < 0 || q >= nb + nc) throw InputError("bad pair key '" + key + "'");
      l |= bit(q);
      if (in.peek() != '.') break;
      in.get();
    }
    in.clear();
    m.add_line(l);
  }
  if (base) *base = full_mask(nb);
  return m;
}

}  // namespace steiner
