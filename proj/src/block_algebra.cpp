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


#include "steiner/block_algebra.hpp"

#include <algorithm>
#include <map>

#include "steiner/errors.hpp"

namespace steiner {

bool is_latin_square(const StarTable& t) {
  for (int i = 0; i < t.n; ++i) {
    std::vector<bool> row(t.n, false), col(t.n, false);
    for (int j = 0; j < t.n; ++j) {
      const int r = t(i, j), c = t(j, i);
      if (r < 0 || r >= t.n || c < 0 || c >= t.n || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

bool is_idempotent(const StarTable& t) {
  for (int x = 0; x < t.n; ++x) {
    if (t(x, x) != x) return false;
  }
  return true;
}

std::optional<std::array<int, 3>> associativity_witness(const StarTable& t) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      for (int z = 0; z < t.n; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) return std::array<int, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> two_generated(const StarTable& t, int x, int y) {
  if (x == y) throw InputError("two_generated needs distinct generators");
  std::vector<bool> in(t.n, false);
  std::vector<int> elems{x, y};
  in[x] = in[y] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int z : {t(elems[i], elems[j]), t(elems[j], elems[i])}) {
        if (!in[z]) {
          in[z] = true;
          elems.push_back(z);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::optional<std::vector<int>> map_from_generators(const StarTable& free2, int x, int y,
                                                    const PartialStar& star) {
  std::vector<int> phi(free2.n, -1);
  phi[0] = x;
  phi[1] = y;
  std::vector<int> known{0, 1};
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [s, u] : {std::pair{known[i], known[j]}, std::pair{known[j], known[i]}}) {
        const int su = free2(s, u);
        if (phi[su] >= 0) continue;
        const auto img = star(phi[s], phi[u]);
        if (!img) return std::nullopt;
        phi[su] = *img;
        known.push_back(su);
      }
    }
  }
  if (static_cast<int>(known.size()) != free2.n) return std::nullopt;
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  for (int s = 0; s < free2.n; ++s) {
    for (int u = 0; u < free2.n; ++u) {
      const auto img = star(phi[s], phi[u]);
      if (!img || *img != phi[free2(s, u)]) return std::nullopt;
    }
  }
  return phi;
}

BlockAlgebra::BlockAlgebra(FiniteField field, int a, int power)
    : field_(std::move(field)), a_(a), power_(power), size_(1) {
  if (a < 0 || a >= field_.q()) throw InputError("element a is outside the field");
  if (power < 1) throw InputError("power must be at least 1");
  for (int i = 0; i < power; ++i) {
    if (size_ > 65536 / field_.q()) throw InputError("algebra carrier too large");
    size_ *= field_.q();
  }
}

int BlockAlgebra::star(int x, int y) const {
  const int q = field_.q();
  int r = 0, place = 1;
  for (int i = 0; i < power_; ++i) {
    const int xi = x % q, yi = y % q;
    r += field_.add(yi, field_.mul(field_.sub(xi, yi), a_)) * place;
    x /= q;
    y /= q;
    place *= q;
  }
  return r;
}

std::string BlockAlgebra::label(int x) const {
  if (power_ == 1) return std::to_string(x);
  std::string s = "(";
  for (int i = 0; i < power_; ++i) {
    if (i) s += ",";
    s += std::to_string(x % field_.q());
    x /= field_.q();
  }
  return s + ")";
}

StarTable BlockAlgebra::table() const {
  StarTable t;
  t.n = size_;
  t.table.resize(static_cast<std::size_t>(size_) * size_);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) t.at(x, y) = star(x, y);
    t.labels.push_back(label(x));
  }
  return t;
}

StarTable BlockAlgebra::free_algebra() const {
  return BlockAlgebra(field_, a_, 1).table();
}

VarietyReport verify_2q_variety(const StarTable& t, const StarTable& free2) {
  VarietyReport r;
  r.q = free2.n;
  const PartialStar star = [&](int x, int y) -> std::optional<int> { return t(x, y); };
  for (int x = 0; x < t.n; ++x) {
    for (int y = x + 1; y < t.n; ++y) {
      ++r.pairs_checked;
      const auto gen = two_generated(t, x, y);
      if (static_cast<int>(gen.size()) != free2.n) {
        r.ok = false;
        r.witness = std::make_pair(x, y);
        r.reason = "subalgebra has " + std::to_string(gen.size()) + " elements";
        return r;
      }
      if (!map_from_generators(free2, x, y, star)) {
        r.ok = false;
        r.witness = std::make_pair(x, y);
        r.reason = "subalgebra is not isomorphic to the free algebra";
        return r;
      }
    }
  }
  return r;
}

PartialLinearSpace induced_steiner(const StarTable& t, const StarTable& free2) {
  if (t.n > kMaxPoints) {
    throw CapacityError("Steiner system on " + std::to_string(t.n) + " points exceeds " +
                        std::to_string(kMaxPoints));
  }
  const auto rep = verify_2q_variety(t, free2);
  if (!rep.ok) {
    throw ConstraintViolation("not a (2," + std::to_string(free2.n) + ") variety at pair (" +
                              t.labels[rep.witness->first] + ", " +
                              t.labels[rep.witness->second] + "): " + rep.reason);
  }
  PartialLinearSpace m;
  for (int x = 0; x < t.n; ++x) m.add_point(t.labels[x]);
  m.enable_star_table();
  for (int x = 0; x < t.n; ++x) {
    for (int y = x + 1; y < t.n; ++y) {
      if (m.line_through(x, y) >= 0) continue;
      Mask block = 0;
      for (int z : two_generated(t, x, y)) block |= bit(z);
      if (popcount(block) >= 3) m.add_line(block);
    }
  }
  for (Mask block : m.lines()) {
    for (int x : indices_of(block)) {
      for (int y : indices_of(block)) {
        if (x != y) m.set_star(x, y, t(x, y));
      }
    }
  }
  return m;
}

namespace {

struct Term {
  int left = -1, right = -1;  // -1: leaf
  int depth = 0;
};

std::string term_string(const std::vector<Term>& terms, int i, bool outer) {
  const Term& t = terms[i];
  if (t.left < 0) return i == 0 ? "x" : "y";
  std::string s = term_string(terms, t.left, false) + "*" + term_string(terms, t.right, false);
  return outer ? s : "(" + s + ")";
}

std::vector<std::vector<int>> term_functions(const std::vector<Term>& terms,
                                             const StarTable& a) {
  const std::size_t nn = static_cast<std::size_t>(a.n) * a.n;
  std::vector<std::vector<int>> f(terms.size(), std::vector<int>(nn));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    for (int x = 0; x < a.n; ++x) {
      for (int y = 0; y < a.n; ++y) {
        const std::size_t k = static_cast<std::size_t>(x) * a.n + y;
        f[i][k] = t.left < 0 ? (i == 0 ? x : y) : a(f[t.left][k], f[t.right][k]);
      }
    }
  }
  return f;
}

}  // namespace

std::vector<Identity> check_two_variable_identities(const StarTable& free2,
                                                    const StarTable& carrier, int depth) {
  std::vector<Term> terms{{}, {}};
  std::size_t prev_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t end = terms.size();
    for (std::size_t s = 0; s < end; ++s) {
      for (std::size_t u = 0; u < end; ++u) {
        if (s < prev_begin && u < prev_begin) continue;
        terms.push_back({static_cast<int>(s), static_cast<int>(u),
                         std::max(terms[s].depth, terms[u].depth) + 1});
      }
    }
    prev_begin = end;
  }
  const auto on_free = term_functions(terms, free2);
  const auto on_carrier = term_functions(terms, carrier);
  std::map<std::vector<int>, int> first;
  std::vector<Identity> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto [it, fresh] = first.emplace(on_free[i], static_cast<int>(i));
    if (fresh) continue;
    Identity id;
    id.lhs = term_string(terms, static_cast<int>(i), true);
    id.rhs = term_string(terms, it->second, true);
    id.holds_on_carrier = on_carrier[i] == on_carrier[it->second];
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace steiner
