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


#include "steiner/classes.hpp"

#include "steiner/configurations.hpp"
#include "steiner/errors.hpp"
#include "steiner/kernels.hpp"

namespace steiner {

namespace {

constexpr int kMaxBruteForce = 26;

ClassResult fail(std::string reason, Mask witness) { return {false, std::move(reason), witness}; }

ClassResult check_k0(const PartialLinearSpace& m, const SearchOptions& opts) {
  Mask arg = 0;
  const int v = d(m, 0, opts, &arg);
  if (v < 0) return fail("a subset has negative predimension", arg);
  return {};
}

ClassResult check_line_cap(const PartialLinearSpace& m, int cap) {
  for (Mask l : m.lines()) {
    if (popcount(l) > cap) return fail("line longer than " + std::to_string(cap), l);
  }
  return {};
}

ClassResult check_small_strong(const PartialLinearSpace& m, int max_size,
                               const SearchOptions& opts) {
  for (int k = 1; k <= max_size; ++k) {
    ClassResult r;
    auto rec = [&](auto&& self, int depth, int start, Mask acc) -> void {
      if (!r.ok) return;
      if (depth == k) {
        if (!is_strong(m, acc, opts)) r = fail("set of size " + std::to_string(k) + " is not strong", acc);
        return;
      }
      for (int i = start; i <= m.size() - (k - depth); ++i) self(self, depth + 1, i + 1, acc | bit(i));
    };
    rec(rec, 0, 0, 0);
    if (!r.ok) return r;
  }
  return {};
}

ClassResult check_anti(const PartialLinearSpace& m, Template t, const SearchOptions& opts) {
  if (auto r = check_line_cap(m, 3); !r.ok) return r;
  if (auto r = check_k0(m, opts); !r.ok) return r;
  const auto found = find_config(m, t, true, 1);
  if (!found.empty()) {
    Mask w = 0;
    for (int x : found[0]) w |= bit(x);
    return fail("contains a " + template_name(t) + " configuration", w);
  }
  return {};
}

ClassResult check_quasi(const PartialLinearSpace& m, const ClassSpec& spec) {
  if (!spec.free_algebra) throw InputError("quasigroup class needs a free algebra");
  if (!m.has_star_table()) throw InputError("quasigroup class needs a star table");
  const StarTable& f2 = *spec.free_algebra;
  const int q = f2.n;
  for (Mask l : m.lines()) {
    if (popcount(l) != q) return fail("line without exactly " + std::to_string(q) + " points", l);
    const auto pts = indices_of(l);
    for (int x : pts) {
      for (int y : pts) {
        if (x != y && !m.star_entry(x, y)) return fail("line missing star entries", l);
      }
    }
    const PartialStar star = [&](int x, int y) -> std::optional<int> {
      if (x == y) return x;
      return m.star_entry(x, y);
    };
    if (!map_from_generators(f2, pts[0], pts[1], star)) {
      return fail("line is not a copy of the free algebra", l);
    }
  }
  for (const auto& [xy, z] : m.star_entries()) {
    const int l = m.line_through(xy.first, xy.second);
    if (l < 0 || popcount(m.lines()[l]) != q) {
      return fail("star entry outside a full line", bit(xy.first) | bit(xy.second) | bit(z));
    }
  }
  return check_k0(m, spec.search);
}

}  // namespace

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::kBaseK0: return "k0";
    case Profile::kSparse: return "sparse";
    case Profile::kAntiPasch: return "anti-pasch";
    case Profile::kAntiMitre: return "anti-mitre";
    case Profile::kAntiMia: return "anti-mia";
    case Profile::kHruStar: return "hru-star";
    case Profile::kTwoTrans: return "two-trans";
    case Profile::kQuasi: return "quasi";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& name) {
  for (Profile p : {Profile::kBaseK0, Profile::kSparse, Profile::kAntiPasch, Profile::kAntiMitre,
                    Profile::kAntiMia, Profile::kHruStar, Profile::kTwoTrans, Profile::kQuasi}) {
    if (profile_name(p) == name) return p;
  }
  return std::nullopt;
}

ClassResult check_sparse(const PartialLinearSpace& m) {
  if (m.size() > kMaxBruteForce) {
    throw CapacityError("sparseness check is exhaustive up to " +
                        std::to_string(kMaxBruteForce) + " points");
  }
  std::vector<Mask> lines(m.lines().begin(), m.lines().end());
  std::vector<Mask> batch;
  std::vector<int> values;
  ClassResult r;
  auto flush = [&] {
    values.resize(batch.size());
    kernels::delta_batch(lines, batch, values);
    for (std::size_t i = 0; i < batch.size() && r.ok; ++i) {
      const int k = popcount(batch[i]);
      if ((k > 1 && values[i] <= 1) || (k > 3 && values[i] <= 2)) {
        r = fail("subset of " + std::to_string(k) + " points has predimension " +
                     std::to_string(values[i]),
                 batch[i]);
      }
    }
    batch.clear();
  };
  for_each_submask(m.all_points(), [&](Mask s) {
    if (!r.ok || popcount(s) < 2) return;
    batch.push_back(s);
    if (batch.size() == 4096) flush();
  });
  if (r.ok) flush();
  return r;
}

ClassResult satisfies_class(const PartialLinearSpace& m, const ClassSpec& spec) {
  if (spec.line_length_cap) {
    if (auto r = check_line_cap(m, *spec.line_length_cap); !r.ok) return r;
  }
  switch (spec.profile) {
    case Profile::kBaseK0:
      return check_k0(m, spec.search);
    case Profile::kSparse:
      return check_sparse(m);
    case Profile::kAntiPasch:
      return check_anti(m, Template::kPasch, spec.search);
    case Profile::kAntiMitre:
      return check_anti(m, Template::kMitre, spec.search);
    case Profile::kAntiMia:
      return check_anti(m, Template::kMia, spec.search);
    case Profile::kHruStar: {
      if (auto r = check_line_cap(m, 3); !r.ok) return r;
      if (auto r = check_k0(m, spec.search); !r.ok) return r;
      return check_small_strong(m, 3, spec.search);
    }
    case Profile::kTwoTrans: {
      if (auto r = check_k0(m, spec.search); !r.ok) return r;
      return check_small_strong(m, 2, spec.search);
    }
    case Profile::kQuasi:
      return check_quasi(m, spec);
  }
  return {};
}

}  // namespace steiner
