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


#include "steiner/configurations.hpp"

#include <algorithm>

#include "steiner/errors.hpp"
#include "steiner/kernels.hpp"

namespace steiner {

namespace {

constexpr int kMaxBruteForce = 26;

PartialLinearSpace from_lists(const std::vector<std::string>& pts,
                              const std::vector<std::vector<std::string>>& lines) {
  PartialLinearSpace m;
  for (const auto& p : pts) m.add_point(p);
  for (const auto& l : lines) m.add_line(m.mask_of(l));
  return m;
}

}  // namespace

std::string template_name(Template t) {
  switch (t) {
    case Template::kPasch: return "pasch";
    case Template::kMitre: return "mitre";
    case Template::kMia: return "mia";
    case Template::kFano: return "fano";
  }
  return "?";
}

std::optional<Template> template_from_name(const std::string& name) {
  for (Template t : {Template::kPasch, Template::kMitre, Template::kMia, Template::kFano}) {
    if (template_name(t) == name) return t;
  }
  return std::nullopt;
}

PartialLinearSpace config_template(Template t) {
  switch (t) {
    case Template::kPasch:
      return from_lists({"D", "E", "F", "G", "H", "X"},
                        {{"D", "G", "E"}, {"F", "E", "X"}, {"F", "D", "H"}, {"H", "G", "X"}});
    case Template::kMitre:
      return from_lists({"x", "a", "b", "c", "a'", "b'", "c'"},
                        {{"a", "b", "c"},
                         {"a'", "b'", "c'"},
                         {"x", "a", "c'"},
                         {"x", "b", "b'"},
                         {"x", "c", "a'"}});
    case Template::kMia:
      return from_lists({"D", "E", "F", "G", "H", "X", "M"}, {{"D", "G", "E"},
                                                               {"F", "E", "X"},
                                                               {"F", "D", "H"},
                                                               {"H", "G", "X"},
                                                               {"E", "H", "M"}});
    case Template::kFano:
      return from_lists({"1", "2", "3", "4", "5", "6", "7"}, {{"1", "2", "3"},
                                                               {"1", "4", "5"},
                                                               {"1", "6", "7"},
                                                               {"2", "4", "6"},
                                                               {"2", "5", "7"},
                                                               {"3", "4", "7"},
                                                               {"3", "5", "6"}});
  }
  throw InputError("unknown template");
}

std::vector<Embedding> find_config(const PartialLinearSpace& m, Template t, bool strict,
                                   std::size_t limit) {
  std::vector<Embedding> out;
  for_each_line_embedding(config_template(t), m, strict, [&](const Embedding& e) {
    out.push_back(e);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

SparseCheck is_infinity_sparse(const PartialLinearSpace& m, int size_cap) {
  SparseCheck r;
  if (m.size() > kMaxBruteForce) {
    throw CapacityError("infinity-sparse check is exhaustive up to " +
                        std::to_string(kMaxBruteForce) + " points");
  }
  std::vector<Mask> lines(m.lines().begin(), m.lines().end());
  std::vector<Mask> batch;
  std::vector<int> values;
  auto flush = [&] {
    values.resize(batch.size());
    kernels::delta_batch(lines, batch, values);
    for (std::size_t i = 0; i < batch.size() && r.ok; ++i) {
      if (values[i] == 2) {
        r.ok = false;
        r.witness = batch[i];
      }
    }
    batch.clear();
  };
  for_each_submask(m.all_points(), [&](Mask s) {
    if (!r.ok) return;
    const int k = popcount(s);
    if (k < 6 || k > size_cap) return;
    batch.push_back(s);
    if (batch.size() == 4096) flush();
  });
  if (r.ok) flush();
  return r;
}

long long count_configurations(const PartialLinearSpace& m, int n) {
  const int k = n + 2;
  if (k > m.size()) return 0;
  long long count = 0;
  auto rec = [&](auto&& self, int depth, int start, Mask acc) -> void {
    if (depth == k) {
      int full = 0;
      for (Mask l : m.lines()) {
        const int t = popcount(l & acc);
        if (t > 3) return;
        if (t == 3) ++full;
      }
      if (full == n) ++count;
      return;
    }
    for (int i = start; i <= m.size() - (k - depth); ++i) self(self, depth + 1, i + 1, acc | bit(i));
  };
  rec(rec, 0, 0, 0);
  return count;
}

}  // namespace steiner
