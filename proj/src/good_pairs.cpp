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


#include "steiner/good_pairs.hpp"

#include <algorithm>
#include <set>

#include "steiner/canonical.hpp"
#include "steiner/embedding.hpp"
#include "steiner/errors.hpp"
#include "steiner/kernels.hpp"
#include "steiner/path_graph.hpp"

namespace steiner {

namespace {

constexpr int kMaxExtension = 20;

// Calls fn for every subset of `universe` with lo <= size <= hi, in
// increasing size and, within a size, increasing lexicographic index order.
template <typename Fn>
void for_each_subset_sized(Mask universe, int lo, int hi, Fn&& fn) {
  const auto pts = indices_of(universe);
  hi = std::min<int>(hi, static_cast<int>(pts.size()));
  for (int k = std::max(lo, 0); k <= hi; ++k) {
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int depth, int start, Mask acc) -> void {
      if (depth == k) {
        fn(acc);
        return;
      }
      for (int i = start; i <= static_cast<int>(pts.size()) - (k - depth); ++i) {
        self(self, depth + 1, i + 1, acc | bit(pts[i]));
      }
    };
    rec(rec, 0, 0, 0);
  }
}

std::vector<Mask> traces(const PartialLinearSpace& m, Mask s) {
  std::vector<Mask> out;
  for (Mask l : m.lines()) {
    if (popcount(l & s) >= 3) out.push_back(l & s);
  }
  return out;
}

bool line_closed_in(const PartialLinearSpace& m, Mask x) {
  for (Mask l : m.lines()) {
    const int k = popcount(l & x);
    if (k > 2 && !is_subset(l, x)) return false;
  }
  return true;
}

Mask peel_core(const PartialLinearSpace& m, Mask fixed, Mask s, int min_lines) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p : indices_of(s & ~fixed)) {
      int k = 0;
      for (Mask l : m.lines()) {
        if (contains(l, p) && popcount(l & s) >= 3) ++k;
      }
      if (k < min_lines) {
        s &= ~bit(p);
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace

bool is_zero_primitive(const PartialLinearSpace& m, Mask c, Mask b,
                       const PrimitiveOptions& opts) {
  if (c == 0 || (b & c) != 0) return false;
  if (!is_subset(b | c, m.all_points())) throw InputError("point set has unknown points");
  if (popcount(c) > kMaxExtension) {
    throw CapacityError("primitivity check over more than " +
                        std::to_string(kMaxExtension) + " extension points");
  }
  if (opts.line_closed && (!line_closed_in(m, b) || !line_closed_in(m, b | c))) {
    return false;
  }
  const auto lines = traces(m, b | c);
  const int db = kernels::delta_one(lines, b);
  std::vector<Mask> sets;
  for_each_submask(c, [&](Mask sub) {
    if (sub != 0) sets.push_back(b | sub);
  });
  std::vector<int> out(sets.size());
  kernels::delta_batch(lines, sets, out);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == (b | c)) {
      if (out[i] != db) return false;
    } else if (out[i] <= db) {
      if (!opts.line_closed || line_closed_in(m, sets[i])) return false;
    }
  }
  return true;
}

std::optional<Mask> find_good_base(const PartialLinearSpace& m, Mask c, Mask b,
                                   const PrimitiveOptions& opts) {
  std::optional<Mask> found;
  const int nb = popcount(b);
  for (int k = 0; k <= nb && !found; ++k) {
    for_each_subset_sized(b, k, k, [&](Mask sub) {
      if (!found && is_zero_primitive(m, c, sub, opts)) found = sub;
    });
  }
  return found;
}

bool is_good_pair(const PartialLinearSpace& m, Mask c, Mask b,
                  const PrimitiveOptions& opts) {
  if (!is_zero_primitive(m, c, b, opts)) return false;
  auto base = find_good_base(m, c, b, opts);
  return base && *base == b;
}

GoodPairType pair_type_from_key(const std::string& key) {
  GoodPairType t;
  t.key = key;
  t.structure = structure_from_key(key, &t.base);
  return t;
}

GoodPairType pair_type_of(const PartialLinearSpace& m, Mask b, Mask c) {
  return pair_type_from_key(canonical_pair(m, b, c).type_key);
}

std::optional<int> alpha_length(const std::string& key) {
  Mask base = 0;
  const auto s = structure_from_key(key, &base);
  if (popcount(base) != 2 || s.size() < 3 || s.line_count() != 1) return std::nullopt;
  if (s.lines()[0] != s.all_points()) return std::nullopt;
  return s.size();
}

int max_disjoint(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](Mask x, Mask y) { return popcount(x) < popcount(y); });
  const int n = static_cast<int>(sets.size());
  int best = 0;
  auto rec = [&](auto&& self, int i, Mask used, int count) -> void {
    if (count + (n - i) <= best) return;
    if (i == n) {
      best = count;
      return;
    }
    if ((sets[i] & used) == 0) self(self, i + 1, used | sets[i], count + 1);
    self(self, i + 1, used, count);
  };
  rec(rec, 0, 0, 0);
  return best;
}

ChiReport chi(const PartialLinearSpace& m, const GoodPairType& pair, long long max_images) {
  ChiReport r;
  const int nb = pair.base_size();
  const PartialLinearSpace base_pattern = pair.structure.induced(pair.base);
  std::vector<Embedding> images;
  for_each_induced_embedding(base_pattern, m, {}, 0, [&](const Embedding& e) {
    images.push_back(e);
    if (static_cast<long long>(images.size()) > max_images) {
      throw CapacityError("too many base images for chi");
    }
    return true;
  });
  for (const auto& f : images) {
    Mask fb = 0;
    for (int x : f) fb |= bit(x);
    std::vector<int> fixed(pair.structure.size(), -1);
    for (int i = 0; i < nb; ++i) fixed[i] = f[i];
    std::vector<Mask> copies;
    for_each_induced_embedding(pair.structure, m, fixed, fb, [&](const Embedding& e) {
      Mask cm = 0;
      for (std::size_t i = nb; i < e.size(); ++i) cm |= bit(e[i]);
      copies.push_back(cm);
      return true;
    });
    ChiImage img;
    img.base_image = f;
    img.count = max_disjoint(std::move(copies));
    r.max = std::max(r.max, img.count);
    r.images.push_back(std::move(img));
  }
  return r;
}

std::string mu_rule_name(MuRule r) {
  switch (r) {
    case MuRule::kU: return "U";
    case MuRule::kULs: return "U_ls";
    case MuRule::kUTauPrime: return "U_tau_prime";
  }
  return "?";
}

namespace {

int floor_for(MuRule rule, const std::string& key, int base_delta) {
  const auto len = alpha_length(key);
  if (rule == MuRule::kULs && len && *len == 3) return 1;
  if (rule == MuRule::kUTauPrime && len) return 1;
  return base_delta;
}

}  // namespace

int MuFunction::bound(const std::string& key, int base_delta) const {
  auto it = overrides.find(key);
  if (it != overrides.end()) return it->second;
  return floor_for(default_rule, key, base_delta);
}

std::vector<std::string> MuFunction::floor_violations() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : overrides) {
    const auto t = pair_type_from_key(key);
    const int db = kernels::delta_one(t.structure.lines(), t.base);
    if (value < floor_for(default_rule, key, db)) out.push_back(key);
  }
  return out;
}

MuFunction mu_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("mu must be a JSON object");
  MuFunction mu;
  const std::string rule = j.value("default_rule", std::string("U"));
  if (rule == "U") {
    mu.default_rule = MuRule::kU;
  } else if (rule == "U_ls") {
    mu.default_rule = MuRule::kULs;
  } else if (rule == "U_tau_prime") {
    mu.default_rule = MuRule::kUTauPrime;
  } else {
    throw InputError("unknown mu default_rule '" + rule + "'");
  }
  if (j.contains("overrides")) {
    for (const auto& o : j["overrides"]) {
      if (!o.contains("pair") || !o.contains("bound") || !o["pair"].is_string() ||
          !o["bound"].is_number_integer()) {
        throw InputError("mu overrides need string \"pair\" and integer \"bound\"");
      }
      const std::string key = o["pair"].get<std::string>();
      pair_type_from_key(key);
      const int bnd = o["bound"].get<int>();
      if (bnd < 0) throw InputError("mu bound must be nonnegative");
      mu.overrides[key] = bnd;
    }
  }
  mu.script_b = j.value("script_b", false);
  return mu;
}

Json mu_to_json(const MuFunction& mu) {
  Json j;
  j["default_rule"] = mu_rule_name(mu.default_rule);
  j["overrides"] = Json::array();
  for (const auto& [key, value] : mu.overrides) {
    j["overrides"].push_back({{"pair", key}, {"bound", value}});
  }
  j["script_b"] = mu.script_b;
  return j;
}

void for_each_good_pair(const PartialLinearSpace& m, int max_base, int max_ext,
                        const PrimitiveOptions& opts,
                        const std::function<void(Mask b, Mask c)>& fn) {
  const Mask all = m.all_points();
  std::vector<Mask> sets;
  std::vector<int> values;
  std::vector<Mask> line_list(m.lines().begin(), m.lines().end());
  for_each_subset_sized(all, 0, max_base, [&](Mask b) {
    const int db = kernels::delta_one(line_list, b);
    sets.clear();
    // Single points: exactly one line meets B in two or more points.
    for (int p : indices_of(all & ~b)) {
      int k = 0;
      for (Mask l : line_list) {
        if (contains(l, p) && popcount(l & b) >= 2) ++k;
      }
      if (k == 1) sets.push_back(bit(p));
    }
    if (max_ext >= 2) {
      // Every point of C lies on min_lines lines meeting B u C in 3 points.
      const int min_lines = opts.line_closed ? 1 : 2;
      const Mask core = peel_core(m, b, all, min_lines) & ~b;
      for_each_subset_sized(core, 2, max_ext, [&](Mask c) {
        if (peel_core(m, b, b | c, min_lines) != (b | c)) return;
        if (opts.line_closed && !line_closed_in(m, b | c)) return;
        sets.push_back(c);
      });
    }
    if (sets.empty()) return;
    std::vector<Mask> unions(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) unions[i] = b | sets[i];
    values.resize(sets.size());
    kernels::delta_batch(line_list, unions, values);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (values[i] == db && is_good_pair(m, sets[i], b, opts)) fn(b, sets[i]);
    }
  });
}

KMuReport in_K_mu(const PartialLinearSpace& m, const MuFunction& mu, const KMuOptions& opts) {
  KMuReport report;
  struct Group {
    Mask base = 0;
    std::vector<Mask> copies;
  };
  std::map<std::pair<std::string, std::vector<int>>, Group> groups;
  for_each_good_pair(m, opts.max_base, opts.max_ext, opts.primitive, [&](Mask b, Mask c) {
    ++report.pairs_checked;
    const PairCanon pc = canonical_pair(m, b, c);
    Group& g = groups[{pc.type_key, pc.base_tuple}];
    g.base = b;
    g.copies.push_back(c);
  });
  for (const auto& [id, g] : groups) {
    const int count = max_disjoint(g.copies);
    const int bnd = mu.bound(id.first, delta(m, g.base));
    if (count <= bnd) continue;
    report.ok = false;
    KMuViolation v;
    v.key = id.first;
    for (int i : id.second) v.base.push_back(m.label(i));
    for (Mask c : g.copies) v.copies.push_back(m.labels_of(c));
    v.count = count;
    v.bound = bnd;
    report.violations.push_back(std::move(v));
  }
  if (mu.script_b) {
    const auto cycles = pseudo_cycles_over_strong_pairs(m, opts.search, 256, true);
    for (const Path& p : cycles) {
      report.ok = false;
      KMuViolation v;
      v.key = "pseudo-cycle/" + std::to_string(p.line_count());
      v.base = {m.label(p.a), m.label(p.b)};
      v.copies.push_back(m.labels_of(envelope(p) & ~(bit(p.a) | bit(p.b))));
      v.count = 1;
      v.bound = 0;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

std::vector<GoodPairType> enumerate_good_pairs(const PartialLinearSpace& m, int size_cap,
                                               const PrimitiveOptions& opts) {
  if (size_cap < 1) return {};
  long double bases = 0, term = 1;
  for (int k = 0; k < std::min(size_cap, m.size() + 1); ++k) {
    bases += term;
    term = term * (m.size() - k) / (k + 1);
  }
  if (bases > 200000.0L || size_cap > kMaxExtension) {
    throw CapacityError("good pair enumeration exceeds capacity");
  }
  std::set<std::string> keys;
  for_each_good_pair(m, size_cap - 1, size_cap, opts, [&](Mask b, Mask c) {
    if (popcount(b | c) <= size_cap) keys.insert(canonical_pair(m, b, c).type_key);
  });
  std::vector<GoodPairType> out;
  for (const auto& k : keys) out.push_back(pair_type_from_key(k));
  return out;
}

}  // namespace steiner
