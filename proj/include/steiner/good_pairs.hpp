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


#ifndef STEINER_GOOD_PAIRS_HPP_
#define STEINER_GOOD_PAIRS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steiner/json_io.hpp"
#include "steiner/linear_space.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

// Admissible intermediate sets for primitivity. With `line_closed`, an
// intermediate B u C0 counts only if every line of B u C meets it in at most
// two points or lies inside it (structures whose lines are all full).
struct PrimitiveOptions {
  bool line_closed = false;
};

// C nonempty, disjoint from B, delta(BC) = delta(B) and every admissible
// proper nonempty C0 of C has delta(BC0) > delta(B). Computed inside B u C.
bool is_zero_primitive(const PartialLinearSpace& m, Mask c, Mask b,
                       const PrimitiveOptions& opts = {});

// Smallest B' of B (least mask among equal sizes) over which C is
// 0-primitive, or nullopt if none.
std::optional<Mask> find_good_base(const PartialLinearSpace& m, Mask c, Mask b,
                                   const PrimitiveOptions& opts = {});

// 0-primitive and no proper subset of B is a base.
bool is_good_pair(const PartialLinearSpace& m, Mask c, Mask b,
                  const PrimitiveOptions& opts = {});

// Isomorphism type of a pair, held as the canonical key and the structure it
// names (base points first).
struct GoodPairType {
  std::string key;
  PartialLinearSpace structure;
  Mask base = 0;

  int base_size() const { return popcount(base); }
  int ext_size() const { return structure.size() - base_size(); }
};

GoodPairType pair_type_of(const PartialLinearSpace& m, Mask b, Mask c);
GoodPairType pair_type_from_key(const std::string& key);

// Line length of an alpha-shaped key (two base points, every point on one
// line), else nullopt.
std::optional<int> alpha_length(const std::string& key);

struct ChiImage {
  std::vector<int> base_image;  // pattern base position -> M index
  int count = 0;
};

struct ChiReport {
  int max = 0;
  std::vector<ChiImage> images;
};

// Per ordered image of the base, the largest number of pairwise disjoint
// induced copies of the extension. Throws CapacityError above `max_images`.
ChiReport chi(const PartialLinearSpace& m, const GoodPairType& pair,
              long long max_images = 1'000'000);

// Maximum number of pairwise disjoint sets.
int max_disjoint(std::vector<Mask> sets);

enum class MuRule { kU, kULs, kUTauPrime };

struct MuFunction {
  MuRule default_rule = MuRule::kU;
  std::map<std::string, int> overrides;
  // Forbid pseudo-cycles over strong pairs.
  bool script_b = false;

  // Bound for a pair type whose base has predimension base_delta.
  int bound(const std::string& key, int base_delta) const;
  // Overrides below the family's floor.
  std::vector<std::string> floor_violations() const;
};

MuFunction mu_from_json(const Json& j);
Json mu_to_json(const MuFunction& mu);
std::string mu_rule_name(MuRule r);

struct KMuOptions {
  int max_base = 3;
  int max_ext = 4;
  PrimitiveOptions primitive;
  SearchOptions search;
};

struct KMuViolation {
  std::string key;
  std::vector<std::string> base;
  std::vector<std::vector<std::string>> copies;
  int count = 0;
  int bound = 0;
};

struct KMuReport {
  bool ok = true;
  std::vector<KMuViolation> violations;
  long long pairs_checked = 0;
};

// Visits every good pair (B, C) in M with |B| <= max_base, |C| <= max_ext.
void for_each_good_pair(const PartialLinearSpace& m, int max_base, int max_ext,
                        const PrimitiveOptions& opts,
                        const std::function<void(Mask b, Mask c)>& fn);

// chi <= mu for every good pair within the caps; with mu.script_b, also no
// pseudo-cycle over a strong pair.
KMuReport in_K_mu(const PartialLinearSpace& m, const MuFunction& mu,
                  const KMuOptions& opts = {});

// Distinct types of good pairs with |B u C| <= size_cap, sorted by key.
std::vector<GoodPairType> enumerate_good_pairs(const PartialLinearSpace& m, int size_cap,
                                               const PrimitiveOptions& opts = {});

}  // namespace steiner

#endif  // STEINER_GOOD_PAIRS_HPP_
