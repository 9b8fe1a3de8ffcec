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


#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "steiner/block_algebra.hpp"
#include "steiner/errors.hpp"
#include "steiner/examples.hpp"
#include "steiner/good_pairs.hpp"
#include "steiner/json_io.hpp"
#include "steiner/predimension.hpp"

using namespace steiner;

namespace {

PartialLinearSpace line_of(int q) {
  PartialLinearSpace m;
  for (int i = 0; i < q; ++i) m.add_point("p" + std::to_string(i));
  m.add_line(m.all_points());
  return m;
}

PartialLinearSpace shuffled(const PartialLinearSpace& m, std::mt19937_64& rng) {
  std::vector<int> perm(m.size());
  for (int i = 0; i < m.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  PartialLinearSpace out;
  for (int i = 0; i < m.size(); ++i) out.add_point("s" + m.label(perm[i]));
  std::vector<int> where(m.size());
  for (int i = 0; i < m.size(); ++i) where[perm[i]] = i;
  for (Mask l : m.lines()) {
    Mask img = 0;
    for (int p : indices_of(l)) img |= bit(where[p]);
    out.add_line(img);
  }
  return out;
}

}  // namespace

TEST_CASE("the line-length pair") {
  const auto m = line_of(3);
  CHECK(is_zero_primitive(m, 0b100, 0b011));
  CHECK(find_good_base(m, 0b100, 0b011) == Mask{0b011});
  CHECK(is_good_pair(m, 0b100, 0b011));
  const auto t = pair_type_of(m, 0b011, 0b100);
  CHECK(t.key == "b2c1/0.1.2");
  CHECK(alpha_length(t.key) == 3);
  CHECK(alpha_length("b2c3/0.1.2.3.4") == 5);
  CHECK_FALSE(alpha_length("b3c3/0.3.4/1.3.5/2.4.5").has_value());
  // A free point over anything has relative delta 1.
  PartialLinearSpace free3 = m;
  free3.add_point("z");
  CHECK_FALSE(is_zero_primitive(free3, bit(3), 0b011));
}

TEST_CASE("pasch bases") {
  const auto m = build_example("pasch");
  const auto s = [&](std::vector<std::string> v) { return m.mask_of(v); };
  CHECK(is_zero_primitive(m, s({"X", "D", "F", "G"}), s({"E", "H"})));
  CHECK(find_good_base(m, s({"X", "D", "F", "G"}), s({"E", "H"})) == s({"E", "H"}));
  // F, D, H are collinear, so D alone already keeps delta at 2 over {F, H}.
  CHECK_FALSE(is_zero_primitive(m, s({"X", "D", "E", "G"}), s({"F", "H"})));
  CHECK(delta(m, s({"F", "H", "D"})) == 2);
  const auto types = enumerate_good_pairs(m, 6);
  std::vector<std::string> keys;
  for (const auto& t : types) keys.push_back(t.key);
  CHECK(std::find(keys.begin(), keys.end(), "b2c1/0.1.2") != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), "b2c4/0.2.3/1.2.4/1.3.5/0.4.5") != keys.end());
}

TEST_CASE("mermelstein extension over its base") {
  const auto m = build_example("mermelstein");
  const Mask b = m.mask_of(mermelstein_base()), c = m.mask_of(mermelstein_extension());
  CHECK(delta(m, b | c) == delta(m, b));
  CHECK(is_zero_primitive(m, c, b));
  CHECK(find_good_base(m, c, b) == m.mask_of(std::vector<std::string>{"b1", "b2", "b3", "b4"}));
  CHECK_FALSE(is_good_pair(m, c, b));
}

TEST_CASE("chi on lines and planes") {
  for (int q = 3; q <= 7; ++q) {
    const auto m = line_of(q);
    const auto alpha = pair_type_of(line_of(3), 0b011, 0b100);
    const auto r = chi(m, alpha);
    CHECK(r.max == q - 2);
    CHECK(r.images.size() == static_cast<std::size_t>(q * (q - 1)));
  }
  const auto fano = build_example("fano");
  const auto alpha = pair_type_from_key("b2c1/0.1.2");
  const auto r = chi(fano, alpha);
  CHECK(r.max == 1);
  for (const auto& img : r.images) CHECK(img.count == 1);
  const auto pasch_pair = pair_type_from_key("b2c4/0.2.3/1.2.4/1.3.5/0.4.5");
  CHECK(chi(line_of(5), pasch_pair).max == 0);
}

TEST_CASE("chi and good pair types are invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (const std::string name : {"pasch", "mitre", "mia", "mermelstein"}) {
    const auto m = build_example(name);
    const auto types = enumerate_good_pairs(m, 6);
    for (int round = 0; round < 3; ++round) {
      const auto p = shuffled(m, rng);
      const auto again = enumerate_good_pairs(p, 6);
      REQUIRE(again.size() == types.size());
      for (std::size_t i = 0; i < types.size(); ++i) {
        CHECK(again[i].key == types[i].key);
        CHECK(chi(p, types[i]).max == chi(m, types[i]).max);
      }
    }
  }
}

TEST_CASE("good pairs of small structures") {
  CHECK(enumerate_good_pairs(PartialLinearSpace{}, 4).empty());
  const auto types = enumerate_good_pairs(line_of(5), 5);
  REQUIRE_FALSE(types.empty());
  for (const auto& t : types) CHECK(alpha_length(t.key).has_value());
  bool over_empty = false;
  for (const auto& t : enumerate_good_pairs(build_example("fano"), 7)) {
    over_empty = over_empty || t.base_size() == 0;
  }
  CHECK(over_empty);
}

TEST_CASE("max_disjoint") {
  CHECK(max_disjoint({}) == 0);
  CHECK(max_disjoint({0b11, 0b110, 0b1100}) == 2);
  CHECK(max_disjoint({0b1, 0b10, 0b100, 0b111}) == 3);
}

TEST_CASE("mu rules, overrides and json") {
  MuFunction u;
  CHECK(u.bound("b2c1/0.1.2", 2) == 2);
  MuFunction ls;
  ls.default_rule = MuRule::kULs;
  CHECK(ls.bound("b2c1/0.1.2", 2) == 1);
  CHECK(ls.bound("b2c2/0.1.2.3", 2) == 2);
  MuFunction tau;
  tau.default_rule = MuRule::kUTauPrime;
  CHECK(tau.bound("b2c2/0.1.2.3", 2) == 1);
  ls.overrides["b3c3/0.3.4/1.3.5/2.4.5"] = 1;
  ls.overrides["b2c1/0.1.2"] = 0;
  CHECK(ls.floor_violations().size() == 2);
  const auto back = mu_from_json(parse_json(mu_to_json(ls).dump()));
  CHECK(back.overrides == ls.overrides);
  CHECK(back.default_rule == MuRule::kULs);
  CHECK_THROWS_AS(mu_from_json(parse_json(R"({"default_rule":"V"})")), InputError);
  CHECK_THROWS_AS(mu_from_json(parse_json(R"({"overrides":[{"pair":"b2c1/0.1.2","bound":-1}]})")),
                  InputError);
}

TEST_CASE("membership in K_mu") {
  MuFunction ls;
  ls.default_rule = MuRule::kULs;
  CHECK(in_K_mu(build_example("fano"), ls).ok);
  const BlockAlgebra ag(FiniteField::make(3, 1), 2, 2);
  CHECK(in_K_mu(induced_steiner(ag.table(), ag.free_algebra()), ls).ok);
  // A 4-point line holds two disjoint copies of the 3-point pair.
  const auto r = in_K_mu(line_of(4), ls);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations[0].key == "b2c1/0.1.2");
  CHECK(r.violations[0].count == 2);
  CHECK(r.violations[0].bound == 1);
  // Pasch is a 4-line pseudo-cycle over two of its points.
  MuFunction scr = ls;
  scr.script_b = true;
  CHECK(in_K_mu(build_example("pasch"), ls).ok);
  CHECK_FALSE(in_K_mu(build_example("pasch"), scr).ok);
}
