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


#include <random>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "steiner/amalgam.hpp"
#include "steiner/errors.hpp"
#include "steiner/examples.hpp"
#include "steiner/predimension.hpp"

using namespace steiner;

namespace {

PartialLinearSpace space(const std::vector<std::string>& pts,
                         const std::vector<std::vector<std::string>>& lines) {
  PartialLinearSpace m;
  for (const auto& p : pts) m.add_point(p);
  for (const auto& l : lines) m.add_line(m.mask_of(l));
  return m;
}

}  // namespace

TEST_CASE("empty base gives the disjoint union") {
  const auto a = build_example("pasch");
  const auto b = space({"u", "v", "w", "z"}, {{"u", "v", "w"}});
  const auto r = free_amalgam(a, b, {});
  CHECK(r.space.size() == 10);
  CHECK(r.space.line_count() == 5);
  CHECK(delta(r.space, r.space.all_points()) == 2 + 3);
  CHECK(r.warnings.empty());
}

TEST_CASE("lines through a two-point base merge") {
  const auto a = space({"x", "y", "p"}, {{"x", "y", "p"}});
  const auto b = space({"x", "y", "q"}, {{"x", "y", "q"}});
  const auto r = free_amalgam(a, b, {"x", "y"});
  REQUIRE(r.space.line_count() == 1);
  CHECK(popcount(r.space.lines()[0]) == 4);
  CHECK(delta(r.space, r.space.all_points()) == 2);
  AmalgamOptions capped;
  capped.max_line_length = 3;
  CHECK_THROWS_AS(free_amalgam(a, b, {"x", "y"}, capped), ConstraintViolation);
}

TEST_CASE("points stay apart unless a based line joins them") {
  const auto a = space({"x", "y", "z", "p"}, {{"x", "y", "p"}});
  const auto b = space({"x", "y", "z", "q"}, {{"z", "x", "q"}});
  const auto r = free_amalgam(a, b, {"x", "y", "z"});
  CHECK(r.space.line_count() == 2);
  const int p = *r.space.index_of("p"), q = *r.space.index_of("q");
  CHECK(r.space.line_through(p, q) == -1);
  CHECK(r.space.labels().front() == "x");
}

TEST_CASE("base checks") {
  const auto a = space({"x", "y", "z", "p"}, {{"x", "y", "z"}});
  const auto b = space({"x", "y", "z", "q"}, {});
  CHECK_THROWS_AS(free_amalgam(a, b, {"x", "y", "z"}), InputError);
  const auto c = space({"x", "y", "z", "p"}, {});
  CHECK_THROWS_AS(free_amalgam(c, b, {"x", "y"}), InputError);

  // Two points of the Fano plane: delta 2 against 0 for the whole plane.
  const auto weak = build_example("fano");
  const auto other = space({"1", "2", "t"}, {});
  const auto warned = free_amalgam(weak, other, {"1", "2"});
  CHECK_FALSE(warned.base_strong_in_a);
  CHECK(warned.warnings.size() == 1);
  AmalgamOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(free_amalgam(weak, other, {"1", "2"}, strict), ConstraintViolation);
}

TEST_CASE("random amalgams are additive and keep B strong") {
  std::mt19937_64 rng(7);
  int strong_cases = 0;
  for (int round = 0; round < 2000; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto ra = oracle::random_space(rng, n, static_cast<int>(rng() % 6), 3);
    const auto a = oracle::to_space(ra, "a");
    const Mask cm = rng() & a.all_points();
    const auto c = a.induced(cm);
    // B: the base plus up to three new points on lines through one base point.
    PartialLinearSpace b = c;
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) b.add_point("b" + std::to_string(i));
    if (extra >= 2 && c.size() >= 1) {
      b.add_line(bit(0) | bit(c.size()) | bit(c.size() + 1));
    }
    const auto r = free_amalgam(a, b, c.labels());
    const auto& m = r.space;
    CHECK(delta(m, m.all_points()) ==
          delta(a, a.all_points()) + delta(b, b.all_points()) - delta(c, c.all_points()));
    if (is_strong(a, cm)) {
      ++strong_cases;
      CHECK(is_strong(m, m.mask_of(b.labels())));
    }
  }
  CHECK(strong_cases > 100);
}
