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


#include <string>
#include <vector>

#include "doctest.h"
#include "steiner/errors.hpp"
#include "steiner/examples.hpp"
#include "steiner/json_io.hpp"
#include "steiner/linear_space.hpp"

using namespace steiner;

namespace {

PartialLinearSpace make(int n, std::vector<std::vector<int>> lines) {
  PartialLinearSpace m;
  for (int i = 0; i < n; ++i) m.add_point(std::to_string(i));
  for (const auto& l : lines) {
    Mask s = 0;
    for (int p : l) s |= bit(p);
    m.add_line(s);
  }
  return m;
}

}  // namespace

TEST_CASE("lines and incidence") {
  const auto m = make(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(m.line_count() == 2);
  CHECK(m.line_through(0, 1) == 0);
  CHECK(m.line_through(0, 3) == -1);
  CHECK(m.collinear(0, 1, 2));
  CHECK_FALSE(m.collinear(0, 1, 3));
  CHECK(m.lines_at(2).size() == 2);
  CHECK(m.labels_of(0b101) == std::vector<std::string>{"0", "2"});
}

TEST_CASE("two lines may not share a pair") {
  auto m = make(5, {{0, 1, 2}});
  CHECK_THROWS_AS(m.add_line(0b01011), InputError);
  CHECK_THROWS_AS(m.add_line(0b11), InputError);
  CHECK_THROWS_AS(m.add_point("0"), InputError);
}

TEST_CASE("extend_line keeps the linear space axiom") {
  auto m = make(6, {{0, 1, 2}, {3, 4, 5}});
  m.extend_line(0, 0b1111);
  CHECK(popcount(m.lines()[0]) == 4);
  CHECK_THROWS_AS(m.extend_line(0, 0b110111), InputError);
}

TEST_CASE("star entries stay on lines") {
  auto m = make(4, {{0, 1, 2}});
  m.enable_star_table();
  m.set_star(0, 1, 2);
  CHECK(m.product(0, 1) == 2);
  CHECK(m.product(2, 2) == 2);
  CHECK(m.product(1, 0) == 2);
  auto wide = make(5, {{0, 1, 2, 3}});
  CHECK_FALSE(wide.product(0, 1).has_value());
  CHECK_THROWS_AS(m.set_star(0, 3, 1), InputError);
  CHECK_THROWS_AS(m.set_star(0, 1, 0), InputError);
}

TEST_CASE("induced substructure drops short traces") {
  const auto m = make(6, {{0, 1, 2, 3}, {3, 4, 5}});
  const auto sub = m.induced(0b111011);
  CHECK(sub.size() == 5);
  CHECK(sub.line_count() == 2);
  const auto small = m.induced(0b011001);
  CHECK(small.line_count() == 0);
}

TEST_CASE("json round trip is canonical") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const auto m = build_example(name);
    const std::string once = dump_json(structure_to_json(m));
    const auto back = structure_from_json(parse_json(once));
    CHECK(back.same_as(m));
    CHECK(dump_json(structure_to_json(back)) == once);
  }
}

TEST_CASE("json input validation") {
  CHECK_THROWS_AS(parse_json("{\"points\": [1, 2", "x.json"), InputError);
  CHECK_THROWS_AS(structure_from_json(parse_json(R"({"points":["a","b","c"],"lines":[["a","b","z"]]})")),
                  InputError);
  CHECK_THROWS_AS(
      structure_from_json(parse_json(
          R"({"points":["a","b","c","d"],"lines":[["a","b","c"],["a","b","d"]]})")),
      InputError);
  const auto m = structure_from_json(parse_json(R"({"points":[1,2,3,4],"lines":[[1,4],[1,2,3]]})"));
  CHECK(m.line_count() == 1);
  CHECK(m.index_of("4").has_value());
  try {
    parse_json("{\n  \"points\": [,]\n}", "broken.json");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
