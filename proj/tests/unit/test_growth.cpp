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

#include "doctest.h"
#include "steiner/classes.hpp"
#include "steiner/configurations.hpp"
#include "steiner/errors.hpp"
#include "steiner/growth.hpp"
#include "steiner/json_io.hpp"
#include "steiner/path_graph.hpp"

using namespace steiner;

namespace {

GrowthConfig config(GrowthProfile p, int points, std::uint64_t seed = 1, int q = 3) {
  GrowthConfig c;
  c.profile = p;
  c.max_points = points;
  c.seed = seed;
  c.q = q;
  return c;
}

}  // namespace

TEST_CASE("profile names") {
  for (GrowthProfile p : all_growth_profiles()) {
    CHECK(growth_profile_from_name(growth_profile_name(p)) == p);
  }
  CHECK_FALSE(growth_profile_from_name("anti-octahedron").has_value());
  GrowthConfig c = config(GrowthProfile::kTwoTrans, 14, 9, 5);
  c.attempts = 4;
  const auto back = growth_config_from_json(growth_config_to_json(c));
  CHECK(dump_json(growth_config_to_json(back)) == dump_json(growth_config_to_json(c)));
}

TEST_CASE("quasigroup growth keeps full lines with their operation") {
  const auto t = grow(config(GrowthProfile::kQuasi, 12));
  const auto& m = t.final_structure();
  CHECK(t.status == "budget");
  CHECK(m.size() == 12);
  CHECK(m.has_star_table());
  for (Mask l : m.lines()) {
    CHECK(popcount(l) == 3);
    for (int x : indices_of(l)) {
      for (int y : indices_of(l)) {
        if (x != y) CHECK(m.star_entry(x, y).has_value());
      }
    }
  }
  CHECK(verify_chain(t).ok);
}

TEST_CASE("sparse growth is infinity sparse") {
  const auto t = grow(config(GrowthProfile::kSparse, 16, 4));
  CHECK(is_infinity_sparse(t.final_structure(), 16).ok);
  CHECK(verify_chain(t).ok);
}

TEST_CASE("growth is deterministic per seed") {
  const auto c = config(GrowthProfile::kAntiMitre, 14, 11);
  const auto a = dump_json(trace_to_json(grow(c)));
  CHECK(a == dump_json(trace_to_json(grow(c))));
  const auto other = dump_json(trace_to_json(grow(config(GrowthProfile::kAntiMitre, 14, 12))));
  CHECK(a != other);
}

TEST_CASE("trace round trip") {
  const auto t = grow(config(GrowthProfile::kHruStar, 12, 2));
  const Json j = trace_to_json(t);
  const auto back = trace_from_json(parse_json(j.dump()));
  CHECK(dump_json(trace_to_json(back)) == dump_json(j));
  CHECK(verify_chain(back).ok);
  CHECK_THROWS_AS(trace_from_json(parse_json(R"({"config":{}})")), InputError);
}

TEST_CASE("a corrupted trace is caught at the corrupted step") {
  const auto t = grow(config(GrowthProfile::kAntiPasch, 14, 3));
  REQUIRE(t.steps.size() > 3);
  std::size_t k = 0;
  for (std::size_t i = 1; i < t.steps.size(); ++i) {
    if (t.steps[i].structure.line_count() > t.steps[i - 1].structure.line_count()) k = i;
  }
  REQUIRE(k > 0);
  Json j = trace_to_json(t);
  Json& lines = j["steps"][k]["structure"]["lines"];
  // Drop a line that is new at step k.
  const auto prev = t.steps[k - 1].structure;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    bool old = true;
    for (const auto& p : lines[i]) old = old && prev.index_of(p.get<std::string>()).has_value();
    if (!old) {
      lines.erase(i);
      break;
    }
  }
  j["steps"][k]["hash"] = structure_hash(structure_from_json(j["steps"][k]["structure"]));
  const auto r = verify_chain(trace_from_json(j));
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front().rfind("step " + std::to_string(k) + ":", 0) == 0);

  Json h = trace_to_json(t);
  h["steps"][1]["hash"] = "0000";
  const auto hr = verify_chain(trace_from_json(h));
  CHECK(hr.failures.front() == "step 1: hash mismatch");
}

TEST_CASE("script-B growth avoids pseudo-cycles over strong pairs") {
  const auto t = grow(config(GrowthProfile::kScriptB, 14, 5));
  CHECK(pseudo_cycles_over_strong_pairs(t.final_structure(), {}, 256, true).empty());
}

TEST_CASE("bad growth input") {
  GrowthConfig c = config(GrowthProfile::kSparse, 10);
  c.seed_structure = "octahedron";
  CHECK_THROWS_AS(grow(c), InputError);
}
