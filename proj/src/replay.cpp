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


#include "steiner/replay.hpp"

#include "steiner/amalgam.hpp"
#include "steiner/examples.hpp"
#include "steiner/good_pairs.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

namespace {

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ReplayReading run_reading(const PartialLinearSpace& full, const GoodPairType& pair,
                          std::string name, const std::vector<std::string>& base,
                          const std::vector<std::string>& first_extra,
                          const std::vector<std::string>& second_extra) {
  ReplayReading r;
  r.name = std::move(name);
  r.base = base;
  r.first_side = join(base, first_extra);
  r.second_side = join(base, second_extra);
  const PartialLinearSpace first = full.induced(full.mask_of(r.first_side));
  const PartialLinearSpace second = full.induced(full.mask_of(r.second_side));
  r.base_strong_in_first = is_strong(first, first.mask_of(base));
  r.base_strong_in_second = is_strong(second, second.mask_of(base));
  r.delta_first = delta(first, first.all_points());
  r.delta_second = delta(second, second.all_points());
  r.delta_base = delta(first, first.mask_of(base));
  AmalgamOptions opts;
  const PartialLinearSpace amalgam = free_amalgam(first, second, base, opts).space;
  r.delta_amalgam = delta(amalgam, amalgam.all_points());
  r.realized_in_first = chi(first, pair).max > 0;
  r.realized_in_second = chi(second, pair).max > 0;
  r.realized_in_amalgam = chi(amalgam, pair).max > 0;
  return r;
}

}  // namespace

ReplayReport replay_counterexample() {
  const PartialLinearSpace m = build_example("mermelstein");
  const Mask b = m.mask_of(mermelstein_base());
  const Mask c = m.mask_of(mermelstein_extension());
  ReplayReport rep;
  rep.c_primitive_over_b = is_zero_primitive(m, c, b);
  if (auto gb = find_good_base(m, c, b)) rep.good_base = m.labels_of(*gb);
  const GoodPairType pair = pair_type_of(m, b, c);

  rep.readings.push_back(run_reading(m, pair, "base {a,c2,c4}", {"a", "c2", "c4"},
                                     {"b1", "c1", "b4"}, {"b2", "c3", "b3"}));
  rep.readings.push_back(run_reading(m, pair, "base {b1,c1,b4}", {"b1", "c1", "b4"},
                                     {"a", "c2", "c4"}, {"b2", "c3", "b3"}));
  for (const auto& r : rep.readings) {
    if (r.realized_in_amalgam && !r.realized_in_first && !r.realized_in_second) {
      rep.demonstrated = true;
    }
  }
  return rep;
}

Json replay_to_json(const ReplayReport& r) {
  Json j;
  j["c_primitive_over_b"] = r.c_primitive_over_b;
  j["good_base"] = r.good_base;
  j["demonstrated"] = r.demonstrated;
  j["readings"] = Json::array();
  for (const auto& x : r.readings) {
    j["readings"].push_back({{"name", x.name},
                             {"base", x.base},
                             {"first_side", x.first_side},
                             {"second_side", x.second_side},
                             {"base_strong_in_first", x.base_strong_in_first},
                             {"base_strong_in_second", x.base_strong_in_second},
                             {"delta_first", x.delta_first},
                             {"delta_second", x.delta_second},
                             {"delta_base", x.delta_base},
                             {"delta_amalgam", x.delta_amalgam},
                             {"realized_in_first", x.realized_in_first},
                             {"realized_in_second", x.realized_in_second},
                             {"realized_in_amalgam", x.realized_in_amalgam}});
  }
  return j;
}

}  // namespace steiner
