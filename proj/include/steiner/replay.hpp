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


#ifndef STEINER_REPLAY_HPP_
#define STEINER_REPLAY_HPP_

#include <string>
#include <vector>

#include "steiner/json_io.hpp"

namespace steiner {

struct ReplayReading {
  std::string name;
  std::vector<std::string> base;
  std::vector<std::string> first_side;
  std::vector<std::string> second_side;
  bool base_strong_in_first = false;
  bool base_strong_in_second = false;
  int delta_first = 0;
  int delta_second = 0;
  int delta_base = 0;
  int delta_amalgam = 0;
  bool realized_in_first = false;
  bool realized_in_second = false;
  bool realized_in_amalgam = false;
};

struct ReplayReport {
  bool c_primitive_over_b = false;
  std::vector<std::string> good_base;
  std::vector<ReplayReading> readings;
  // Some reading realizes (B, C) in the amalgam but in neither side.
  bool demonstrated = false;
};

// Splits the Mermelstein structure into two pieces over a 3-point base in
// both readings of the example and amalgamates them freely.
ReplayReport replay_counterexample();
Json replay_to_json(const ReplayReport& r);

}  // namespace steiner

#endif  // STEINER_REPLAY_HPP_
