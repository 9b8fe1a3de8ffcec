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


#ifndef STEINER_JSON_IO_HPP_
#define STEINER_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "steiner/linear_space.hpp"

namespace steiner {

using Json = nlohmann::json;

// {"points": [...], "lines": [[...], ...], "star": [[x, y, z], ...]}.
// Integer labels are converted to strings. Two-point lines are accepted and
// dropped. Throws InputError naming the offending point pair when two lines
// share two points.
PartialLinearSpace structure_from_json(const Json& j);

// Canonical form: points sorted, each line sorted, lines sorted, star
// entries sorted.
Json structure_to_json(const PartialLinearSpace& m);

// Parses text; malformed JSON throws InputError with the parser's location.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);
PartialLinearSpace load_structure(const std::string& path);

// Stable text: two-space indent, trailing newline.
std::string dump_json(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

// Sorted labels of a point set, as used in reports.
Json labels_json(const PartialLinearSpace& m, Mask s);

}  // namespace steiner

#endif  // STEINER_JSON_IO_HPP_
