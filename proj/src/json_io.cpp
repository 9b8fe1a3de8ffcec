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


#include "steiner/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

std::string label_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("point labels must be strings or integers, got " + v.dump());
}

std::vector<std::string> sorted_labels(const PartialLinearSpace& m, Mask s) {
  auto v = m.labels_of(s);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PartialLinearSpace structure_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("structure must be a JSON object");
  PartialLinearSpace m;
  if (!j.contains("points") || !j["points"].is_array()) {
    throw InputError("structure needs a \"points\" array");
  }
  for (const auto& p : j["points"]) m.add_point(label_of(p));

  std::vector<Mask> lines;
  std::map<std::pair<int, int>, std::size_t> owner;
  if (j.contains("lines")) {
    if (!j["lines"].is_array()) throw InputError("\"lines\" must be an array");
    for (const auto& lj : j["lines"]) {
      if (!lj.is_array()) throw InputError("each line must be an array");
      std::vector<std::string> pts;
      for (const auto& p : lj) pts.push_back(label_of(p));
      const Mask l = m.mask_of(pts);
      if (popcount(l) != static_cast<int>(pts.size())) {
        throw InputError("line " + lj.dump() + " repeats a point");
      }
      if (popcount(l) < 2) throw InputError("line " + lj.dump() + " has fewer than 2 points");
      const auto idx = indices_of(l);
      for (std::size_t x = 0; x < idx.size(); ++x) {
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
          auto [it, fresh] = owner.emplace(std::make_pair(idx[x], idx[y]), lines.size());
          if (!fresh) {
            throw InputError("points '" + m.label(idx[x]) + "' and '" + m.label(idx[y]) +
                             "' lie on two lines");
          }
        }
      }
      lines.push_back(l);
    }
  }
  for (Mask l : lines) {
    if (popcount(l) >= 3) m.add_line(l);
  }

  if (j.contains("star")) {
    if (!j["star"].is_array()) throw InputError("\"star\" must be an array");
    m.enable_star_table();
    for (const auto& e : j["star"]) {
      if (!e.is_array() || e.size() != 3) throw InputError("star entries are [x, y, z]");
      const std::string x = label_of(e[0]), y = label_of(e[1]), z = label_of(e[2]);
      auto ix = m.index_of(x), iy = m.index_of(y), iz = m.index_of(z);
      if (!ix || !iy || !iz) throw InputError("star entry " + e.dump() + " uses unknown points");
      m.set_star(*ix, *iy, *iz);
    }
  }
  return m;
}

Json structure_to_json(const PartialLinearSpace& m) {
  Json j;
  j["points"] = sorted_labels(m, m.all_points());
  std::vector<std::vector<std::string>> lines;
  for (Mask l : m.lines()) lines.push_back(sorted_labels(m, l));
  std::sort(lines.begin(), lines.end());
  j["lines"] = lines;
  if (m.has_star_table()) {
    std::vector<std::vector<std::string>> star;
    for (const auto& [xy, z] : m.star_entries()) {
      star.push_back({m.label(xy.first), m.label(xy.second), m.label(z)});
    }
    std::sort(star.begin(), star.end());
    j["star"] = star;
  }
  return j;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

PartialLinearSpace load_structure(const std::string& path) {
  return structure_from_json(read_json_file(path));
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Json labels_json(const PartialLinearSpace& m, Mask s) { return sorted_labels(m, s); }

}  // namespace steiner
