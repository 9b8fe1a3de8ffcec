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


// Black-box checks of the command-line tool: exit codes and outputs.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "steiner/json_io.hpp"

namespace fs = std::filesystem;
using steiner::Json;

namespace {

const std::string kCli = STEINER_CLI_PATH;
const std::string kCorpus = STEINER_CORPUS_DIR;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("steiner_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int status = -1;
  std::string out, err;
  Json json() const { return steiner::parse_json(out); }
};

Result run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = "cd \"" + scratch().string() + "\" && \"" + kCli + "\" " + args +
                          " > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  Result r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string corpus(const std::string& name) { return "\"" + kCorpus + "/" + name + ".json\""; }

}  // namespace

TEST_CASE("inspect reports delta") {
  const auto r = run("inspect " + corpus("pasch") + " --subset all --subset F,H");
  REQUIRE(r.status == 0);
  const Json j = r.json();
  CHECK(j["delta"] == 2);
  CHECK(j["subsets"][0]["delta"] == 2);
  CHECK(j["subsets"][1]["strong"] == true);
  CHECK(j["subsets"][1]["r_closure"] == Json::array({"D", "F", "H"}));
}

TEST_CASE("detect exit codes") {
  const auto hit = run("detect " + corpus("fano") + " --template pasch");
  CHECK(hit.status == 1);
  CHECK(hit.json()["templates"][0]["embeddings"].get<int>() > 0);
  CHECK(run("detect " + corpus("mitre") + " --template pasch").status == 0);
  CHECK(run("detect " + corpus("pasch") + " --infinity-sparse 8").status == 1);
  CHECK(run("detect " + corpus("mitre") + " --class anti-pasch").status == 0);
  CHECK(run("detect " + corpus("mitre") + " --class anti-mitre").status == 1);
  CHECK(run("detect " + corpus("mitre") + " --template octahedron").status == 2);
}

TEST_CASE("input errors exit with 2") {
  std::ofstream(scratch() / "broken.json") << "{\n  \"points\": [\"a\",\n}";
  const auto r = run("inspect broken.json");
  CHECK(r.status == 2);
  CHECK(r.err.find("broken.json") != std::string::npos);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run("inspect missing.json").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("blockalg --p 4").status == 2);
  CHECK(run("inspect " + corpus("pasch") + " --subset Q").status == 2);
}

TEST_CASE("block algebra and path graph pipeline") {
  REQUIRE(run("blockalg --p 3 --n 1 --a 2 --power 2 --emit ag23.json").status == 0);
  const auto s = run("steiner ag23.json --k 3");
  CHECK(s.status == 0);
  CHECK(s.json()["lines"] == 12);
  const auto r = run("pathgraph ag23.json --a \"(0,0)\" --b \"(1,0)\" --mode line --dot ag23.dot");
  REQUIRE(r.status == 0);
  const Json j = r.json();
  CHECK(j["paths"].size() == 6);
  for (const auto& p : j["paths"]) {
    CHECK(p["kind"] == "pseudo-cycle");
    CHECK(p["length"] == 6);
  }
  CHECK(slurp(scratch() / "ag23.dot").rfind("graph paths {", 0) == 0);
  CHECK(run("uniform ag23.json").status == 0);
  CHECK(run("uniform " + corpus("pasch")).status == 1);
  CHECK(run("steiner " + corpus("pasch")).status == 1);
  const auto table = run("blockalg --p 2 --n 2 --csv f4.csv");
  CHECK(table.status == 0);
  CHECK(slurp(scratch() / "f4.csv").rfind("*,0,1,2,3\n", 0) == 0);
}

TEST_CASE("export round trip") {
  for (const std::string name : {"pasch", "mitre", "mia", "fano", "mermelstein_B", "mermelstein_C"}) {
    CAPTURE(name);
    REQUIRE(run("export " + corpus(name) + " --out once.json").status == 0);
    REQUIRE(run("export once.json --out twice.json").status == 0);
    CHECK(slurp(scratch() / "once.json") == slurp(scratch() / "twice.json"));
  }
  const auto dot = run("export --example fano --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("line6") != std::string::npos);
}

TEST_CASE("amalgamate") {
  std::ofstream(scratch() / "left.json") << R"({"points":["x","y","p"],"lines":[["x","y","p"]]})";
  std::ofstream(scratch() / "right.json") << R"({"points":["x","y","q"],"lines":[["x","y","q"]]})";
  const auto ok = run("amalgamate left.json right.json --base x,y");
  REQUIRE(ok.status == 0);
  CHECK(ok.json()["lines"][0].size() == 4);
  CHECK(run("amalgamate left.json right.json --base x,y --max-line 3").status == 1);
  CHECK(run("amalgamate left.json right.json --base x").status == 2);
}

TEST_CASE("grow, verify and replay") {
  REQUIRE(run("grow --profile anti-pasch --max-points 12 --seed 2 --trace t.json --emit g.json").status == 0);
  CHECK(run("grow --verify t.json").status == 0);
  Json t = steiner::parse_json(slurp(scratch() / "t.json"));
  t["steps"][1]["hash"] = "0";
  std::ofstream(scratch() / "bad.json") << t.dump();
  const auto bad = run("grow --verify bad.json");
  CHECK(bad.status == 1);
  CHECK(bad.err.find("step 1:") != std::string::npos);
  CHECK(run("grow --profile octahedron").status == 2);
  const auto rep = run("replay");
  CHECK(rep.status == 0);
  CHECK(rep.json()["demonstrated"] == true);
}
