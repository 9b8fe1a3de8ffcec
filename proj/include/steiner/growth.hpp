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


#ifndef STEINER_GROWTH_HPP_
#define STEINER_GROWTH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/block_algebra.hpp"
#include "steiner/classes.hpp"
#include "steiner/good_pairs.hpp"
#include "steiner/json_io.hpp"
#include "steiner/linear_space.hpp"

namespace steiner {

enum class GrowthProfile {
  kSparse,
  kAntiPasch,
  kAntiMitre,
  kAntiMia,
  kHruStar,
  kTwoTrans,
  kQuasi,
  kScriptB,
};

std::string growth_profile_name(GrowthProfile p);
std::optional<GrowthProfile> growth_profile_from_name(const std::string& name);
std::vector<GrowthProfile> all_growth_profiles();

struct GrowthConfig {
  GrowthProfile profile = GrowthProfile::kSparse;
  // Line length. Profiles other than two-trans and quasi use 3.
  int q = 3;
  // Field element for the quasigroup profiles; least primitive by default.
  std::optional<int> a;
  // Replaces the profile's default mu.
  std::optional<MuFunction> mu;
  int max_points = 20;
  std::uint64_t seed = 1;
  // "free3" (three points, no lines) or "fano".
  std::string seed_structure = "free3";
  // Base images tried per task and round.
  int attempts = 6;
  int max_base = 3;
  int max_ext = 4;
};

Json growth_config_to_json(const GrowthConfig& c);
GrowthConfig growth_config_from_json(const Json& j);

// A realizable extension: `piece` holds base points (listed in `base`, in
// pattern order) and the new points.
struct CatalogEntry {
  std::string name;
  PartialLinearSpace piece;
  std::vector<int> base;
  GoodPairType type;
};

// Class, mu and catalog a config stands for.
struct ResolvedProfile {
  ClassSpec cls;
  MuFunction mu;
  KMuOptions kmu;
  int q = 3;
  bool quasigroup = false;
  StarTable free2;
  std::vector<CatalogEntry> catalog;
};

// Throws InputError for inconsistent configs (e.g. q not a prime power for
// a quasigroup profile, or mu below the profile's floor).
ResolvedProfile resolve_profile(const GrowthConfig& c);

struct GrowthStep {
  std::string task;
  std::vector<std::string> base;
  std::vector<std::string> added;
  std::string hash;
  PartialLinearSpace structure;
};

struct GrowthSkip {
  int round = 0;
  std::string task;
  std::vector<std::string> base;
  std::string reason;
};

struct GrowthTrace {
  GrowthConfig config;
  std::vector<GrowthStep> steps;  // steps[0] is the seed
  std::vector<GrowthSkip> skips;
  std::string status;             // "budget" or "stalled"

  const PartialLinearSpace& final_structure() const { return steps.back().structure; }
};

GrowthTrace grow(const GrowthConfig& c);

// FNV-1a over the compact canonical JSON of the structure, as 16 hex digits.
std::string structure_hash(const PartialLinearSpace& m);

Json trace_to_json(const GrowthTrace& t);
GrowthTrace trace_from_json(const Json& j);

struct ChainReport {
  bool ok = true;
  int steps_checked = 0;
  std::vector<std::string> failures;  // "step k: ..."
};

// Re-checks every step from the stored snapshots: substructure, strong
// extension, class, mu and hash.
ChainReport verify_chain(const GrowthTrace& t);

}  // namespace steiner

#endif  // STEINER_GROWTH_HPP_
