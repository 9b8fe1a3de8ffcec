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


#include "steiner/growth.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <random>

#include "steiner/amalgam.hpp"
#include "steiner/configurations.hpp"
#include "steiner/embedding.hpp"
#include "steiner/errors.hpp"
#include "steiner/finite_field.hpp"
#include "steiner/predimension.hpp"

namespace steiner {

std::string growth_profile_name(GrowthProfile p) {
  switch (p) {
    case GrowthProfile::kSparse: return "sparse";
    case GrowthProfile::kAntiPasch: return "anti-pasch";
    case GrowthProfile::kAntiMitre: return "anti-mitre";
    case GrowthProfile::kAntiMia: return "anti-mia";
    case GrowthProfile::kHruStar: return "hru-star";
    case GrowthProfile::kTwoTrans: return "two-trans";
    case GrowthProfile::kQuasi: return "quasi";
    case GrowthProfile::kScriptB: return "script-b";
  }
  return "?";
}

std::vector<GrowthProfile> all_growth_profiles() {
  return {GrowthProfile::kSparse,   GrowthProfile::kAntiPasch, GrowthProfile::kAntiMitre,
          GrowthProfile::kAntiMia,  GrowthProfile::kHruStar,   GrowthProfile::kTwoTrans,
          GrowthProfile::kQuasi,    GrowthProfile::kScriptB};
}

std::optional<GrowthProfile> growth_profile_from_name(const std::string& name) {
  for (GrowthProfile p : all_growth_profiles()) {
    if (growth_profile_name(p) == name) return p;
  }
  return std::nullopt;
}

Json growth_config_to_json(const GrowthConfig& c) {
  Json j;
  j["profile"] = growth_profile_name(c.profile);
  j["q"] = c.q;
  j["a"] = c.a ? Json(*c.a) : Json(nullptr);
  j["mu"] = c.mu ? mu_to_json(*c.mu) : Json(nullptr);
  j["max_points"] = c.max_points;
  j["seed"] = c.seed;
  j["seed_structure"] = c.seed_structure;
  j["attempts"] = c.attempts;
  j["max_base"] = c.max_base;
  j["max_ext"] = c.max_ext;
  return j;
}

GrowthConfig growth_config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("growth config must be an object");
  GrowthConfig c;
  try {
    const auto p = growth_profile_from_name(j.at("profile").get<std::string>());
    if (!p) throw InputError("unknown growth profile " + j.at("profile").dump());
    c.profile = *p;
    c.q = j.value("q", 3);
    if (j.contains("a") && !j["a"].is_null()) c.a = j["a"].get<int>();
    if (j.contains("mu") && !j["mu"].is_null()) c.mu = mu_from_json(j["mu"]);
    c.max_points = j.value("max_points", 20);
    c.seed = j.value("seed", std::uint64_t{1});
    c.seed_structure = j.value("seed_structure", std::string("free3"));
    c.attempts = j.value("attempts", 6);
    c.max_base = j.value("max_base", 3);
    c.max_ext = j.value("max_ext", 4);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad growth config: ") + e.what());
  }
  return c;
}

namespace {

bool is_quasigroup_profile(GrowthProfile p) {
  return p == GrowthProfile::kQuasi || p == GrowthProfile::kScriptB;
}

// Builds catalog pieces; lines are padded with filler points to length q
// and, for quasigroup profiles, carry a copy of the free algebra.
class PieceBuilder {
 public:
  PieceBuilder(int q, const StarTable* free2) : q_(q), free2_(free2) {
    if (free2_) m_.enable_star_table();
  }

  int point(const std::string& label) { return m_.add_point(label); }

  void line(std::vector<int> pts) {
    while (static_cast<int>(pts.size()) < q_) {
      pts.push_back(m_.add_point("f" + std::to_string(fillers_++)));
    }
    Mask l = 0;
    for (int p : pts) l |= bit(p);
    m_.add_line(l);
    if (!free2_) return;
    for (int s = 0; s < q_; ++s) {
      for (int t = 0; t < q_; ++t) {
        if (s != t) m_.set_star(pts[s], pts[t], pts[(*free2_)(s, t)]);
      }
    }
  }

  PartialLinearSpace take() { return std::move(m_); }

 private:
  int q_;
  const StarTable* free2_;
  PartialLinearSpace m_;
  int fillers_ = 0;
};

std::optional<CatalogEntry> make_entry(std::string name, PartialLinearSpace piece, Mask base,
                                       const PrimitiveOptions& popts) {
  const Mask ext = piece.all_points() & ~base;
  if (!is_good_pair(piece, ext, base, popts)) return std::nullopt;
  CatalogEntry e;
  e.name = std::move(name);
  e.base = indices_of(base);
  e.type = pair_type_of(piece, base, ext);
  e.piece = std::move(piece);
  return e;
}

CatalogEntry line_entry(int q, const StarTable* free2) {
  PieceBuilder b(q, free2);
  const int x = b.point("x"), y = b.point("y");
  b.line({x, y});
  CatalogEntry e;
  e.name = "line";
  e.piece = b.take();
  e.base = {x, y};
  e.type = pair_type_of(e.piece, bit(x) | bit(y), e.piece.all_points() & ~(bit(x) | bit(y)));
  return e;
}

std::optional<CatalogEntry> tri_entry(int q, const StarTable* free2, const PrimitiveOptions& o) {
  PieceBuilder b(q, free2);
  const int x = b.point("x"), y = b.point("y"), z = b.point("z");
  const int u = b.point("u"), v = b.point("v"), w = b.point("w");
  b.line({x, u, v});
  b.line({y, v, w});
  b.line({z, w, u});
  return make_entry("tri", b.take(), bit(x) | bit(y) | bit(z), o);
}

std::optional<CatalogEntry> gamma4_entry(int q, const StarTable* free2,
                                         const PrimitiveOptions& o) {
  PieceBuilder b(q, free2);
  const int a = b.point("a"), bb = b.point("b");
  const int d1 = b.point("d1"), d2 = b.point("d2"), d3 = b.point("d3"), d4 = b.point("d4");
  b.line({a, d1, d2});
  b.line({bb, d2, d3});
  b.line({a, d3, d4});
  b.line({bb, d4, d1});
  return make_entry("gamma4", b.take(), bit(a) | bit(bb), o);
}

// A good pair carried by a template: the first base (by size, then mask)
// over which the remaining points are a good extension.
std::optional<CatalogEntry> template_entry(Template t, const PrimitiveOptions& o) {
  const PartialLinearSpace piece = config_template(t);
  const Mask all = piece.all_points();
  for (int k = 1; k <= 3; ++k) {
    for (Mask b = 1; b <= all; ++b) {
      if (popcount(b) != k) continue;
      if (auto e = make_entry(template_name(t), piece, b, o)) return e;
    }
  }
  return std::nullopt;
}

}  // namespace

ResolvedProfile resolve_profile(const GrowthConfig& c) {
  ResolvedProfile r;
  const GrowthProfile p = c.profile;
  r.quasigroup = is_quasigroup_profile(p);
  r.q = (p == GrowthProfile::kTwoTrans || r.quasigroup) ? c.q : 3;
  if (r.q < 3) throw InputError("line length must be at least 3");
  if (c.max_points < 3 || c.max_points > kMaxPoints) {
    throw InputError("max_points must lie in [3, 64]");
  }
  if (r.quasigroup) {
    int prime = 0, n = 0;
    for (int d = 2; d <= r.q; ++d) {
      if (r.q % d == 0) {
        prime = d;
        break;
      }
    }
    int rest = r.q;
    while (rest % prime == 0) {
      rest /= prime;
      ++n;
    }
    if (rest != 1) throw InputError("q = " + std::to_string(r.q) + " is not a prime power");
    FiniteField f = FiniteField::make(prime, n);
    const auto prim = f.primitive_elements();
    const int a = c.a.value_or(prim.front());
    r.free2 = BlockAlgebra(f, a, 1).table();
    if (!is_latin_square(r.free2) ||
        static_cast<int>(two_generated(r.free2, 0, 1).size()) != r.q) {
      throw InputError("a = " + std::to_string(a) + " does not give a (2," +
                       std::to_string(r.q) + ") block algebra");
    }
    r.cls.profile = Profile::kQuasi;
    r.cls.free_algebra = r.free2;
  }

  MuFunction mu;
  switch (p) {
    case GrowthProfile::kSparse: r.cls.profile = Profile::kSparse; mu.default_rule = MuRule::kULs; break;
    case GrowthProfile::kAntiPasch: r.cls.profile = Profile::kAntiPasch; mu.default_rule = MuRule::kULs; break;
    case GrowthProfile::kAntiMitre: r.cls.profile = Profile::kAntiMitre; mu.default_rule = MuRule::kULs; break;
    case GrowthProfile::kAntiMia: r.cls.profile = Profile::kAntiMia; mu.default_rule = MuRule::kULs; break;
    case GrowthProfile::kHruStar: r.cls.profile = Profile::kHruStar; mu.default_rule = MuRule::kULs; break;
    case GrowthProfile::kTwoTrans:
      r.cls.profile = Profile::kTwoTrans;
      r.cls.line_length_cap = r.q;
      mu.default_rule = MuRule::kULs;
      if (r.q > 3) mu.overrides["b2c1/0.1.2"] = r.q - 2;
      break;
    case GrowthProfile::kQuasi: mu.default_rule = MuRule::kUTauPrime; break;
    case GrowthProfile::kScriptB:
      mu.default_rule = MuRule::kUTauPrime;
      mu.script_b = true;
      break;
  }
  if (c.mu) {
    mu = *c.mu;
    if (p == GrowthProfile::kScriptB) mu.script_b = true;
  }
  const auto bad = mu.floor_violations();
  if (!bad.empty()) throw InputError("mu bound below its family floor for " + bad.front());
  if (p != GrowthProfile::kTwoTrans && !r.quasigroup && mu.bound("b2c1/0.1.2", 2) != 1) {
    throw InputError("triple-system profiles need mu(alpha) = 1");
  }
  if (r.quasigroup) {
    std::string alpha = "b2c" + std::to_string(r.q - 2) + "/0";
    for (int i = 1; i < r.q; ++i) alpha += "." + std::to_string(i);
    if (mu.bound(alpha, 2) < 1) throw InputError("quasigroup profiles need mu(alpha_q) >= 1");
  }
  r.mu = mu;

  r.kmu.max_base = c.max_base;
  r.kmu.max_ext = c.max_ext;
  r.kmu.primitive.line_closed = r.quasigroup;

  const StarTable* f2 = r.quasigroup ? &r.free2 : nullptr;
  const PrimitiveOptions& po = r.kmu.primitive;
  r.catalog.push_back(line_entry(r.q, f2));
  auto add = [&](std::optional<CatalogEntry> e) {
    if (e) r.catalog.push_back(std::move(*e));
  };
  add(tri_entry(r.q, f2, po));
  switch (p) {
    case GrowthProfile::kAntiPasch:
    case GrowthProfile::kAntiMia:
      add(template_entry(Template::kMitre, po));
      break;
    case GrowthProfile::kAntiMitre:
    case GrowthProfile::kQuasi:
      add(gamma4_entry(r.q, f2, po));
      break;
    default:
      break;
  }
  return r;
}

std::string structure_hash(const PartialLinearSpace& m) {
  const std::string text = structure_to_json(m).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Audit {
  bool ok = true;
  std::string reason;
};

Audit audit_extension(const PartialLinearSpace& prev, const PartialLinearSpace& next,
                      const ResolvedProfile& rp) {
  Mask old = 0;
  try {
    old = next.mask_of(prev.labels());
  } catch (const InputError&) {
    return {false, "points of the previous structure are missing"};
  }
  if (!next.induced(old).same_as(prev)) return {false, "not an extension of the previous structure"};
  if (!is_strong(next, old, rp.cls.search)) return {false, "previous structure is not strong"};
  const ClassResult cr = satisfies_class(next, rp.cls);
  if (!cr.ok) {
    std::string w;
    for (const auto& l : next.labels_of(cr.witness)) w += (w.empty() ? "" : ",") + l;
    return {false, "class: " + cr.reason + " {" + w + "}"};
  }
  const KMuReport kr = in_K_mu(next, rp.mu, rp.kmu);
  if (!kr.ok) {
    const auto& v = kr.violations.front();
    return {false, "mu: " + v.key + " has " + std::to_string(v.count) + " copies, bound " +
                       std::to_string(v.bound)};
  }
  return {};
}

class Grower {
 public:
  Grower(const GrowthConfig& c) : c_(c), rp_(resolve_profile(c)), rng_(c.seed) {}

  GrowthTrace run() {
    trace_.config = c_;
    seed();
    int round = 0;
    while (m_.size() < c_.max_points && round < 50 * c_.max_points) {
      ++round;
      bool progress = complete_line(round);
      for (std::size_t i = 1; i < rp_.catalog.size(); ++i) {
        if (m_.size() >= c_.max_points) break;
        progress = realize(rp_.catalog[i], round) || progress;
      }
      if (!progress && !free_point(round)) break;
    }
    trace_.status = m_.size() >= c_.max_points ? "budget" : "stalled";
    return std::move(trace_);
  }

 private:
  void seed() {
    if (c_.seed_structure == "free3") {
      for (int i = 0; i < 3; ++i) m_.add_point("p" + std::to_string(i));
      if (rp_.quasigroup) m_.enable_star_table();
    } else if (c_.seed_structure == "fano") {
      const PartialLinearSpace f = config_template(Template::kFano);
      PartialLinearSpace s;
      for (int i = 0; i < f.size(); ++i) s.add_point("p" + std::to_string(i));
      if (rp_.quasigroup) s.enable_star_table();
      for (Mask l : f.lines()) {
        s.add_line(l);
        if (!rp_.quasigroup) continue;
        if (rp_.q != 3) throw InputError("the fano seed needs q = 3");
        const auto pts = indices_of(l);
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            if (a != b) s.set_star(pts[a], pts[b], pts[rp_.free2(a, b)]);
          }
        }
      }
      m_ = std::move(s);
    } else {
      throw InputError("unknown seed structure '" + c_.seed_structure + "'");
    }
    const ClassResult cr = satisfies_class(m_, rp_.cls);
    if (!cr.ok) throw InputError("seed structure is outside the class: " + cr.reason);
    trace_.steps.push_back({"seed", {}, m_.labels(), structure_hash(m_), m_});
  }

  std::string fresh_label() {
    int k = m_.size();
    while (m_.index_of("p" + std::to_string(k))) ++k;
    return "p" + std::to_string(k);
  }

  // Glues a copy of the entry's piece onto M over the base image.
  bool apply(const CatalogEntry& e, const std::vector<int>& image, int round) {
    std::vector<std::string> labels(e.piece.size());
    std::vector<std::string> base_labels;
    for (std::size_t i = 0; i < e.base.size(); ++i) {
      labels[e.base[i]] = m_.label(image[i]);
      base_labels.push_back(m_.label(image[i]));
    }
    std::vector<std::string> added;
    PartialLinearSpace probe = m_;
    for (int i = 0; i < e.piece.size(); ++i) {
      if (!labels[i].empty()) continue;
      int k = probe.size();
      while (probe.index_of("p" + std::to_string(k))) ++k;
      labels[i] = "p" + std::to_string(k);
      probe.add_point(labels[i]);
      added.push_back(labels[i]);
    }
    const PartialLinearSpace piece = e.piece.relabelled(labels);
    AmalgamOptions opts;
    opts.check_strong = false;
    opts.max_line_length = rp_.q;
    PartialLinearSpace next;
    try {
      next = free_amalgam(m_, piece, base_labels, opts).space;
    } catch (const ConstraintViolation& ex) {
      trace_.skips.push_back({round, e.name, base_labels, ex.what()});
      return false;
    }
    const Audit a = audit_extension(m_, next, rp_);
    if (!a.ok) {
      trace_.skips.push_back({round, e.name, base_labels, a.reason});
      return false;
    }
    m_ = std::move(next);
    trace_.steps.push_back({e.name, base_labels, added, structure_hash(m_), m_});
    return true;
  }

  bool complete_line(int round) {
    const CatalogEntry& e = rp_.catalog.front();
    if (m_.size() + e.type.ext_size() > c_.max_points) return false;
    std::vector<std::vector<int>> pairs;
    for (int x = 0; x < m_.size(); ++x) {
      for (int y = x + 1; y < m_.size(); ++y) {
        if (m_.line_through(x, y) < 0) pairs.push_back({x, y});
      }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng_);
    int tried = 0;
    for (const auto& pr : pairs) {
      if (tried++ >= c_.attempts) break;
      if (apply(e, pr, round)) return true;
    }
    return false;
  }

  int copies_over(const CatalogEntry& e, const std::vector<int>& image) const {
    std::vector<int> fixed(e.piece.size(), -1);
    Mask used = 0;
    for (std::size_t i = 0; i < e.base.size(); ++i) {
      fixed[e.base[i]] = image[i];
      used |= bit(image[i]);
    }
    std::vector<Mask> copies;
    for_each_induced_embedding(e.piece, m_, fixed, used, [&](const Embedding& emb) {
      Mask cm = 0;
      for (int i = 0; i < e.piece.size(); ++i) {
        if (fixed[i] < 0) cm |= bit(emb[i]);
      }
      copies.push_back(cm);
      return true;
    });
    return max_disjoint(std::move(copies));
  }

  bool realize(const CatalogEntry& e, int round) {
    if (m_.size() + e.type.ext_size() > c_.max_points) return false;
    Mask base_mask = 0;
    for (int i : e.base) base_mask |= bit(i);
    const PartialLinearSpace pattern = e.piece.induced(base_mask);
    std::vector<std::vector<int>> images;
    for_each_induced_embedding(pattern, m_, {}, 0, [&](const Embedding& emb) {
      images.push_back(emb);
      return images.size() < 200000;
    });
    std::shuffle(images.begin(), images.end(), rng_);
    const int base_delta = delta(e.piece, base_mask);
    const int bound = rp_.mu.bound(e.type.key, base_delta);
    int tried = 0;
    std::map<Mask, bool> strong;
    for (const auto& img : images) {
      if (tried >= c_.attempts) break;
      Mask im = 0;
      for (int x : img) im |= bit(x);
      auto it = strong.find(im);
      if (it == strong.end()) it = strong.emplace(im, is_strong(m_, im, rp_.cls.search)).first;
      if (!it->second) continue;
      if (copies_over(e, img) >= bound) continue;
      ++tried;
      if (apply(e, img, round)) return true;
    }
    return false;
  }

  bool free_point(int round) {
    PartialLinearSpace next = m_;
    const std::string label = fresh_label();
    next.add_point(label);
    const Audit a = audit_extension(m_, next, rp_);
    if (!a.ok) {
      trace_.skips.push_back({round, "free", {}, a.reason});
      return false;
    }
    m_ = std::move(next);
    trace_.steps.push_back({"free", {}, {label}, structure_hash(m_), m_});
    return true;
  }

  GrowthConfig c_;
  ResolvedProfile rp_;
  std::mt19937_64 rng_;
  PartialLinearSpace m_;
  GrowthTrace trace_;
};

}  // namespace

GrowthTrace grow(const GrowthConfig& c) { return Grower(c).run(); }

Json trace_to_json(const GrowthTrace& t) {
  Json j;
  j["config"] = growth_config_to_json(t.config);
  j["status"] = t.status;
  j["steps"] = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    j["steps"].push_back({{"index", i},
                          {"task", s.task},
                          {"base", s.base},
                          {"added", s.added},
                          {"hash", s.hash},
                          {"structure", structure_to_json(s.structure)}});
  }
  j["skips"] = Json::array();
  for (const auto& s : t.skips) {
    j["skips"].push_back(
        {{"round", s.round}, {"task", s.task}, {"base", s.base}, {"reason", s.reason}});
  }
  if (!t.steps.empty()) j["final_hash"] = t.steps.back().hash;
  return j;
}

GrowthTrace trace_from_json(const Json& j) {
  GrowthTrace t;
  try {
    t.config = growth_config_from_json(j.at("config"));
    t.status = j.at("status").get<std::string>();
    for (const auto& s : j.at("steps")) {
      t.steps.push_back({s.at("task").get<std::string>(),
                         s.at("base").get<std::vector<std::string>>(),
                         s.at("added").get<std::vector<std::string>>(),
                         s.at("hash").get<std::string>(), structure_from_json(s.at("structure"))});
    }
    for (const auto& s : j.value("skips", Json::array())) {
      t.skips.push_back({s.at("round").get<int>(), s.at("task").get<std::string>(),
                         s.at("base").get<std::vector<std::string>>(),
                         s.at("reason").get<std::string>()});
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad trace: ") + e.what());
  }
  if (t.steps.empty()) throw InputError("trace has no steps");
  return t;
}

namespace {

// Rebuilds a step from its predecessor and the recorded task.
std::optional<PartialLinearSpace> rebuild_step(const PartialLinearSpace& prev,
                                               const GrowthStep& s, const ResolvedProfile& rp) {
  if (s.task == "free") {
    if (s.added.size() != 1 || prev.index_of(s.added[0])) return std::nullopt;
    PartialLinearSpace next = prev;
    next.add_point(s.added[0]);
    return next;
  }
  for (const auto& e : rp.catalog) {
    if (e.name != s.task) continue;
    if (s.base.size() != e.base.size() ||
        static_cast<int>(s.added.size()) != e.piece.size() - static_cast<int>(e.base.size())) {
      return std::nullopt;
    }
    std::vector<std::string> labels(e.piece.size());
    for (std::size_t i = 0; i < e.base.size(); ++i) labels[e.base[i]] = s.base[i];
    std::size_t k = 0;
    for (auto& l : labels) {
      if (l.empty()) l = s.added[k++];
    }
    AmalgamOptions opts;
    opts.check_strong = false;
    opts.max_line_length = rp.q;
    try {
      return free_amalgam(prev, e.piece.relabelled(labels), s.base, opts).space;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

ChainReport verify_chain(const GrowthTrace& t) {
  ChainReport r;
  const ResolvedProfile rp = resolve_profile(t.config);
  auto fail = [&](std::size_t i, const std::string& what) {
    r.ok = false;
    r.failures.push_back("step " + std::to_string(i) + ": " + what);
  };
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    ++r.steps_checked;
    if (structure_hash(s.structure) != s.hash) fail(i, "hash mismatch");
    if (i == 0) {
      const ClassResult cr = satisfies_class(s.structure, rp.cls);
      if (!cr.ok) fail(i, "class: " + cr.reason);
      continue;
    }
    const Audit a = audit_extension(t.steps[i - 1].structure, s.structure, rp);
    if (!a.ok) fail(i, a.reason);
    const auto rebuilt = rebuild_step(t.steps[i - 1].structure, s, rp);
    if (!rebuilt || !rebuilt->same_as(s.structure)) fail(i, "does not match its recorded task");
  }
  return r;
}

}  // namespace steiner
