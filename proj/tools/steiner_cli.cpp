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


// steiner: command-line front end.
//
// Exit status: 0 success, 1 property violated (witness printed), 2 input
// error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steiner/amalgam.hpp"
#include "steiner/block_algebra.hpp"
#include "steiner/classes.hpp"
#include "steiner/configurations.hpp"
#include "steiner/errors.hpp"
#include "steiner/examples.hpp"
#include "steiner/finite_field.hpp"
#include "steiner/good_pairs.hpp"
#include "steiner/growth.hpp"
#include "steiner/json_io.hpp"
#include "steiner/path_graph.hpp"
#include "steiner/predimension.hpp"
#include "steiner/replay.hpp"

using namespace steiner;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

// Splits on commas outside parentheses, so "(0,1),(2,2)" gives two labels.
std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch != ' ') cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Mask subset_arg(const PartialLinearSpace& m, const std::string& s) {
  if (s == "all") return m.all_points();
  if (s.empty() || s == "none") return 0;
  const auto labels = split_labels(s);
  return m.mask_of(labels);
}

int point_arg(const PartialLinearSpace& m, const std::string& label) {
  auto i = m.index_of(label);
  if (!i) throw InputError("unknown point '" + label + "'");
  return *i;
}

PartialLinearSpace load_input(const std::string& file, const std::string& example) {
  if (!example.empty()) return build_example(example);
  if (file.empty()) throw InputError("give a structure file or --example");
  if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return structure_from_json(parse_json(ss.str(), "stdin"));
  }
  return load_structure(file);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string structure_dot(const PartialLinearSpace& m) {
  std::ostringstream out;
  out << "graph structure {\n";
  for (const auto& l : labels_json(m, m.all_points())) {
    out << "  \"" << l.get<std::string>() << "\";\n";
  }
  std::vector<std::vector<std::string>> lines;
  for (Mask l : m.lines()) lines.push_back(labels_json(m, l).get<std::vector<std::string>>());
  std::sort(lines.begin(), lines.end());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << "  \"line" << i << "\" [shape=point];\n";
    for (const auto& p : lines[i]) out << "  \"line" << i << "\" -- \"" << p << "\";\n";
  }
  out << "}\n";
  return out.str();
}

// ---- inspect ---------------------------------------------------------------

struct InspectArgs {
  std::string file, example;
  std::vector<std::string> subsets;
  int good_pairs = 0;
  int capacity = kDefaultSearchCapacity;
};

int run_inspect(const InspectArgs& a) {
  const PartialLinearSpace m = load_input(a.file, a.example);
  SearchOptions opts;
  opts.capacity = a.capacity;
  Json j;
  j["points"] = m.size();
  j["lines"] = m.line_count();
  j["delta"] = delta(m, m.all_points());
  j["subsets"] = Json::array();
  auto subsets = a.subsets;
  if (subsets.empty()) subsets.push_back("all");
  for (const auto& s : subsets) {
    const Mask x = subset_arg(m, s);
    Mask arg = 0;
    const int dv = d(m, x, opts, &arg);
    j["subsets"].push_back({{"subset", labels_json(m, x)},
                            {"delta", delta(m, x)},
                            {"d", dv},
                            {"strong", dv == delta(m, x)},
                            {"icl", labels_json(m, arg)},
                            {"r_closure", labels_json(m, r_closure(m, x))}});
  }
  if (a.good_pairs > 0) {
    j["good_pairs"] = Json::array();
    for (const auto& t : enumerate_good_pairs(m, a.good_pairs)) j["good_pairs"].push_back(t.key);
  }
  std::cout << dump_json(j);
  return kOk;
}

// ---- detect ----------------------------------------------------------------

struct DetectArgs {
  std::string file, example;
  std::vector<std::string> templates;
  bool lax = false;
  int sparse_cap = 0;
  std::string profile;
  int quasi_a = -1;
  std::vector<int> counts;
  std::string mu_file;
  int max_base = 3, max_ext = 4;
};

int run_detect(const DetectArgs& a) {
  const PartialLinearSpace m = load_input(a.file, a.example);
  Json j;
  bool violated = false;
  for (const auto& name : a.templates) {
    const auto t = template_from_name(name);
    if (!t) throw InputError("unknown template '" + name + "'");
    const auto found = find_config(m, *t, !a.lax);
    Json e{{"template", name}, {"embeddings", found.size()}};
    if (!found.empty()) {
      violated = true;
      Json w = Json::object();
      const auto pattern = config_template(*t);
      for (int i = 0; i < pattern.size(); ++i) w[pattern.label(i)] = m.label(found[0][i]);
      e["witness"] = w;
    }
    j["templates"].push_back(e);
  }
  if (a.sparse_cap > 0) {
    const auto r = is_infinity_sparse(m, a.sparse_cap);
    j["infinity_sparse"] = {{"ok", r.ok}, {"witness", labels_json(m, r.witness)}};
    violated = violated || !r.ok;
  }
  for (int n : a.counts) {
    j["configurations"][std::to_string(n)] = count_configurations(m, n);
  }
  if (!a.profile.empty()) {
    const auto p = profile_from_name(a.profile);
    if (!p) throw InputError("unknown class profile '" + a.profile + "'");
    ClassSpec spec;
    spec.profile = *p;
    if (*p == Profile::kQuasi && !m.lines().empty()) {
      const int q = popcount(m.lines()[0]);
      int prime = 2;
      while (q % prime) ++prime;
      int n = 0, rest = q;
      while (rest % prime == 0) {
        rest /= prime;
        ++n;
      }
      if (rest != 1) throw InputError("line length is not a prime power");
      FiniteField f = FiniteField::make(prime, n);
      const int av = a.quasi_a >= 0 ? a.quasi_a : f.primitive_elements().front();
      spec.free_algebra = BlockAlgebra(f, av, 1).table();
    } else if (*p == Profile::kQuasi) {
      spec.free_algebra = BlockAlgebra(FiniteField::make(3, 1), 2, 1).table();
    }
    const auto r = satisfies_class(m, spec);
    j["class"] = {{"profile", a.profile}, {"ok", r.ok}, {"reason", r.reason},
                  {"witness", labels_json(m, r.witness)}};
    violated = violated || !r.ok;
  }
  if (!a.mu_file.empty()) {
    const MuFunction mu = mu_from_json(read_json_file(a.mu_file));
    KMuOptions ko;
    ko.max_base = a.max_base;
    ko.max_ext = a.max_ext;
    const auto r = in_K_mu(m, mu, ko);
    Json vs = Json::array();
    for (const auto& v : r.violations) {
      vs.push_back({{"pair", v.key}, {"base", v.base}, {"copies", v.copies},
                    {"count", v.count}, {"bound", v.bound}});
    }
    j["mu"] = {{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"violations", vs}};
    violated = violated || !r.ok;
  }
  std::cout << dump_json(j);
  return violated ? kViolated : kOk;
}

// ---- amalgamate ------------------------------------------------------------

struct AmalgamArgs {
  std::string a_file, b_file, base, emit_path;
  bool strict = false;
  int max_line = 0;
};

int run_amalgamate(const AmalgamArgs& a) {
  const PartialLinearSpace left = load_structure(a.a_file);
  const PartialLinearSpace right = load_structure(a.b_file);
  AmalgamOptions opts;
  opts.strict = a.strict;
  if (a.max_line > 0) opts.max_line_length = a.max_line;
  const auto r = free_amalgam(left, right, split_labels(a.base), opts);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  emit(a.emit_path, dump_json(structure_to_json(r.space)));
  return kOk;
}

// ---- grow ------------------------------------------------------------------

struct GrowArgs {
  std::string profile = "sparse", mu_file, seed_structure = "free3";
  std::string emit_path, trace_path, verify_path;
  int q = 3, a = -1, max_points = 20, attempts = 6;
  std::uint64_t seed = 1;
};

int run_verify(const std::string& path) {
  const GrowthTrace t = trace_from_json(read_json_file(path));
  const auto r = verify_chain(t);
  Json j{{"ok", r.ok}, {"steps_checked", r.steps_checked}, {"failures", r.failures}};
  std::cout << dump_json(j);
  for (const auto& f : r.failures) std::cerr << f << "\n";
  return r.ok ? kOk : kViolated;
}

int run_grow(const GrowArgs& a) {
  if (!a.verify_path.empty()) return run_verify(a.verify_path);
  GrowthConfig c;
  const auto p = growth_profile_from_name(a.profile);
  if (!p) throw InputError("unknown growth profile '" + a.profile + "'");
  c.profile = *p;
  c.q = a.q;
  if (a.a >= 0) c.a = a.a;
  if (!a.mu_file.empty()) c.mu = mu_from_json(read_json_file(a.mu_file));
  c.max_points = a.max_points;
  c.seed = a.seed;
  c.seed_structure = a.seed_structure;
  c.attempts = a.attempts;
  const GrowthTrace t = grow(c);
  std::cerr << "status " << t.status << ", " << t.final_structure().size() << " points, "
            << t.steps.size() - 1 << " steps, " << t.skips.size() << " skips\n";
  if (!a.trace_path.empty()) write_text_file(a.trace_path, dump_json(trace_to_json(t)));
  emit(a.emit_path, dump_json(structure_to_json(t.final_structure())));
  return kOk;
}

// ---- blockalg --------------------------------------------------------------

struct BlockArgs {
  int p = 3, n = 1, a = -1, power = 1, identities = 0;
  std::string emit_path, csv_path;
};

int run_blockalg(const BlockArgs& a) {
  if (!is_prime(a.p)) throw InputError("p = " + std::to_string(a.p) + " is not prime");
  const FiniteField f = FiniteField::make(a.p, a.n);
  const int av = a.a >= 0 ? a.a : f.primitive_elements().front();
  if (av <= 1 || av >= f.q()) throw InputError("a must lie in GF(q) minus {0, 1}");
  const BlockAlgebra alg(f, av, a.power);
  const StarTable t = alg.table();
  const StarTable free2 = alg.free_algebra();
  const auto v = verify_2q_variety(t, free2);
  Json j{{"q", f.q()},
         {"modulus", f.modulus_string()},
         {"a", f.element_string(av)},
         {"size", alg.size()},
         {"latin", is_latin_square(t)},
         {"idempotent", is_idempotent(t)},
         {"two_generated_q", v.ok},
         {"pairs_checked", v.pairs_checked}};
  if (!v.ok) j["reason"] = v.reason;
  if (a.identities > 0) {
    for (const auto& id : check_two_variable_identities(free2, t, a.identities)) {
      j["identities"].push_back({{"identity", id.lhs + " = " + id.rhs},
                                 {"holds_on_carrier", id.holds_on_carrier}});
    }
  }
  if (!a.csv_path.empty()) {
    std::ostringstream csv;
    csv << "*";
    for (int y = 0; y < t.n; ++y) csv << "," << t.labels[y];
    csv << "\n";
    for (int x = 0; x < t.n; ++x) {
      csv << t.labels[x];
      for (int y = 0; y < t.n; ++y) csv << "," << t.labels[t(x, y)];
      csv << "\n";
    }
    write_text_file(a.csv_path, csv.str());
  }
  if (!a.emit_path.empty()) {
    emit(a.emit_path, dump_json(structure_to_json(induced_steiner(t, free2))));
    if (a.emit_path == "-") return v.ok ? kOk : kViolated;
  }
  std::cout << dump_json(j);
  return v.ok ? kOk : kViolated;
}

// ---- steiner ---------------------------------------------------------------

int run_steiner(const std::string& file, const std::string& example, int k) {
  const PartialLinearSpace m = load_input(file, example);
  Json j{{"points", m.size()}, {"lines", m.line_count()}};
  std::string reason;
  for (int x = 0; x < m.size() && reason.empty(); ++x) {
    for (int y = x + 1; y < m.size(); ++y) {
      if (m.line_through(x, y) < 0) {
        reason = "no line through " + m.label(x) + ", " + m.label(y);
        break;
      }
    }
  }
  if (k > 0 && reason.empty()) {
    for (Mask l : m.lines()) {
      if (popcount(l) != k) {
        reason = "line of " + std::to_string(popcount(l)) + " points";
        break;
      }
    }
  }
  j["steiner_system"] = reason.empty();
  if (!reason.empty()) j["reason"] = reason;
  std::cout << dump_json(j);
  return reason.empty() ? kOk : kViolated;
}

// ---- pathgraph / uniform ---------------------------------------------------

Exclusion exclusion_arg(const std::string& s) {
  if (s == "line") return Exclusion::kLine;
  if (s == "icl") return Exclusion::kIcl;
  throw InputError("mode must be 'line' or 'icl'");
}

Json path_json(const PartialLinearSpace& m, const Path& p) {
  Json pts = Json::array();
  for (int x : p.points) pts.push_back(m.label(x));
  Json lines = Json::array();
  for (Mask l : p.lines) lines.push_back(labels_json(m, l));
  Json j{{"first", color_name(p.first)},
         {"points", pts},
         {"lines", lines},
         {"length", p.line_count()},
         {"kind", p.kind == PathKind::kPseudoCycle ? "pseudo-cycle" : "truncated"}};
  if (p.kind == PathKind::kTruncated) j["truncation"] = truncation_name(p.truncation);
  if (p.kind == PathKind::kPseudoCycle) {
    j["closing"] = {p.closing.first + 1, p.closing.second + 1};
  }
  return j;
}

std::string graph_dot(const PartialLinearSpace& m, const PathGraph& g) {
  std::ostringstream out;
  out << "graph paths {\n";
  for (int x : indices_of(g.domain)) out << "  \"" << m.label(x) << "\";\n";
  for (Color c : {Color::kA, Color::kB}) {
    const auto& adj = g.adj(c);
    for (int x : indices_of(g.domain)) {
      for (int y : indices_of(adj[x])) {
        if (y > x) {
          out << "  \"" << m.label(x) << "\" -- \"" << m.label(y) << "\" [color="
              << (c == Color::kA ? "red" : "blue") << "];\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

struct PathArgs {
  std::string file, example, a, b, mode = "line", first = "a", dot_path, reading = "both";
  std::string start;
  int fan = 0, steps = 256;
};

int run_pathgraph(const PathArgs& a) {
  const PartialLinearSpace m = load_input(a.file, a.example);
  const int pa = point_arg(m, a.a), pb = point_arg(m, a.b);
  if (pa == pb) throw InputError("a and b must differ");
  const PathGraph g = build_graph(m, pa, pb, exclusion_arg(a.mode));
  Json j{{"a", a.a},
         {"b", a.b},
         {"mode", exclusion_name(g.mode)},
         {"excluded", labels_json(m, g.excluded)},
         {"domain", labels_json(m, g.domain)},
         {"edges_a", g.edge_count(Color::kA)},
         {"edges_b", g.edge_count(Color::kB)}};
  if (a.first != "a" && a.first != "b") throw InputError("--first must be 'a' or 'b'");
  const Color first = a.first == "a" ? Color::kA : Color::kB;
  std::vector<int> starts;
  if (!a.start.empty()) {
    starts.push_back(point_arg(m, a.start));
    if (!contains(g.domain, starts[0])) throw InputError("start point outside the domain");
  } else {
    starts = indices_of(g.domain);
  }
  j["paths"] = Json::array();
  for (int s : starts) {
    Json pj = path_json(m, generate_path(m, g, s, first, a.steps));
    pj["start"] = m.label(s);
    j["paths"].push_back(pj);
  }
  if (a.fan > 0) {
    FanReading r = FanReading::kBothFamilies;
    if (a.reading == "separate") {
      r = FanReading::kSeparateFamilies;
    } else if (a.reading != "both") {
      throw InputError("--reading must be 'both' or 'separate'");
    }
    for (int s : starts) {
      const Fan f = build_fan(m, g, s, a.fan, r, a.steps);
      Json levels = Json::array();
      for (Mask l : f.levels) levels.push_back(labels_json(m, l));
      j["fans"].push_back({{"start", m.label(s)}, {"levels", levels}, {"fixpoint", f.fixpoint}});
    }
  }
  if (!a.dot_path.empty()) write_text_file(a.dot_path, graph_dot(m, g));
  std::cout << dump_json(j);
  return kOk;
}

int run_uniform(const std::string& file, const std::string& example, const std::string& mode,
                bool swap) {
  const PartialLinearSpace m = load_input(file, example);
  const auto r = is_uniform(m, exclusion_arg(mode), swap);
  Json j{{"uniform", r.uniform}, {"pairs_checked", r.pairs_checked}};
  if (r.reference) j["reference"] = {m.label(r.reference->first), m.label(r.reference->second)};
  if (r.counterexample) {
    j["counterexample"] = {m.label(r.counterexample->first), m.label(r.counterexample->second)};
  }
  std::cout << dump_json(j);
  return r.uniform ? kOk : kViolated;
}

// ---- replay / export -------------------------------------------------------

int run_replay() {
  const auto r = replay_counterexample();
  std::cout << dump_json(replay_to_json(r));
  return r.demonstrated ? kOk : kViolated;
}

int run_export(const std::string& file, const std::string& example, const std::string& format,
               const std::string& out) {
  const PartialLinearSpace m = load_input(file, example);
  if (format == "json") {
    emit(out, dump_json(structure_to_json(m)));
  } else if (format == "dot") {
    emit(out, structure_dot(m));
  } else {
    throw InputError("format must be 'json' or 'dot'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predimension, amalgams and configurations in partial linear spaces."};
  app.require_subcommand(1);

  InspectArgs ia;
  auto* inspect = app.add_subcommand("inspect", "delta, d, icl and closure of subsets");
  inspect->add_option("file", ia.file, "structure JSON ('-' for stdin)");
  inspect->add_option("--example", ia.example, "built-in structure");
  inspect->add_option("--subset", ia.subsets, "comma-separated labels, 'all' or 'none'");
  inspect->add_option("--good-pairs", ia.good_pairs, "list good pair types up to this size");
  inspect->add_option("--capacity", ia.capacity, "free points allowed in closure search");

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "forbidden configurations and class checks");
  detect->add_option("file", da.file, "structure JSON");
  detect->add_option("--example", da.example, "built-in structure");
  detect->add_option("--template", da.templates, "pasch, mitre, mia or fano");
  detect->add_flag("--lax", da.lax, "match lines of any length");
  detect->add_option("--infinity-sparse", da.sparse_cap, "subset size cap");
  detect->add_option("--class", da.profile, "class profile");
  detect->add_option("--a", da.quasi_a, "field element for the quasi profile");
  detect->add_option("--count", da.counts, "count (n+2, n)-configurations");
  detect->add_option("--mu", da.mu_file, "mu JSON");
  detect->add_option("--max-base", da.max_base, "base size cap for mu checks");
  detect->add_option("--max-ext", da.max_ext, "extension size cap for mu checks");

  AmalgamArgs aa;
  auto* amalg = app.add_subcommand("amalgamate", "free amalgam of A and B over C");
  amalg->add_option("a", aa.a_file)->required();
  amalg->add_option("b", aa.b_file)->required();
  amalg->add_option("--base", aa.base, "comma-separated shared labels")->required();
  amalg->add_flag("--strict", aa.strict, "reject when C is not strong in A");
  amalg->add_option("--max-line", aa.max_line, "reject lines longer than this");
  amalg->add_option("--emit", aa.emit_path, "output file");

  GrowArgs ga;
  auto* growc = app.add_subcommand("grow", "grow a structure or verify a trace");
  growc->add_option("--profile", ga.profile);
  growc->add_option("--q", ga.q);
  growc->add_option("--a", ga.a);
  growc->add_option("--mu-file", ga.mu_file);
  growc->add_option("--max-points", ga.max_points);
  growc->add_option("--seed", ga.seed);
  growc->add_option("--seed-structure", ga.seed_structure, "free3 or fano");
  growc->add_option("--attempts", ga.attempts);
  growc->add_option("--emit", ga.emit_path);
  growc->add_option("--trace", ga.trace_path);
  growc->add_option("--verify", ga.verify_path, "re-check a trace file");

  BlockArgs ba;
  auto* block = app.add_subcommand("blockalg", "block algebra over GF(p^n)");
  block->add_option("--p", ba.p);
  block->add_option("--n", ba.n);
  block->add_option("--a", ba.a, "element code, default least primitive");
  block->add_option("--power", ba.power);
  block->add_option("--emit", ba.emit_path, "induced Steiner system JSON");
  block->add_option("--csv", ba.csv_path, "operation table");
  block->add_option("--identities", ba.identities, "term depth");

  std::string sfile, sexample;
  int sk = 0;
  auto* steinerc = app.add_subcommand("steiner", "check for a Steiner system");
  steinerc->add_option("file", sfile);
  steinerc->add_option("--example", sexample);
  steinerc->add_option("--k", sk, "required line length");

  PathArgs pa;
  auto* path = app.add_subcommand("pathgraph", "path graph of a pair of points");
  path->add_option("file", pa.file);
  path->add_option("--example", pa.example);
  path->add_option("--a", pa.a)->required();
  path->add_option("--b", pa.b)->required();
  path->add_option("--mode", pa.mode, "line or icl");
  path->add_option("--seed", pa.start, "start point, default every domain point");
  path->add_option("--first", pa.first, "first colour, a or b");
  path->add_option("--dot", pa.dot_path);
  path->add_option("--fan", pa.fan, "fan depth");
  path->add_option("--reading", pa.reading, "both or separate");
  path->add_option("--steps", pa.steps);

  std::string ufile, uexample, umode = "line";
  bool uswap = false;
  auto* uniform = app.add_subcommand("uniform", "compare path graphs of all pairs");
  uniform->add_option("file", ufile);
  uniform->add_option("--example", uexample);
  uniform->add_option("--mode", umode);
  uniform->add_flag("--swap", uswap, "allow exchanging the colours");

  app.add_subcommand("replay", "amalgamation counterexample");

  std::string efile, eexample, eformat = "json", eout;
  auto* exportc = app.add_subcommand("export", "canonical JSON or DOT");
  exportc->add_option("file", efile);
  exportc->add_option("--example", eexample);
  exportc->add_option("--format", eformat, "json or dot");
  exportc->add_option("--out", eout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "inspect") return run_inspect(ia);
    if (name == "detect") return run_detect(da);
    if (name == "amalgamate") return run_amalgamate(aa);
    if (name == "grow") return run_grow(ga);
    if (name == "blockalg") return run_blockalg(ba);
    if (name == "steiner") return run_steiner(sfile, sexample, sk);
    if (name == "pathgraph") return run_pathgraph(pa);
    if (name == "uniform") return run_uniform(ufile, uexample, umode, uswap);
    if (name == "replay") return run_replay();
    if (name == "export") return run_export(efile, eexample, eformat, eout);
  } catch (const ConstraintViolation& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return kViolated;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
