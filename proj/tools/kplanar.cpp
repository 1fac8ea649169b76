// Copyright 2026 The kplanar Authors
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

// kplanar: generate, audit, discharge, certify, bound and render drawings.
// Exit codes: 0 pass, 1 usage or input error, 2 audit violation, 3 solver budget.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kplanar/bounds.hpp"
#include "kplanar/chords.hpp"
#include "kplanar/constructions.hpp"
#include "kplanar/discharge.hpp"
#include "kplanar/hblock.hpp"
#include "kplanar/io.hpp"
#include "kplanar/svg.hpp"

namespace {

using kplanar::Json;

enum Exit { kPass = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json read_input(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw kplanar::InputError(std::string("stdin: ") + e.what());
    }
  }
  return kplanar::read_json_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw kplanar::InputError("cannot write " + path);
  out << text << "\n";
}

kplanar::Drawing generate(const std::string& family, int x) {
  if (x < 1) throw kplanar::InputError("--x must be at least 1");
  if (family == "outer5") return kplanar::outer_5planar_family(x);
  if (family == "hex") return kplanar::hex_cylinder(x);
  if (family == "dodeca") return kplanar::dodecagonal_cylinder(x);
  if (family == "outer6") return kplanar::outer_6planar_family(x);
  if (family == "six-doubled") return kplanar::sixplanar_doubled(x);
  if (family == "six-simple") return kplanar::sixplanar_simple_tiling(x);
  throw kplanar::InputError("unknown family '" + family + "'");
}

struct Report {
  Json j;
  bool failed = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command) { j["command"] = command; }
  void verdict(const std::string& name, bool pass) {
    j["verdicts"][name] = pass ? "pass" : "fail";
    failed = failed || !pass;
  }
  int finish(const std::string& out) {
    j["format_version"] = kplanar::kFormatVersion;
    j["status"] = failed ? "fail" : "pass";
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    write_output(out, j.dump(2));
    return failed ? kViolation : kPass;
  }
};

int run_check(const std::string& file, int k, int min_k, bool outer, bool framed, bool polyhedral, const std::string& out) {
  Json in = read_input(file);
  kplanar::Drawing d = kplanar::drawing_from_json(in);
  Report r("check");
  r.j["input_digest"] = digest(kplanar::canonical_dump(in));
  auto prof = kplanar::crossing_profile(d);
  r.j["counters"] = {{"n", d.n()}, {"m", d.m()}, {"max_crossings", prof.max_crossings},
                     {"total_crossings", prof.total_crossings}};
  auto simp = kplanar::validate_simplicity(d);
  r.verdict("simple", simp.ok());
  if (!simp.ok()) r.j["problems"] = simp.problems;
  if (d.has_embedding() && simp.ok()) {
    try {
      auto p = kplanar::planarize(d);
      Json census = Json::object();
      for (auto [cls, c] : kplanar::face_census(p).classes)
        census[std::to_string(cls.first) + "-" + std::to_string(cls.second)] = c;
      r.j["counters"]["face_census"] = census;
    } catch (const kplanar::Error& e) {
      r.verdict("planarization", false);
      r.j["problems"].push_back(e.what());
    }
  }
  const long long n = d.n(), m = d.m();
  auto s = kplanar::skeleton_audit(d);
  r.j["skeleton"] = kplanar::skeleton_json(s);
  if (k >= 0) {
    r.verdict("k_planar", prof.is_k_planar(k));
    // edge-count properties that hold for every drawing of the class
    if (k <= 5 && prof.is_k_planar(5) && n >= 3)
      r.verdict("density_340_49", kplanar::Rational(m) <= kplanar::rat(340, 49) * (n - 2));
  }
  if (min_k >= 0) r.verdict("min_k_planar", kplanar::is_min_k_planar(d, min_k));
  if (outer) {
    r.verdict("outer", s.outer_strict);
    if (s.outer_strict && prof.is_k_planar(5) && !d.multigraph) r.verdict("outer_density", m <= 4 * n - 9);
  }
  if (framed) r.verdict("framed", s.is_framed());
  if (polyhedral) {
    r.verdict("polyhedral", s.is_polyhedral());
    if (s.is_polyhedral()) {
      auto rep = kplanar::polyhedral_audit(s, d.m());
      r.j["polyhedral"] = kplanar::polyhedral_json(rep);
      if (prof.is_k_planar(5)) r.verdict("polyhedral_bound", rep.ok());
    }
  }
  return r.finish(out);
}

int run_discharge(const std::string& file, const std::string& ruleset, const std::string& out) {
  Json in = read_input(file);
  kplanar::Drawing d = kplanar::drawing_from_json(in);
  auto rs = kplanar::ruleset_by_name(ruleset);
  auto L = kplanar::run_discharge(d, rs);
  Json j = kplanar::ledger_json(L);
  j["command"] = "discharge";
  j["input_digest"] = digest(kplanar::canonical_dump(in));
  write_output(out, j.dump(2));
  return L.ok() ? kPass : kViolation;
}

int run_bounds_constants(const std::string& out) {
  auto c = kplanar::crossing_lemma();
  auto o = kplanar::outer_crossing_lemma();
  Json j{{"format_version", kplanar::kFormatVersion},
         {"linear_crossing_constant", kplanar::rational_json(kplanar::crossing_linear_constant())},
         {"crossing_lemma", kplanar::crossing_lemma_json(c)},
         {"outer_crossing_lemma", kplanar::crossing_lemma_json(o)},
         {"density_sqrt_coefficient", kplanar::rational_json(kplanar::density_sqrt_coefficient())}};
  j["status"] = c.meets_claim && o.meets_claim ? "pass" : "fail";
  write_output(out, j.dump(2));
  return c.meets_claim && o.meets_claim ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-planar drawing lab"};
  app.require_subcommand(1);
  std::string out;

  auto* gen = app.add_subcommand("gen", "write a construction as interchange JSON");
  std::string family;
  int x = 1;
  gen->add_option("--family", family, "outer5, hex, dodeca, outer6, six-doubled, six-simple")->required();
  gen->add_option("--x", x, "family parameter")->required();
  gen->add_option("-o,--output", out, "output file, stdout by default");

  auto* check = app.add_subcommand("check", "audit a drawing");
  std::string file = "-";
  int k = -1, min_k = -1;
  bool outer = false, framed = false, polyhedral = false;
  check->add_option("file", file, "drawing JSON, - for stdin");
  check->add_option("--k", k, "require k-planarity");
  check->add_option("--min-k", min_k, "require min-k-planarity");
  check->add_flag("--outer", outer, "require an outer drawing");
  check->add_flag("--framed", framed, "require a framed skeleton");
  check->add_flag("--polyhedral", polyhedral, "require a polyhedral skeleton and audit its face vector");
  check->add_option("-o,--output", out);

  auto* dis = app.add_subcommand("discharge", "replay the charging argument");
  std::string ruleset = "five_planar_main";
  dis->add_option("file", file, "drawing JSON, - for stdin");
  dis->add_option("--ruleset", ruleset, "five_planar_main, four_planar, outer_five, k_planar_general(K), min_k(K)");
  dis->add_option("-o,--output", out);

  auto* cert = app.add_subcommand("certify", "exact searches");
  cert->require_subcommand(1);
  long long budget = 0;
  auto* cert_h = cert->add_subcommand("hblock", "H-block charge certificate");
  std::string alpha = "49/170";
  cert_h->add_option("--alpha", alpha);
  cert_h->add_option("--budget", budget, "node budget, 0 for none");
  cert_h->add_option("-o,--output", out);
  auto* cert_c = cert->add_subcommand("chords", "largest k-planar chord set of a convex n-gon");
  int cn = 6, ck = 5;
  cert_c->add_option("--n", cn)->required();
  cert_c->add_option("--k", ck)->required();
  cert_c->add_option("--budget", budget, "node budget, 0 for none");
  cert_c->add_option("-o,--output", out);

  auto* bnd = app.add_subcommand("bounds", "exact constants and inequality chains");
  bnd->require_subcommand(1);
  auto* b_audit = bnd->add_subcommand("audit", "check the alpha inequalities");
  b_audit->add_option("--alpha", alpha);
  b_audit->add_option("-o,--output", out);
  auto* b_const = bnd->add_subcommand("constants", "crossing constants");
  b_const->add_option("-o,--output", out);
  auto* b_table = bnd->add_subcommand("table", "density table rows 0..k");
  int tk = 8;
  b_table->add_option("--k", tk);
  b_table->add_option("-o,--output", out);
  auto* b_what = bnd->add_subcommand("what-if", "crossing constant under an assumed 5-planar density");
  std::string density = "31/5";
  b_what->add_option("--density", density);
  b_what->add_option("-o,--output", out);

  auto* render = app.add_subcommand("render", "write an SVG");
  render->add_option("file", file, "drawing JSON, - for stdin");
  render->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (gen->parsed()) {
      write_output(out, kplanar::canonical_dump(kplanar::drawing_to_json(generate(family, x))));
      return kPass;
    }
    if (check->parsed()) return run_check(file, k, min_k, outer, framed, polyhedral, out);
    if (dis->parsed()) return run_discharge(file, ruleset, out);
    if (cert_h->parsed()) {
      kplanar::opt::SolveOptions so;
      if (budget > 0) so.node_budget = budget;
      auto c = kplanar::hblock_certificate(kplanar::parse_rational(alpha), so);
      Json j = kplanar::hblock_json(c);
      j["status"] = c.optimum < 8 ? "pass" : "fail";
      write_output(out, j.dump(2));
      return c.optimum < 8 ? kPass : kViolation;
    }
    if (cert_c->parsed()) {
      kplanar::ChordSearchOptions o;
      if (budget > 0) o.node_budget = budget;
      auto r = kplanar::max_convex_chords(cn, ck, o);
      write_output(out, kplanar::chords_json(cn, ck, r).dump(2));
      return kPass;
    }
    if (b_audit->parsed()) {
      auto a = kplanar::alpha_audit(kplanar::parse_rational(alpha));
      Json j = kplanar::alpha_audit_json(a);
      j["status"] = a.all_hold() ? "pass" : "fail";
      write_output(out, j.dump(2));
      return a.all_hold() ? kPass : kViolation;
    }
    if (b_const->parsed()) return run_bounds_constants(out);
    if (b_table->parsed()) {
      if (tk < 0) throw kplanar::InputError("--k must be nonnegative");
      Json rows = Json::array();
      for (int i = 0; i <= tk; ++i) rows.push_back(kplanar::density_row_json(kplanar::density_table(i)));
      write_output(out, Json{{"format_version", kplanar::kFormatVersion}, {"rows", rows}}.dump(2));
      return kPass;
    }
    if (b_what->parsed()) {
      auto w = kplanar::crossing_what_if(kplanar::parse_rational(density));
      Json j{{"format_version", kplanar::kFormatVersion}, {"density", kplanar::rational_json(w.density)},
             {"linear", kplanar::rational_json(w.linear)}, {"constant", kplanar::rational_json(w.constant)},
             {"reciprocal", kplanar::to_double(1 / w.constant)}, {"assumption", w.assumption}, {"verified", false}};
      write_output(out, j.dump(2));
      return kPass;
    }
    if (render->parsed()) {
      Json in = read_input(file);
      kplanar::Drawing d = kplanar::drawing_from_json(in);
      auto layout = kplanar::is_convex_shorthand(in) ? kplanar::convex_layout(d.n()) : kplanar::stored_layout(d);
      write_output(out, kplanar::render_svg(d, layout));
      return kPass;
    }
  } catch (const kplanar::opt::BudgetExceededError& e) {
    std::cerr << "kplanar: " << e.what() << "\n";
    return kBudget;
  } catch (const kplanar::Error& e) {
    std::cerr << "kplanar: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "kplanar: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
