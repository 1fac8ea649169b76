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

#ifndef KPLANAR_IO_HPP_
#define KPLANAR_IO_HPP_

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kplanar/audit.hpp"
#include "kplanar/bounds.hpp"
#include "kplanar/chords.hpp"
#include "kplanar/discharge.hpp"
#include "kplanar/drawing.hpp"
#include "kplanar/framed.hpp"
#include "kplanar/hblock.hpp"

namespace kplanar {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// {num, den} with integers, falling back to decimal strings past 64 bits.
inline Json rational_json(const Rational& r) {
  auto part = [](const BigInt& b) -> Json {
    if (b >= std::numeric_limits<long long>::min() && b <= std::numeric_limits<long long>::max())
      return b.convert_to<long long>();
    return b.str();
  };
  return Json{{"num", part(num(r))}, {"den", part(den(r))}};
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
      auto side = [&](const Json& v) {
        return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
      };
      BigInt q = side(j.at("den"));
      if (q == 0) throw InputError("zero denominator");
      return Rational(side(j.at("num")), q);
    }
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational");
}

// ------------------------------------------------------------ drawings

inline Json drawing_to_json(const Drawing& d) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["n"] = d.n();
  j["multigraph"] = d.multigraph;
  Json vs = Json::array();
  for (const auto& v : d.vertices) {
    Json x{{"id", v.id}};
    if (v.pos) x["pos"] = Json::array({to_string(v.pos->x), to_string(v.pos->y)});
    vs.push_back(x);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (int e = 0; e < d.m(); ++e) es.push_back(Json{{"id", e}, {"ends", {d.edges[e].u, d.edges[e].v}}});
  j["edges"] = es;
  j["crossings"] = d.crossings;
  if (!d.crossing_sides.empty()) j["crossing_sides"] = d.crossing_sides;
  if (!d.rotation.empty()) j["rotation"] = d.rotation;
  bool any_bend = false;
  for (const auto& b : d.bends) any_bend = any_bend || !b.empty();
  if (any_bend) {
    Json bs = Json::array();
    for (const auto& b : d.bends) {
      Json pts = Json::array();
      for (const auto& p : b) pts.push_back(Json::array({to_string(p.x), to_string(p.y)}));
      bs.push_back(pts);
    }
    j["bends"] = bs;
  }
  return j;
}

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline int int_field(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

inline std::vector<std::vector<int>> int_table(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) throw InputError(w + ": expected an array");
    out.emplace_back();
    for (std::size_t k = 0; k < v[i].size(); ++k)
      out.back().push_back(int_field(v[i][k], w + "[" + std::to_string(k) + "]"));
  }
  return out;
}

inline Point point_field(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + ": expected [x, y]");
  return {rational_from_json(v[0], where + "[0]"), rational_from_json(v[1], where + "[1]")};
}

}  // namespace detail

inline bool is_convex_shorthand(const Json& j) { return j.is_object() && j.contains("convex"); }

inline Drawing drawing_from_json(const Json& j) {
  using detail::field;
  if (!j.is_object()) throw InputError("drawing: expected a JSON object");
  if (j.contains("format_version") && j.at("format_version") != kFormatVersion)
    throw InputError("format_version: unsupported value " + j.at("format_version").dump());
  if (is_convex_shorthand(j)) {
    int n = detail::int_field(j.at("convex"), "convex");
    std::vector<std::pair<int, int>> chords;
    if (j.contains("chords")) {
      auto t = detail::int_table(j.at("chords"), "chords");
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].size() != 2) throw InputError("chords[" + std::to_string(i) + "]: expected [a, b]");
        chords.emplace_back(t[i][0], t[i][1]);
      }
    }
    bool multi = j.value("multigraph", false);
    return from_convex(n, chords, false, multi);
  }
  int n = detail::int_field(field(j, "n", "drawing"), "n");
  if (n < 0) throw InputError("n: negative");
  Drawing d = Drawing::with_vertices(n);
  if (j.contains("multigraph")) {
    if (!j.at("multigraph").is_boolean()) throw InputError("multigraph: expected a boolean");
    d.multigraph = j.at("multigraph").get<bool>();
  }
  if (j.contains("vertices")) {
    const auto& vs = j.at("vertices");
    if (!vs.is_array() || static_cast<int>(vs.size()) != n) throw InputError("vertices: expected " + std::to_string(n) + " entries");
    for (int i = 0; i < n; ++i) {
      std::string w = "vertices[" + std::to_string(i) + "]";
      if (vs[i].contains("id") && detail::int_field(vs[i].at("id"), w + ".id") != i)
        throw InputError(w + ".id: vertices must be listed in id order");
      if (vs[i].contains("pos")) d.vertices[i].pos = detail::point_field(vs[i].at("pos"), w + ".pos");
    }
  }
  const auto& es = field(j, "edges", "drawing");
  if (!es.is_array()) throw InputError("edges: expected an array");
  for (std::size_t e = 0; e < es.size(); ++e) {
    std::string w = "edges[" + std::to_string(e) + "]";
    const Json* ends = &es[e];
    if (es[e].is_object()) {
      if (es[e].contains("id") && detail::int_field(es[e].at("id"), w + ".id") != static_cast<int>(e))
        throw InputError(w + ".id: edges must be listed in id order");
      ends = &field(es[e], "ends", w);
    }
    if (!ends->is_array() || ends->size() != 2) throw InputError(w + ".ends: expected [u, v]");
    int u = detail::int_field((*ends)[0], w + ".ends[0]"), v = detail::int_field((*ends)[1], w + ".ends[1]");
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError(w + ".ends: vertex out of range");
    d.add_edge(u, v);
  }
  if (j.contains("crossings")) {
    auto t = detail::int_table(j.at("crossings"), "crossings");
    if (static_cast<int>(t.size()) != d.m()) throw InputError("crossings: expected one row per edge");
    d.crossings = t;
  }
  if (j.contains("crossing_sides")) {
    d.crossing_sides = detail::int_table(j.at("crossing_sides"), "crossing_sides");
    if (static_cast<int>(d.crossing_sides.size()) != d.m()) throw InputError("crossing_sides: expected one row per edge");
  } else if (std::all_of(d.crossings.begin(), d.crossings.end(), [](const auto& r) { return r.empty(); })) {
    d.crossing_sides.assign(d.m(), {});  // nothing to orient
  }
  if (j.contains("rotation")) {
    d.rotation = detail::int_table(j.at("rotation"), "rotation");
    if (static_cast<int>(d.rotation.size()) != n) throw InputError("rotation: expected one row per vertex");
  }
  if (j.contains("bends")) {
    const auto& bs = j.at("bends");
    if (!bs.is_array() || static_cast<int>(bs.size()) != d.m()) throw InputError("bends: expected one row per edge");
    d.bends.resize(d.m());
    for (int e = 0; e < d.m(); ++e)
      for (std::size_t k = 0; k < bs[e].size(); ++k)
        d.bends[e].push_back(detail::point_field(bs[e][k], "bends[" + std::to_string(e) + "][" + std::to_string(k) + "]"));
  }
  if (auto probs = structural_problems(d); !probs.empty()) throw InputError("drawing: " + probs.front());
  return d;
}

inline bool same_drawing(const Drawing& a, const Drawing& b) {
  if (a.n() != b.n() || a.m() != b.m() || a.multigraph != b.multigraph) return false;
  for (int i = 0; i < a.n(); ++i)
    if (a.vertices[i].pos != b.vertices[i].pos) return false;
  for (int e = 0; e < a.m(); ++e)
    if (a.edges[e].u != b.edges[e].u || a.edges[e].v != b.edges[e].v) return false;
  auto bends_of = [](const Drawing& d) {
    auto bs = d.bends;
    bs.resize(d.m());
    return bs;
  };
  return a.crossings == b.crossings && a.crossing_sides == b.crossing_sides && a.rotation == b.rotation &&
         bends_of(a) == bends_of(b);
}

inline std::string canonical_dump(const Json& j) { return j.dump(); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ------------------------------------------------------------ reports

inline Json skeleton_json(const SkeletonProfile& s) {
  Json hist = Json::object();
  for (auto [k, c] : s.face_histogram) hist[std::to_string(k)] = c;
  return Json{{"edges", s.edges.size()}, {"faces", s.faces.size()}, {"face_histogram", hist},
              {"simple", s.simple}, {"spanning", s.spanning}, {"biconnected", s.biconnected},
              {"triconnected", s.triconnected}, {"dual_simple", s.dual_simple}, {"h", s.h},
              {"outer_strict", s.outer_strict}, {"outer_lenient", s.outer_lenient}};
}

inline Json ledger_json(const ChargeLedger& L) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["ruleset"] = L.ruleset;
  j["alpha"] = rational_json(L.alpha);
  j["n"] = L.n;
  j["m"] = L.m;
  j["h_blocks"] = L.blocks;
  j["q_blocks"] = L.q_blocks;
  Json faces = Json::array();
  for (const auto& f : L.faces)
    faces.push_back(Json{{"id", f.id},
                         {"class", {f.cls.first, f.cls.second}},
                         {"block", f.block},
                         {"trajectory",
                          {rational_json(f.initial), rational_json(f.after_step1), rational_json(f.after_step2),
                           rational_json(f.after_edges), rational_json(f.final_charge)}}});
  j["faces"] = faces;
  Json edges = Json::array();
  for (const auto& e : L.edges) edges.push_back(Json{{"id", e.id}, {"received", rational_json(e.received)}, {"blocks", e.blocks}});
  j["edges"] = edges;
  Json tr = Json::array();
  for (const auto& t : L.transfers)
    tr.push_back(Json{{"from_face", t.from_face}, {"to_block", t.to_block}, {"side", t.side}, {"rule", t.rule},
                      {"amount", rational_json(t.amount)}});
  j["transfers"] = tr;
  Json vs = Json::array();
  for (const auto& v : L.violations)
    vs.push_back(Json{{"kind", v.kind}, {"id", v.id}, {"value", rational_json(v.value)}, {"detail", v.detail}});
  j["violations"] = vs;
  j["warnings"] = L.warnings;
  j["total_initial"] = rational_json(L.total_initial);
  j["outer_deduction"] = rational_json(L.outer_deduction);
  j["residue"] = rational_json(L.residue);
  j["implied_edge_bound"] = rational_json(L.implied_edge_bound());
  j["wedge_relations"] = L.wedge_relations;
  j["side_relations"] = L.side_relations;
  j["ok"] = L.ok();
  return j;
}

inline Json alpha_audit_json(const AlphaAudit& a) {
  Json cs = Json::array();
  for (const auto& c : a.constraints)
    cs.push_back(Json{{"name", c.name}, {"text", c.text}, {"lhs", rational_json(c.lhs)}, {"rhs", rational_json(c.rhs)},
                      {"verdict", to_string(c.verdict)}});
  return Json{{"format_version", kFormatVersion}, {"alpha", rational_json(a.alpha)}, {"beta", rational_json(a.beta)},
              {"gamma", rational_json(a.gamma)}, {"constraints", cs}, {"all_hold", a.all_hold()}, {"tight", a.tight()}};
}

inline Json crossing_lemma_json(const CrossingLemma& c) {
  return Json{{"linear", rational_json(c.linear)}, {"p_factor", rational_json(c.p_factor)},
              {"constant", rational_json(c.constant)}, {"reciprocal", to_double(1 / c.constant)},
              {"claimed_reciprocal", rational_json(c.claimed_reciprocal)}, {"meets_claim", c.meets_claim},
              {"threshold", rational_json(c.threshold)}};
}

inline Json density_row_json(const DensityRow& r) {
  Json j{{"k", r.k}, {"source", r.source}, {"per_n_value", r.per_n_value()}};
  if (r.per_n) j["per_n"] = rational_json(*r.per_n);
  if (r.constant) j["constant"] = rational_json(*r.constant);
  if (r.sqrt_coefficient) j["sqrt_coefficient"] = rational_json(*r.sqrt_coefficient);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json polyhedral_json(const PolyhedralReport& r) {
  Json hist = Json::object();
  for (auto [k, c] : r.faces) hist[std::to_string(k)] = c;
  return Json{{"n", r.n}, {"m", r.m}, {"faces", hist}, {"triangles", r.triangles}, {"excess", r.excess},
              {"capacity", rational_json(r.capacity)}, {"triangles_ok", r.triangles_ok}, {"excess_ok", r.excess_ok},
              {"within_capacity", r.within_capacity}, {"within_bound", r.within_bound}, {"ok", r.ok()}};
}

inline Json hblock_json(const HBlockCertificate& c) {
  Json w = Json::array();
  for (const auto& [r, k] : c.witness) w.push_back(Json{{"route", r.name()}, {"weight", k}});
  Json g = Json::array();
  for (const auto& x : c.giveback) g.push_back(rational_json(x));
  return Json{{"format_version", kFormatVersion}, {"alpha", rational_json(c.alpha)}, {"optimum", rational_json(c.optimum)},
              {"optimum_value", to_double(c.optimum)}, {"below_eight", c.optimum < 8}, {"witness", w},
              {"t", c.t}, {"y", c.y}, {"giveback", g}, {"nodes", c.nodes}};
}

inline Json chords_json(int n, int k, const ChordSearchResult& r) {
  Json cs = Json::array();
  for (auto [a, b] : r.chords) cs.push_back({a, b});
  return Json{{"format_version", kFormatVersion}, {"n", n}, {"k", k}, {"count", r.count}, {"chords", cs}, {"nodes", r.nodes}};
}

}  // namespace kplanar

#endif  // KPLANAR_IO_HPP_
