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

#ifndef KPLANAR_BOUNDS_HPP_
#define KPLANAR_BOUNDS_HPP_

#include <cmath>
#include <cstdio>
#include <map>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kplanar/audit.hpp"
#include "kplanar/rational.hpp"

namespace kplanar {

class DerivationError : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline void expect_equal(const Rational& got, const Rational& want, const std::string& what) {
  if (got != want) throw DerivationError(what + ": derived " + to_string(got) + ", expected " + to_string(want));
}
}  // namespace detail

// ------------------------------------------------------------ alpha chain

enum class Verdict { kHolds, kTight, kFails };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kTight: return "tight";
    default: return "fails";
  }
}

struct AlphaConstraint {
  std::string name;
  std::string text;  // lhs REL rhs, human readable
  Rational lhs, rhs;
  bool strict = false;  // lhs > rhs required
  Verdict verdict = Verdict::kHolds;
};

struct AlphaAudit {
  Rational alpha, beta, gamma;
  std::vector<AlphaConstraint> constraints;

  bool all_hold() const {
    for (const auto& c : constraints)
      if (c.verdict == Verdict::kFails) return false;
    return true;
  }
  std::vector<std::string> tight() const {
    std::vector<std::string> out;
    for (const auto& c : constraints)
      if (c.verdict == Verdict::kTight) out.push_back(c.name);
    return out;
  }
  const AlphaConstraint& at(const std::string& name) const {
    for (const auto& c : constraints)
      if (c.name == name) return c;
    throw InputError("no constraint named " + name);
  }
};

// Every requirement is stated as lhs >= rhs (or lhs > rhs).
inline AlphaAudit alpha_audit(const Rational& a) {
  if (!(a > 0 && a < rat(1, 2))) throw InputError("alpha must lie in (0, 1/2)");
  AlphaAudit A;
  A.alpha = a;
  A.beta = 30 - 8 / a;
  A.gamma = A.beta - 2;
  const Rational b = A.beta, g = A.gamma, f5 = rat(1, 5);
  auto add = [&](std::string name, std::string text, Rational lhs, Rational rhs, bool strict = false) {
    AlphaConstraint c{std::move(name), std::move(text), lhs, rhs, strict, Verdict::kHolds};
    if (strict ? !(lhs > rhs) : lhs < rhs) c.verdict = Verdict::kFails;
    else if (lhs == rhs) c.verdict = Verdict::kTight;
    A.constraints.push_back(std::move(c));
  };
  add("step2_share", "1/5 >= 2(a - 1/5)", f5, 2 * (a - f5));
  add("one_four", "1 >= 3a", 1, 3 * a);
  add("two_three", "9/5 - 6a >= 0", rat(9, 5) - 6 * a, 0);
  add("critical_exists", "8/a > 27", 8 / a, 27, true);
  add("two_four_single", "12/5 - 5a >= b a", rat(12, 5) - 5 * a, b * a);
  add("large_single", "2 - 2a >= b a", 2 - 2 * a, b * a);
  add("large_shared", "1 - a >= b a - 1/5", 1 - a, b * a - f5);
  add("quad_shared_2", "3(1 - a) >= 2(b a - 1/5)", 3 * (1 - a), 2 * (b * a - f5));
  add("quad_shared_3", "4(1 - a) >= 3(b a - 1/5)", 4 * (1 - a), 3 * (b * a - f5));
  add("quad_shared_4", "4(1 - a) >= 4(b a - 1/5)", 4 * (1 - a), 4 * (b * a - f5));
  add("big_faces", "9/31 >= a", rat(9, 31), a);
  add("tight", "9/5 - 6a >= g a", rat(9, 5) - 6 * a, g * a);
  add("three_two_blocks", "2 - 3a >= (b + g) a", 2 - 3 * a, (b + g) * a);
  add("three_missing_side", "2 - 3a >= (b + 2g) a", 2 - 3 * a, (b + 2 * g) * a);
  add("three_triag", "(2 - (3 + g) a)/4 >= (2 - 3a)/5", (2 - (3 + g) * a) / 4, (2 - 3 * a) / 5);
  add("three_triag_full", "2 - 3a >= b a", 2 - 3 * a, b * a);
  add("giveback_three", "a >= (2 - 3a)/5", a, (2 - 3 * a) / 5);
  add("giveback_single", "a >= 8/5 - 5a", a, rat(8, 5) - 5 * a);
  return A;
}

// ------------------------------------------------------------ crossing constants

// 5-planar edge limit per (n - 2) and the linear crossing bound built on it.
inline Rational five_planar_density() { return rat(340, 49); }
inline Rational convex_crossing_offset() { return rat(203, 9); }  // cr >= 5m - 203/9 (n - 2)

inline Rational crossing_linear_constant() {
  const Rational d = five_planar_density();
  // 6(m - d(n-2)) + 5 d (n-2) - 203/9 (n-2)
  Rational c = 6 * d - 5 * d + convex_crossing_offset();
  detail::expect_equal(c, rat(13007, 441), "linear crossing constant");
  return c;
}

inline Rational crossing_linear_bound(long long n, long long m) {
  return 6 * Rational(m) - crossing_linear_constant() * (n - 2);
}

// cr >= 6m/p^2 - L n/p^3 with p = (L/4)(n/m) gives (6 - 4) (4/L)^2 m^3/n^2.
inline Rational sampling_constant(const Rational& L, const Rational& p_factor) {
  return 6 / (p_factor * p_factor) - L / (p_factor * p_factor * p_factor);
}

struct CrossingLemma {
  Rational linear;     // L in cr >= 6m - L n
  Rational p_factor;   // p = p_factor * n / m
  Rational constant;   // cr >= constant * m^3 / n^2
  Rational claimed_reciprocal;
  bool meets_claim = false;  // constant >= 1 / claimed_reciprocal
  Rational threshold;        // p <= 1 needs m >= threshold * n
};

inline CrossingLemma crossing_lemma() {
  CrossingLemma c;
  c.linear = crossing_linear_constant();
  c.p_factor = rat(13007, 1764);
  detail::expect_equal(c.p_factor, c.linear / 4, "sampling probability factor");
  c.constant = sampling_constant(c.linear, c.p_factor);
  detail::expect_equal(c.constant, rat(6223392, 169182049), "crossing lemma constant");
  detail::expect_equal(Rational(13007) * 13007, 169182049, "13007^2");
  c.claimed_reciprocal = rat(2719, 100);
  c.meets_claim = c.constant >= 1 / c.claimed_reciprocal;
  c.threshold = c.p_factor;
  return c;
}

inline Rational crossing_lemma_constant() { return crossing_lemma().constant; }

struct OuterChainStep {
  int k;
  Rational per_n, constant;  // outer k-planar edge limit per_n * n + constant
};

// Outer k-planar edge limits for k = 0..5 used in the telescoping sum.
inline std::vector<OuterChainStep> outer_chain() {
  return {{0, 2, -3}, {1, rat(5, 2), -4}, {2, 3, -5}, {3, rat(13, 4), -6}, {4, rat(7, 2), -6},
          {5, rat(389, 98), rat(-778, 98)}};
}

inline CrossingLemma outer_crossing_lemma() {
  // 6(m - E_5) + sum_{k=1..5} k (E_k - E_{k-1}); L is minus its n-coefficient
  auto chain = outer_chain();
  Rational L = 6 * chain.back().per_n;
  for (int k = 1; k <= 5; ++k) L -= k * (chain[k].per_n - chain[k - 1].per_n);
  detail::expect_equal(L, rat(3571, 196), "outer linear constant");
  CrossingLemma c;
  c.linear = L;
  c.p_factor = rat(73, 16);
  c.constant = sampling_constant(L, c.p_factor);
  detail::expect_equal(c.constant, rat(256, 5329) * (6 - L * rat(16, 73)), "outer sampling form");
  detail::expect_equal(c.constant, rat(1837568, 19061833), "outer crossing constant");
  c.claimed_reciprocal = rat(1037, 100);
  c.meets_claim = c.constant >= 1 / c.claimed_reciprocal;
  c.threshold = c.p_factor;
  return c;
}

inline Rational outer_crossing_constant() { return outer_crossing_lemma().constant; }

// Best constant the same sampling step can give for linear part L: p = L/4.
inline Rational optimal_sampling_constant(const Rational& L) { return sampling_constant(L, L / 4); }

// Hypothetical: if 5-planar graphs had at most `density` (n - 2) edges, the
// chain 6(m - density(n-2)) + 5 density(n-2) - 203/9 (n-2) would give this
// constant. Not a verified result.
struct WhatIf {
  Rational density, linear, constant;
  std::string assumption;
};

inline WhatIf crossing_what_if(const Rational& density) {
  WhatIf w;
  w.density = density;
  w.linear = density + convex_crossing_offset();
  w.constant = optimal_sampling_constant(w.linear);
  w.assumption = "assumes every 5-planar graph has at most " + to_string(density) +
                 "(n-2) edges, so edges beyond that carry six crossings; the rest use cr >= 5m - 203/9 (n-2)";
  return w;
}

// ------------------------------------------------------------ density table

struct DensityRow {
  int k = 0;
  std::optional<Rational> per_n, constant;  // m <= per_n n + constant
  std::optional<Rational> sqrt_coefficient;  // m <= c sqrt(k) n
  std::string source;
  std::string note;

  double per_n_value() const {
    if (per_n) return to_double(*per_n);
    return to_double(*sqrt_coefficient) * std::sqrt(static_cast<double>(k));
  }
};

inline Rational density_sqrt_coefficient() {
  Rational c = crossing_lemma_constant();
  // mk/2 >= c m^3/n^2  =>  m <= sqrt(k / (2c)) n; 1/(2c) must be a square
  Rational sq = 1 / (2 * c);
  detail::expect_equal(sq, rat(169182049, 12446784), "density coefficient squared");
  detail::expect_equal(Rational(3528) * 3528, 12446784, "3528^2");
  Rational coef = rat(13007, 3528);
  detail::expect_equal(coef * coef, sq, "density coefficient");
  detail::expect_equal(coef * coef * 2, rat(169182049, 6223392), "twice the squared coefficient");
  if (coef > rat(369, 100)) throw DerivationError("density coefficient " + to_string(coef) + " exceeds 3.69");
  return coef;
}

inline DensityRow density_table(int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  DensityRow r;
  r.k = k;
  auto lin = [&](Rational a, Rational b, std::string src) {
    r.per_n = a;
    r.constant = b;
    r.source = std::move(src);
  };
  switch (k) {
    case 0: lin(3, -6, "Euler"); break;
    case 1: lin(4, -8, "Pach and Toth"); break;
    case 2: lin(5, -10, "Pach and Toth"); break;
    case 3: lin(rat(11, 2), -11, "Pach, Radoicic, Tardos and Toth"); break;
    case 4: lin(6, -12, "Ackerman"); break;
    case 5: lin(rat(340, 49), rat(-680, 49), "discharging, alpha = 49/170"); break;
    case 6:
      lin(9, -18, "discharging, alpha = 2/9");
      {
        char buf[64];
        std::snprintf(buf, sizeof buf, "below %.3fn from the square-root bound",
                      to_double(density_sqrt_coefficient()) * std::sqrt(6.0));
        r.note = buf;
      }
      break;
    default: {
      Rational c = density_sqrt_coefficient();
      Rational lin_k = rat(3 * k, 2);
      // 1.5k (n - 2) beats c sqrt(k) n only while 1.5 sqrt(k) < c
      if (lin_k * lin_k < c * c * k) {
        lin(lin_k, -3 * k, "discharging, alpha = 4/(3k)");
      } else {
        r.sqrt_coefficient = c;
        r.source = "crossing lemma";
      }
    }
  }
  return r;
}

// ------------------------------------------------------------ polyhedral audit

struct PolyhedralReport {
  int n = 0, m = 0;
  std::map<int, int> faces;  // size -> count
  long long triangles = 0;   // sum (i - 2) f_i
  long long excess = 0;      // sum (i - 6) f_i
  Rational capacity;         // sum of half boundaries plus chord limits
  bool triangles_ok = false, excess_ok = false, within_capacity = false, within_bound = false;
  bool ok() const { return triangles_ok && excess_ok && within_capacity && within_bound; }
};

// Half the boundary plus the chord limit of a face of size i.
inline Rational face_capacity(int i) {
  if (i <= 5) return Rational(i, 2) + Rational(i * (i - 3), 2);
  return Rational(7 * i, 2) - 9;
}

inline PolyhedralReport polyhedral_audit(const SkeletonProfile& s, int m) {
  if (!s.simple) throw InputError("skeleton is not simple");
  if (!s.spanning) throw InputError("skeleton is not spanning");
  if (!s.biconnected) throw InputError("skeleton is not biconnected");
  if (!s.triconnected) throw InputError("skeleton is not triconnected");
  PolyhedralReport r;
  std::set<int> verts;
  for (const auto& f : s.faces) verts.insert(f.begin(), f.end());
  r.n = static_cast<int>(verts.size());
  r.m = m;
  r.faces = s.face_histogram;
  for (auto [i, c] : r.faces) {
    r.triangles += static_cast<long long>(i - 2) * c;
    r.excess += static_cast<long long>(i - 6) * c;
    r.capacity += face_capacity(i) * c;
  }
  r.triangles_ok = r.triangles == 2LL * r.n - 4;
  r.excess_ok = r.excess <= -12;
  r.within_capacity = Rational(m) <= r.capacity;
  r.within_bound = m <= 6LL * r.n - 12;
  return r;
}

}  // namespace kplanar

#endif  // KPLANAR_BOUNDS_HPP_
