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

#ifndef KPLANAR_RATIONAL_HPP_
#define KPLANAR_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kplanar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON field, out-of-range id, bad rational literal.
class InputError : public Error {
 public:
  using Error::Error;
};

inline Rational rat(long long p, long long q = 1) {
  if (q == 0) throw InputError("zero denominator");
  return Rational(BigInt(p), BigInt(q));
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  auto parse_int = [&](std::string_view v) -> BigInt {
    v = trim(v);
    if (v.empty()) throw InputError("empty integer in rational literal");
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) throw InputError("bad rational literal: " + std::string(v));
    for (std::size_t j = i; j < v.size(); ++j)
      if (v[j] < '0' || v[j] > '9') throw InputError("bad rational literal: " + std::string(v));
    return BigInt(std::string(v[0] == '+' ? v.substr(1) : v));
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  BigInt q = parse_int(s.substr(slash + 1));
  if (q == 0) throw InputError("zero denominator in " + std::string(s));
  return Rational(parse_int(s.substr(0, slash)), q);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt floor_div(const Rational& r) {
  BigInt q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline BigInt ceil_div(const Rational& r) { return -floor_div(-r); }

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace kplanar

#endif  // KPLANAR_RATIONAL_HPP_
