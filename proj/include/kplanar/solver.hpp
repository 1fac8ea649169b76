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

#ifndef KPLANAR_SOLVER_HPP_
#define KPLANAR_SOLVER_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/rational.hpp"

namespace kplanar::opt {

enum class Sense { kLe, kEq, kGe };

struct Term {
  int var = 0;
  Rational coef;
};

struct Linear {
  std::vector<Term> terms;
  Sense sense = Sense::kLe;
  Rational rhs;
  std::string name;
};

// if value(indicator) >= 1 then body holds
struct Conditional {
  int indicator = 0;
  Linear body;
};

struct Variable {
  std::string name;
  long long lb = 0, ub = 1;
};

// Bounded integer program, maximized.
struct BinaryProgram {
  std::vector<Variable> vars;
  std::vector<Linear> constraints;
  std::vector<Conditional> conditionals;
  std::vector<Term> objective;
  Rational objective_constant;

  int add_var(std::string name, long long lb, long long ub) {
    if (lb > ub) throw InputError("variable " + name + " has empty domain");
    vars.push_back({std::move(name), lb, ub});
    return static_cast<int>(vars.size()) - 1;
  }
  void add(Linear l) { constraints.push_back(std::move(l)); }
  void add_if(int indicator, Linear l) { conditionals.push_back({indicator, std::move(l)}); }

  static Rational activity(const Linear& l, const std::vector<long long>& x) {
    Rational s;
    for (const auto& t : l.terms) s += t.coef * x[t.var];
    return s;
  }
  static bool holds(const Linear& l, const std::vector<long long>& x) {
    Rational a = activity(l, x);
    switch (l.sense) {
      case Sense::kLe: return a <= l.rhs;
      case Sense::kGe: return a >= l.rhs;
      default: return a == l.rhs;
    }
  }
  Rational evaluate(const std::vector<long long>& x) const {
    Rational s = objective_constant;
    for (const auto& t : objective) s += t.coef * x[t.var];
    return s;
  }
  // Direct substitution check; `why` names the first violated item.
  bool feasible(const std::vector<long long>& x, std::string* why = nullptr) const {
    auto fail = [&](const std::string& s) {
      if (why) *why = s;
      return false;
    };
    if (x.size() != vars.size()) return fail("assignment size");
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (x[i] < vars[i].lb || x[i] > vars[i].ub) return fail("bounds of " + vars[i].name);
    for (const auto& c : constraints)
      if (!holds(c, x)) return fail("constraint " + c.name);
    for (const auto& c : conditionals)
      if (x[c.indicator] >= 1 && !holds(c.body, x)) return fail("conditional " + c.body.name);
    return true;
  }
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, long long nodes) : Error(what), nodes_(nodes) {}
  long long nodes() const { return nodes_; }

 private:
  long long nodes_;
};

struct SolveOptions {
  long long node_budget = 4'000'000'000LL;
};

struct SolveResult {
  Rational optimum;
  std::vector<long long> values;
  long long nodes = 0;
};

namespace detail {

struct Row {
  std::vector<std::pair<int, long long>> terms;  // sum <= rhs
  long long rhs = 0;
  int indicator = -1;  // -1: always active
};

inline long long to_ll(const BigInt& b) {
  if (b > std::numeric_limits<long long>::max() / 4 || b < std::numeric_limits<long long>::min() / 4)
    throw InputError("coefficient too large for the solver");
  return b.convert_to<long long>();
}

inline void scale_rows(const Linear& l, int indicator, std::vector<Row>& out) {
  BigInt L = den(l.rhs);
  for (const auto& t : l.terms) L = boost::multiprecision::lcm(L, den(t.coef));
  Row r;
  r.indicator = indicator;
  std::vector<std::pair<int, long long>> terms;
  for (const auto& t : l.terms) {
    if (t.coef == 0) continue;
    terms.emplace_back(t.var, to_ll(num(t.coef * L)));
  }
  // merge repeated variables
  std::sort(terms.begin(), terms.end());
  for (const auto& [v, a] : terms) {
    if (!r.terms.empty() && r.terms.back().first == v) r.terms.back().second += a;
    else r.terms.emplace_back(v, a);
  }
  long long b = to_ll(num(l.rhs * L));
  if (l.sense != Sense::kGe) {
    r.rhs = b;
    out.push_back(r);
  }
  if (l.sense != Sense::kLe) {
    Row g = r;
    for (auto& [v, a] : g.terms) a = -a;
    g.rhs = -b;
    out.push_back(g);
  }
}

inline long long floor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

class Search {
 public:
  Search(const BinaryProgram& bp, const SolveOptions& opt) : bp_(bp), opt_(opt) {
    const int n = static_cast<int>(bp.vars.size());
    lo_.resize(n);
    hi_.resize(n);
    for (int i = 0; i < n; ++i) lo_[i] = bp.vars[i].lb, hi_[i] = bp.vars[i].ub;
    for (const auto& c : bp.constraints) scale_rows(c, -1, rows_);
    for (const auto& c : bp.conditionals) {
      if (c.indicator < 0 || c.indicator >= n) throw InputError("conditional indicator out of range");
      scale_rows(c.body, c.indicator, rows_);
    }
    var_rows_.assign(n, {});
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      for (auto [v, a] : rows_[r].terms) var_rows_[v].push_back(r);
      if (rows_[r].indicator >= 0) var_rows_[rows_[r].indicator].push_back(r);
    }
    // objective scaled to integers
    BigInt L = 1;
    for (const auto& t : bp.objective) L = boost::multiprecision::lcm(L, den(t.coef));
    obj_scale_ = Rational(L);
    obj_.assign(n, 0);
    for (const auto& t : bp.objective) obj_[t.var] += to_ll(num(t.coef * L));
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return obj_[a] > obj_[b]; });
    // disjoint one-hot groups: sum of binaries == 1
    group_of_.assign(n, -1);
    for (const auto& c : bp.constraints) {
      if (c.sense != Sense::kEq || c.rhs != 1) continue;
      bool ok = !c.terms.empty();
      for (const auto& t : c.terms)
        ok = ok && t.coef == 1 && bp.vars[t.var].lb == 0 && bp.vars[t.var].ub == 1 && group_of_[t.var] == -1;
      if (!ok) continue;
      std::vector<int> g;
      for (const auto& t : c.terms) g.push_back(t.var);
      std::sort(g.begin(), g.end());
      if (std::adjacent_find(g.begin(), g.end()) != g.end()) continue;
      for (int v : g) group_of_[v] = static_cast<int>(groups_.size());
      groups_.push_back(g);
    }
    // big-M relaxations of conditionals with binary indicators, always valid
    for (const auto& r : rows_) {
      if (r.indicator < 0 || bp.vars[r.indicator].lb != 0 || bp.vars[r.indicator].ub != 1) continue;
      long long maxact = 0;
      for (auto [v, a] : r.terms) maxact += a > 0 ? a * hi_[v] : a * lo_[v];
      if (maxact <= r.rhs) continue;
      Row relaxed;
      relaxed.terms = r.terms;
      bool merged = false;
      for (auto& [v, a] : relaxed.terms)
        if (v == r.indicator) a += maxact - r.rhs, merged = true;
      if (!merged) relaxed.terms.emplace_back(r.indicator, maxact - r.rhs);
      std::erase_if(relaxed.terms, [](const auto& t) { return t.second == 0; });
      relaxed.rhs = maxact;
      relaxed_.push_back(relaxed);
    }
  }

  SolveResult run() {
    dfs();
    if (!have_) throw InfeasibleError("model is infeasible");
    SolveResult res;
    res.values = best_;
    res.optimum = bp_.evaluate(best_);
    res.nodes = nodes_;
    std::string why;
    if (!bp_.feasible(best_, &why)) throw Error("solver produced an infeasible witness: " + why);
    return res;
  }

 private:
  struct Change { int var; long long lo, hi; };

  bool set_bounds(int v, long long lo, long long hi) {
    if (lo <= lo_[v] && hi >= hi_[v]) return true;
    trail_.push_back({v, lo_[v], hi_[v]});
    lo_[v] = std::max(lo_[v], lo);
    hi_[v] = std::min(hi_[v], hi);
    if (lo_[v] > hi_[v]) return false;
    for (int r : var_rows_[v]) queue_row(r);
    return true;
  }
  void queue_row(int r) {
    if (in_queue_.size() < rows_.size()) in_queue_.assign(rows_.size(), 0);
    if (!in_queue_[r]) in_queue_[r] = 1, queue_.push_back(r);
  }
  long long min_activity(const Row& r) const {
    long long s = 0;
    for (auto [v, a] : r.terms) s += a > 0 ? a * lo_[v] : a * hi_[v];
    return s;
  }
  bool propagate_row(int ri) {
    const Row& r = rows_[ri];
    long long minact = min_activity(r);
    if (r.indicator >= 0 && lo_[r.indicator] < 1) {
      if (minact > r.rhs && hi_[r.indicator] >= 1) return set_bounds(r.indicator, lo_[r.indicator], 0);
      return true;
    }
    if (minact > r.rhs) return false;
    long long slack = r.rhs - minact;
    for (auto [v, a] : r.terms) {
      if (a > 0) {
        long long cap = lo_[v] + floor_div(slack, a);
        if (cap < hi_[v] && !set_bounds(v, lo_[v], cap)) return false;
      } else {
        long long cap = hi_[v] - floor_div(slack, -a);
        if (cap > lo_[v] && !set_bounds(v, cap, hi_[v])) return false;
      }
    }
    return true;
  }
  bool propagate() {
    while (!queue_.empty()) {
      int r = queue_.back();
      queue_.pop_back();
      in_queue_[r] = 0;
      if (!propagate_row(r)) {
        for (int q : queue_) in_queue_[q] = 0;
        queue_.clear();
        return false;
      }
    }
    return true;
  }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto c = trail_.back();
      trail_.pop_back();
      lo_[c.var] = c.lo;
      hi_[c.var] = c.hi;
    }
  }

  // Upper bound on the scaled objective under current domains.
  long long bound() {
    const int n = static_cast<int>(lo_.size());
    // base: each variable at its better bound; positive gains may be capped
    // by packing rows below
    long long base = 0;
    std::vector<long long> gain(n, 0);
    for (int v = 0; v < n; ++v) {
      if (group_of_[v] >= 0) continue;
      if (obj_[v] > 0) {
        base += obj_[v] * lo_[v];
        gain[v] = obj_[v] * (hi_[v] - lo_[v]);
      } else {
        base += obj_[v] * lo_[v];
      }
    }
    for (const auto& g : groups_) {
      long long best = std::numeric_limits<long long>::min();
      for (int v : g)
        if (hi_[v] >= 1) best = std::max(best, obj_[v]);
      for (int v : g)
        if (lo_[v] >= 1) best = obj_[v];
      base += best == std::numeric_limits<long long>::min() ? 0 : best;
    }
    // assign every gaining variable to its tightest active packing row
    struct Cand { const Row* row; long long slack; };
    std::vector<Cand> active;
    auto consider = [&](const Row& r) {
      if (r.indicator >= 0 && lo_[r.indicator] < 1) return;
      long long minact = min_activity(r);
      active.push_back({&r, r.rhs - minact});
    };
    for (const auto& r : rows_) consider(r);
    for (const auto& r : relaxed_) consider(r);
    std::vector<int> home(n, -1);
    std::vector<long long> home_weight(n, 0);
    for (int k = 0; k < static_cast<int>(active.size()); ++k) {
      for (auto [v, a] : active[k].row->terms) {
        if (a <= 0 || gain[v] == 0) continue;
        // tightness: slack per unit weight
        long long s = active[k].slack;
        if (home[v] == -1 || static_cast<__int128>(s) * home_weight[v] <
                                 static_cast<__int128>(active[home[v]].slack) * a) {
          home[v] = k;
          home_weight[v] = a;
        }
      }
    }
    std::vector<std::vector<int>> members(active.size());
    long long free_gain = 0;
    for (int v = 0; v < n; ++v) {
      if (gain[v] == 0) continue;
      if (home[v] == -1) free_gain += gain[v];
      else members[home[v]].push_back(v);
    }
    // per row, the members' integer gain is at most the floor of the
    // fractional knapsack value
    long long whole = 0;
    for (int k = 0; k < static_cast<int>(active.size()); ++k) {
      auto& mem = members[k];
      if (mem.empty()) continue;
      long long cap = active[k].slack;
      std::vector<std::pair<int, long long>> items;  // var, weight
      for (auto [w, a] : active[k].row->terms)
        if (home[w] == k && a > 0) items.emplace_back(w, a);
      std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
        return static_cast<__int128>(obj_[x.first]) * y.second > static_cast<__int128>(obj_[y.first]) * x.second;
      });
      long long row_gain = 0;
      for (auto [v, a] : items) {
        long long units = hi_[v] - lo_[v];
        long long take = std::min(units, cap / a);
        row_gain += take * obj_[v];
        cap -= take * a;
        if (take < units) {
          row_gain += obj_[v] * cap / a;
          break;
        }
      }
      whole += row_gain;
    }
    return base + free_gain + whole;
  }

  void dfs() {
    if (++nodes_ > opt_.node_budget)
      throw BudgetExceededError("search node budget of " + std::to_string(opt_.node_budget) + " exceeded", nodes_);
    if (!propagate()) return;
    if (have_ && bound() <= best_value_) return;
    int pick = -1;
    for (int v : order_)
      if (lo_[v] < hi_[v]) {
        pick = v;
        break;
      }
    if (pick == -1) {
      long long val = 0;
      for (std::size_t v = 0; v < lo_.size(); ++v) val += obj_[v] * lo_[v];
      if (!have_ || val > best_value_) {
        have_ = true;
        best_value_ = val;
        best_ = lo_;
      }
      return;
    }
    std::size_t mark = trail_.size();
    long long top = hi_[pick];
    if (set_bounds(pick, top, top)) dfs();
    else { for (int q : queue_) in_queue_[q] = 0; queue_.clear(); }
    undo(mark);
    if (set_bounds(pick, lo_[pick], top - 1)) dfs();
    else { for (int q : queue_) in_queue_[q] = 0; queue_.clear(); }
    undo(mark);
  }

  const BinaryProgram& bp_;
  SolveOptions opt_;
  std::vector<long long> lo_, hi_;
  std::vector<Row> rows_, relaxed_;
  std::vector<std::vector<int>> var_rows_;
  std::vector<long long> obj_;
  Rational obj_scale_;
  std::vector<int> order_;
  std::vector<int> group_of_;
  std::vector<std::vector<int>> groups_;
  std::vector<Change> trail_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;
  long long nodes_ = 0;
  bool have_ = false;
  long long best_value_ = 0;
  std::vector<long long> best_;

 public:
  bool initial_propagate() {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) queue_row(r);
    return true;
  }
};

}  // namespace detail

// Exact depth-first branch and bound. Deterministic: the reported witness is
// the first optimal assignment found under the fixed branching order.
inline SolveResult solve(const BinaryProgram& bp, const SolveOptions& opt = {}) {
  for (const auto& v : bp.vars)
    if (v.lb > v.ub) throw InfeasibleError("variable " + v.name + " has empty domain");
  detail::Search s(bp, opt);
  s.initial_propagate();
  return s.run();
}

}  // namespace kplanar::opt

#endif  // KPLANAR_SOLVER_HPP_
