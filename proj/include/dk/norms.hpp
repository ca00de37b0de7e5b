#pragma once

// Exact D-, qD- and B_{1/4}-level norms for real node-uniform functions, the
// semicontinuous decomposition f = u - v, and independent cross-check routes
// (eps-chain search, cell closed form, closed-cover maximum).
//
// With tau the stabilization index of the oscillation hierarchy:
//   ||f||_D  = || |f| + osc_tau f ||_inf        ||f||_qD = || osc_tau f ||_inf
// and u = (lambda - osc_tau f + f)/2, v = (lambda - osc_tau f - f)/2 with
// lambda = ||f||_D are nonnegative LSC with f = u - v, ||u+v||_inf = ||f||_D.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dk/oscillation.hpp"
#include "dk/set_calculus.hpp"

namespace dk {

// Model semicontinuity tests on the domain view: USC means the value at a
// node dominates the values at its strict descendants, LSC the reverse.
template <class Num>
bool is_usc_map(const TreeSpace& sp, const NodeSet& dom, const MagMap<Num>& g) {
  for (int x : dom.indices())
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y) && g[y] > g[x]) return false;
  return true;
}

inline bool is_lsc_values(const TreeSpace& sp, const NodeSet& dom,
                          const std::vector<Rational>& v) {
  for (int x : dom.indices())
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y) && v[y] < v[x]) return false;
  return true;
}

inline bool is_usc_values(const TreeSpace& sp, const NodeSet& dom,
                          const std::vector<Rational>& v) {
  for (int x : dom.indices())
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y) && v[y] > v[x]) return false;
  return true;
}

inline Rational qd_norm(const FnR& f) { return full_profile(f).omega_sup(); }

inline Rational d_norm_from_profile(const FnR& f, const OscProfile<Rational>& p) {
  Rational m(0);
  for (int x : f.domain().indices()) m = std::max(m, Rational(rabs(f(x)) + p.omega()[x]));
  return m;
}

inline Rational d_norm(const FnR& f) { return d_norm_from_profile(f, full_profile(f)); }

inline std::pair<Rational, Rational> norm_pair(const FnR& f) {
  auto p = full_profile(f);
  return {d_norm_from_profile(f, p), p.omega_sup()};
}

// f = u - v with u, v nonnegative lower semi-continuous and
// ||u + v||_inf = ||f||_D.
inline std::pair<FnR, FnR> lsc_decomposition(const FnR& f) {
  auto p = full_profile(f);
  Rational lambda = d_norm_from_profile(f, p);
  std::vector<Rational> u(f.space().size(), Rational(0)), v(f.space().size(), Rational(0));
  for (int x : f.domain().indices()) {
    u[x] = (lambda - p.omega()[x] + f(x)) / 2;
    v[x] = (lambda - p.omega()[x] - f(x)) / 2;
  }
  return {FnR(f.space(), std::move(u), f.domain()), FnR(f.space(), std::move(v), f.domain())};
}

// Lower bound for ||f||_D by eps-chains:
//   sup over n >= 0 and delta_i > 0 with os_n(f,(delta_i)) nonempty of
//   sum delta_i + || f | os_n ||_inf.
// Only achieved oscillation levels can improve the sum, so the search over
// those is exact; for node-uniform real f the bound attains ||f||_D.
namespace detail {
inline Rational chain_bound_rec(const FnR& f, const NodeSet& w,
                                std::map<std::string, Rational>& memo) {
  auto it = memo.find(w.key());
  if (it != memo.end()) return it->second;
  Rational best(0);
  for (int x : w.indices()) best = std::max(best, rabs(f(x)));
  auto osc = osc_restricted(f, w);
  std::set<Rational> levels;
  for (int x : w.indices())
    if (osc[x] > 0) levels.insert(osc[x]);
  for (const Rational& v : levels) {
    NodeSet nxt(f.space());
    for (int x : w.indices())
      if (osc[x] >= v) nxt.add(x);
    best = std::max(best, Rational(v + chain_bound_rec(f, nxt, memo)));
  }
  memo.emplace(w.key(), best);
  return best;
}
}  // namespace detail

inline Rational eps_chain_lower_bound(const FnR& f) {
  if (f.domain().empty()) return Rational(0);
  std::map<std::string, Rational> memo;
  return detail::chain_bound_rec(f, f.domain(), memo);
}

// Closed form for a cell: the path space P_n with value a_j on v_j, i.e. the
// function constant on each stratum of the derived-set chain.
inline std::pair<Rational, Rational> cell_norm(const std::vector<Rational>& a) {
  if (a.empty()) throw precondition_error("cell_norm: empty value list");
  Rational qd(0);
  for (size_t i = 1; i < a.size(); ++i) qd += rabs(a[i] - a[i - 1]);
  return {qd + rabs(a.back()), qd};
}

inline FnR make_cell(const TreeSpace& path_space, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != path_space.size())
    throw precondition_error("make_cell: value list does not match the path length");
  std::vector<Rational> v(a.size());
  for (size_t j = 0; j < a.size(); ++j) v[path_space.index_of("v" + std::to_string(j))] = a[j];
  return FnR(path_space, std::move(v));
}

struct NormReport {
  Rational sup_norm;
  Rational d_norm;
  Rational qd_norm;
  int d_index = 0;
  Rational lower_bound_18;  // eps-chain lower bound; equals d_norm here
  Rational b14_lower;       // (sup + ||osc_omega||)/2
  Rational b14_upper;       // sup + 3 ||osc_omega||
  Rational fl_value;        // || |f| + tilde-osc_omega f ||_inf
};

// The B_{1/4} norm of a real node-uniform function coincides with its D-norm
// (every such function is a simple D-function); the report carries the
// sandwich bounds and the || |f| + tilde-osc_omega f ||_inf value so callers
// can assert both.
inline NormReport b14_report(const FnR& f) {
  auto p = full_profile(f);
  NormReport r;
  r.sup_norm = f.sup_norm();
  r.qd_norm = p.omega_sup();
  r.d_norm = d_norm_from_profile(f, p);
  r.d_index = p.d_index;
  r.lower_bound_18 = eps_chain_lower_bound(f);
  r.b14_lower = (r.sup_norm + r.qd_norm) / 2;
  r.b14_upper = r.sup_norm + 3 * r.qd_norm;
  Rational fl(0);
  for (int x : f.domain().indices()) fl = std::max(fl, Rational(rabs(f(x)) + p.tilde_omega()[x]));
  r.fl_value = fl;
  return r;
}

// max_i ||f|W_i||_D over a finite closed cover of the space; equals ||f||_D.
inline Rational closed_cover_norm(const FnR& f, const std::vector<NodeSet>& cover) {
  if (cover.empty()) throw precondition_error("closed_cover_norm: empty cover");
  NodeSet un(f.space());
  for (const NodeSet& w : cover) {
    if (!is_closed(w)) throw precondition_error("closed_cover_norm: cover member not closed");
    un = un | w;
  }
  if (un != NodeSet::all(f.space()))
    throw precondition_error("closed_cover_norm: sets do not cover the space");
  Rational m(0);
  for (const NodeSet& w : cover) m = std::max(m, d_norm(f.restrict_to(w)));
  return m;
}

// Complex layer: || |f| + osc_tau f ||_inf brackets the D-norm within a factor
// of two for complex f, so only an interval is reported, flagged inexact.
struct ApproxNormReport {
  double fl_value = 0;
  double d_lower = 0;
  double d_upper = 0;
  double qd_estimate = 0;
  bool exact = false;
};

inline ApproxNormReport norm_estimate(const FnC& f) {
  auto p = full_profile(f);
  ApproxNormReport r;
  double fl = 0;
  for (int x : f.domain().indices())
    fl = std::max(fl, std::abs(f(x)) + p.omega()[x]);
  r.fl_value = fl;
  r.d_lower = fl / 2;
  r.d_upper = 2 * fl;
  r.qd_estimate = p.omega_sup();
  r.exact = false;
  return r;
}

}  // namespace dk
