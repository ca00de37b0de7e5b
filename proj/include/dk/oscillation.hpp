#pragma once

// The oscillation hierarchy and the index functions built from it.
//
// All limits in the realized space become maxima over strict descendants, and
// lim sups are non-exclusive (the point itself participates). For a function
// with domain view D:
//
//   lower_osc f(x)   = max_{y in sdesc(x) cap D} |f(y) - f(x)|      (0 at view leaves)
//   Ug(x)            = max of g over ({x} + sdesc(x)) cap D         (USC envelope)
//   tilde_{k+1}(x)   = max over y in ({x} + sdesc(x)) cap D of |f(y)-f(x)| + osc_k(y)
//   osc_{k+1}        = U tilde_{k+1}
//
// Levels are monotone and stabilize by the view height; the stabilized level
// realizes osc_omega (= its own pre-envelope sup, which is already USC here).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dk/function.hpp"

namespace dk {

namespace detail {
// Strict descendants filtered by the domain, reused across levels.
inline std::vector<std::vector<int>> domain_descendants(const TreeSpace& sp, const NodeSet& dom) {
  std::vector<std::vector<int>> d(sp.size());
  for (int x : dom.indices())
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y)) d[x].push_back(y);
  return d;
}
}  // namespace detail

template <class Num>
MagMap<Num> lower_osc(const NodeFunction<Num>& f) {
  using T = scalar_traits<Num>;
  const TreeSpace& sp = f.space();
  MagMap<Num> out(sp.size(), T::zero());
  for (int x : f.domain().indices()) {
    typename T::mag m = T::zero();
    for (int y : sp.strict_descendants(x))
      if (f.domain().contains(y)) m = std::max(m, T::dist(f(y), f(x)));
    out[x] = m;
  }
  return out;
}

template <class Num>
MagMap<Num> upper_env(const TreeSpace& sp, const NodeSet& dom, const MagMap<Num>& g) {
  MagMap<Num> out(sp.size(), scalar_traits<Num>::zero());
  for (int x : dom.indices()) {
    auto m = g[x];
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y)) m = std::max(m, g[y]);
    out[x] = m;
  }
  return out;
}

template <class Num>
MagMap<Num> lower_env(const TreeSpace& sp, const NodeSet& dom, const MagMap<Num>& g) {
  MagMap<Num> out(sp.size(), scalar_traits<Num>::zero());
  for (int x : dom.indices()) {
    auto m = g[x];
    for (int y : sp.strict_descendants(x))
      if (dom.contains(y)) m = std::min(m, g[y]);
    out[x] = m;
  }
  return out;
}

template <class Num>
struct OscProfile {
  const TreeSpace* space = nullptr;
  NodeSet domain;
  // levels[0..d_index]; every later level equals levels[d_index]
  std::vector<MagMap<Num>> levels;
  int d_index = 0;

  const MagMap<Num>& level(int k) const {
    return levels[static_cast<size_t>(std::min<long>(k, d_index))];
  }
  const MagMap<Num>& omega() const { return levels[d_index]; }
  // pre-envelope sup of the finite levels; equals omega() once levels stabilize
  const MagMap<Num>& tilde_omega() const { return levels[d_index]; }

  typename scalar_traits<Num>::mag omega_sup() const {
    auto m = scalar_traits<Num>::zero();
    for (int x : domain.indices()) m = std::max(m, omega()[x]);
    return m;
  }
};

template <class Num>
OscProfile<Num> full_profile(const NodeFunction<Num>& f) {
  using T = scalar_traits<Num>;
  const TreeSpace& sp = f.space();
  const NodeSet& dom = f.domain();
  auto dd = detail::domain_descendants(sp, dom);

  OscProfile<Num> p{&sp, dom, {}, 0};
  p.levels.push_back(MagMap<Num>(sp.size(), T::zero()));
  const int limit = sp.height() + 2;  // stabilization is reached by the view height
  for (int k = 0; k < limit; ++k) {
    const MagMap<Num>& prev = p.levels.back();
    MagMap<Num> tilde(sp.size(), T::zero());
    for (int x : dom.indices()) {
      auto m = prev[x];  // the y = x term of the non-exclusive lim sup
      for (int y : dd[x]) m = std::max(m, static_cast<typename T::mag>(T::dist(f(y), f(x)) + prev[y]));
      tilde[x] = m;
    }
    MagMap<Num> next = upper_env<Num>(sp, dom, tilde);
    bool same = true;
    for (int x : dom.indices())
      if (!T::eq(next[x], prev[x])) {
        same = false;
        break;
      }
    if (same) {
      p.d_index = k;
      return p;
    }
    p.levels.push_back(std::move(next));
  }
  throw structural_error("oscillation hierarchy failed to stabilize");  // unreachable
}

template <class Num>
MagMap<Num> osc_n(const NodeFunction<Num>& f, int n) {
  if (n < 0) throw precondition_error("osc_n: level must be >= 0");
  return full_profile(f).level(n);
}

// osc of the restriction f|W (level 1), the building block of the os chains.
template <class Num>
MagMap<Num> osc_restricted(const NodeFunction<Num>& f, const NodeSet& W) {
  auto g = f.restrict_to(W);
  auto low = lower_osc(g);
  return upper_env<Num>(f.space(), g.domain(), low);
}

template <class Num>
NodeSet os_step(const NodeFunction<Num>& f, const NodeSet& W,
                const typename scalar_traits<Num>::mag& eps) {
  using T = scalar_traits<Num>;
  auto osc = osc_restricted(f, W);
  NodeSet out(f.space());
  for (int x : W.indices())
    if (T::ge(osc[x], eps)) out.add(x);
  return out;
}

// os_1 .. os_m for the supplied eps sequence; os_0 is the domain. Each entry
// is closed in its predecessor.
template <class Num>
std::vector<NodeSet> os_sets(const NodeFunction<Num>& f,
                             const std::vector<typename scalar_traits<Num>::mag>& eps_seq) {
  std::vector<NodeSet> out;
  NodeSet w = f.domain();
  for (const auto& e : eps_seq) {
    w = os_step(f, w, e);
    out.push_back(w);
  }
  return out;
}

// Largest n with os_n(f, eps) nonempty, constant eps > 0.
template <class Num>
int baire_index(const NodeFunction<Num>& f, const typename scalar_traits<Num>::mag& eps) {
  using T = scalar_traits<Num>;
  if (!(eps > T::zero())) throw precondition_error("baire_index: eps must be positive");
  NodeSet w = f.domain();
  int n = 0;
  while (true) {
    NodeSet next = os_step(f, w, eps);
    if (next.empty()) return n;
    w = next;
    ++n;
  }
}

// All oscillation levels that can appear along constant-eps chains: collect
// the positive values of osc(f|W) over every reachable restriction W. These
// are the breakpoints of eps -> i_B(f, eps); the values are finite sums of
// pairwise value gaps, so the collection terminates.
template <class Num>
std::vector<typename scalar_traits<Num>::mag> baire_breakpoints(const NodeFunction<Num>& f) {
  using mag = typename scalar_traits<Num>::mag;
  std::set<mag> values;
  std::unordered_set<std::string> seen;
  std::vector<NodeSet> work{f.domain()};
  seen.insert(f.domain().key());
  while (!work.empty()) {
    NodeSet w = work.back();
    work.pop_back();
    if (w.empty()) continue;
    auto osc = osc_restricted(f, w);
    std::set<mag> local;
    for (int x : w.indices())
      if (osc[x] > scalar_traits<Num>::zero()) local.insert(osc[x]);
    for (const auto& v : local) {
      values.insert(v);
      NodeSet nxt(f.space());
      for (int x : w.indices())
        if (scalar_traits<Num>::ge(osc[x], v)) nxt.add(x);
      if (seen.insert(nxt.key()).second) work.push_back(nxt);
    }
  }
  return std::vector<mag>(values.begin(), values.end());
}

// eps-free Baire index: the maximum of i_B(f, eps) over the breakpoint set
// (the step function is antitone in eps, so this is the sup over all eps > 0).
template <class Num>
int baire_index(const NodeFunction<Num>& f) {
  int best = 0;
  for (const auto& e : baire_breakpoints(f)) best = std::max(best, baire_index(f, e));
  return best;
}

// --- characterization of osc_n by eps-chains ---------------------------------
//
// osc_n f(x) = sup { sum eps_i : 1 <= k <= n, eps_i > 0, x in os_k(f,(eps_i)) }.
// The sup is over real sequences, but only the achieved oscillation levels of
// the successive restrictions can change the chain, so searching those gives
// the exact value. Distinct from the level recursion above; the two are
// asserted equal in the test suite.

namespace detail {
template <class Num>
typename scalar_traits<Num>::mag chain_search(
    const NodeFunction<Num>& f, const NodeSet& w, int x, int depth_left,
    std::map<std::pair<std::string, int>, typename scalar_traits<Num>::mag>& memo) {
  using T = scalar_traits<Num>;
  using mag = typename T::mag;
  if (depth_left == 0) return T::zero();
  auto key = std::make_pair(w.key(), depth_left);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  mag best = T::zero();
  auto osc = osc_restricted(f, w);
  std::set<mag> levels;
  for (int y : w.indices())
    if (osc[y] > T::zero()) levels.insert(osc[y]);
  for (const auto& v : levels) {
    if (!T::ge(osc[x], v)) continue;  // chains must keep x
    NodeSet nxt(f.space());
    for (int y : w.indices())
      if (T::ge(osc[y], v)) nxt.add(y);
    mag cand = v + chain_search(f, nxt, x, depth_left - 1, memo);
    best = std::max(best, cand);
  }
  memo.emplace(key, best);
  return best;
}
}  // namespace detail

template <class Num>
typename scalar_traits<Num>::mag osc_by_chain_search(const NodeFunction<Num>& f, int n, int x) {
  if (!f.domain().contains(x)) throw precondition_error("osc_by_chain_search: node outside domain");
  if (n < 0) throw precondition_error("osc_by_chain_search: level must be >= 0");
  std::map<std::pair<std::string, int>, typename scalar_traits<Num>::mag> memo;
  return detail::chain_search(f, f.domain(), x, n, memo);
}

// --- stabilized-level (omega) chains -----------------------------------------

// Iterated level sets of the stabilized oscillation on successive
// restrictions: L_{j+1} = { x in L_j : osc_omega(f|L_j)(x) >= eps }.
// Returns the nonempty sets and the index (number of nonempty iterates).
template <class Num>
std::pair<std::vector<NodeSet>, int> omega_level_sets(
    const NodeFunction<Num>& f, const typename scalar_traits<Num>::mag& eps) {
  using T = scalar_traits<Num>;
  if (!(eps > T::zero())) throw precondition_error("omega_level_sets: eps must be positive");
  std::vector<NodeSet> out;
  NodeSet L = f.domain();
  while (true) {
    auto prof = full_profile(f.restrict_to(L));
    NodeSet nxt(f.space());
    for (int x : L.indices())
      if (T::ge(prof.omega()[x], eps)) nxt.add(x);
    if (nxt.empty()) break;
    out.push_back(nxt);
    L = nxt;
  }
  return {out, static_cast<int>(out.size())};
}

// Same chain through the local quotient seminorm: the level sets use, at each
// x, the qD-norm of the restriction to the smallest open neighborhood of x
// inside the current carrier (its subtree within the view). Equal to the
// omega chain pointwise; kept as an independent route.
template <class Num>
int qd_local_index(const NodeFunction<Num>& f, const typename scalar_traits<Num>::mag& eps) {
  using T = scalar_traits<Num>;
  if (!(eps > T::zero())) throw precondition_error("qd_local_index: eps must be positive");
  const TreeSpace& sp = f.space();
  NodeSet L = f.domain();
  int n = 0;
  while (true) {
    NodeSet nxt(sp);
    for (int x : L.indices()) {
      NodeSet sub(sp);
      sub.add(x);
      for (int y : sp.strict_descendants(x))
        if (L.contains(y)) sub.add(y);
      auto prof = full_profile(f.restrict_to(sub));
      if (T::ge(prof.omega_sup(), eps)) nxt.add(x);
    }
    if (nxt.empty()) return n;
    L = nxt;
    ++n;
  }
}

}  // namespace dk
