#pragma once

// Independent brute-force re-computations used by the test and acceptance
// suites. Nothing in production calls these, and they deliberately share no
// recursion code with the production modules they double-check.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "dk/function.hpp"
#include "dk/space.hpp"

namespace dk {
namespace oracles {

// Definition-level evaluation of osc_n: unfolding the recurrence gives
//   osc_n f(x) = max over weakly descending chains
//                x >= z_1 >= y_1 >= z_2 >= y_2 >= ... >= z_n >= y_n
//                of sum |f(y_i) - f(z_i)|,
// where a >= b means b = a or b is a strict descendant of a, all nodes inside
// the domain. Enumerated directly, with no level maps or envelopes.
namespace detail {
template <class Num>
void chains(const NodeFunction<Num>& f, const std::vector<std::vector<int>>& down, int cur,
            int pairs_left, typename scalar_traits<Num>::mag acc,
            typename scalar_traits<Num>::mag& best) {
  using T = scalar_traits<Num>;
  if (acc > best) best = acc;
  if (pairs_left == 0) return;
  auto each = [&](int from, auto&& body) {
    body(from);
    for (int y : down[from]) body(y);
  };
  each(cur, [&](int z) {
    each(z, [&](int y) {
      chains(f, down, y, pairs_left - 1, static_cast<typename T::mag>(acc + T::dist(f(y), f(z))),
             best);
    });
  });
}
}  // namespace detail

template <class Num>
MagMap<Num> osc_by_definition(const NodeFunction<Num>& f, int n) {
  using T = scalar_traits<Num>;
  const TreeSpace& sp = f.space();
  std::vector<std::vector<int>> down(sp.size());
  for (int x : f.domain().indices())
    for (int y : sp.strict_descendants(x))
      if (f.domain().contains(y)) down[x].push_back(y);
  MagMap<Num> out(sp.size(), T::zero());
  for (int x : f.domain().indices()) {
    typename T::mag best = T::zero();
    detail::chains(f, down, x, n, T::zero(), best);
    out[x] = best;
  }
  return out;
}

// Minimum number of disjoint DCS blocks partitioning A, by enumerating all
// set partitions (restricted growth strings). Exponential; guarded.
inline int exhaustive_dcs_min_parts(const NodeSet& A, int max_elems = 10) {
  std::vector<int> elems = A.indices();
  const int m = static_cast<int>(elems.size());
  if (m == 0) return 0;
  if (m > max_elems) throw precondition_error("exhaustive_dcs_min_parts: set too large");
  const TreeSpace& sp = A.space();

  auto is_dcs_block = [&](const std::vector<int>& members) {
    NodeSet s = NodeSet::of_indices(sp, members);
    return !closure(closure(s) - s).intersects(s);
  };

  std::vector<int> assign(m, 0);
  int best = m + 1;
  // restricted growth: assign[0] = 0; assign[i] <= 1 + max(assign[0..i-1])
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (blocks >= best) return;
    if (i == m) {
      std::vector<std::vector<int>> parts(blocks);
      for (int j = 0; j < m; ++j) parts[assign[j]].push_back(elems[j]);
      for (const auto& p : parts)
        if (!is_dcs_block(p)) return;
      best = std::min(best, blocks);
      return;
    }
    for (int b = 0; b <= blocks && b < best; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

// sup of sum eps_i over positive sequences whose oscillation-set chain stays
// nonempty; realizes ||osc_omega f||_inf. Plain depth-first search over the
// achieved oscillation levels of successive restrictions, no memoization.
template <class Num>
typename scalar_traits<Num>::mag eps_sequence_search(const NodeFunction<Num>& f) {
  using T = scalar_traits<Num>;
  using mag = typename T::mag;
  const TreeSpace& sp = f.space();

  // level-1 oscillation of f on the carrier w, written out locally
  auto osc_on = [&](const NodeSet& w) {
    MagMap<Num> low(sp.size(), T::zero());
    for (int x : w.indices())
      for (int y : sp.strict_descendants(x))
        if (w.contains(y)) low[x] = std::max(low[x], T::dist(f(y), f(x)));
    MagMap<Num> env(sp.size(), T::zero());
    for (int x : w.indices()) {
      env[x] = low[x];
      for (int y : sp.strict_descendants(x))
        if (w.contains(y)) env[x] = std::max(env[x], low[y]);
    }
    return env;
  };

  mag best = T::zero();
  std::function<void(const NodeSet&, mag)> rec = [&](const NodeSet& w, mag acc) {
    if (acc > best) best = acc;
    auto osc = osc_on(w);
    std::set<mag> levels;
    for (int x : w.indices())
      if (osc[x] > T::zero()) levels.insert(osc[x]);
    for (const mag& v : levels) {
      NodeSet nxt(sp);
      for (int x : w.indices())
        if (T::ge(osc[x], v)) nxt.add(x);
      rec(nxt, static_cast<mag>(acc + v));
    }
  };
  rec(f.domain(), T::zero());
  return best;
}

// Locally-closed test by exhaustive search: S is closed cap open iff some
// descendant-closed O satisfies cl(S) cap O = S. Searches all opens.
inline bool exhaustive_is_dcs(const NodeSet& S, int budget = 12) {
  const TreeSpace& sp = S.space();
  const int n = sp.size();
  if (n > budget) throw precondition_error("exhaustive_is_dcs: space too large");
  NodeSet cl = closure(S);
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    NodeSet o(sp);
    for (int i = 0; i < n; ++i)
      if (mask & (uint32_t{1} << i)) o.add(i);
    if (!is_open(o)) continue;
    if ((cl & o) == S) return true;
  }
  return false;
}

}  // namespace oracles
}  // namespace dk
