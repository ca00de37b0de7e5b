#pragma once

// Iterated boundaries, the set index i(A), exact D-/qD-norms of indicator
// functions, and optimal decompositions into disjoint differences of closed
// sets (DCS parts).

#include <optional>
#include <utility>
#include <vector>

#include "dk/rational.hpp"
#include "dk/space.hpp"

namespace dk {

// tower[j] = j-th boundary of A, starting from tower[0] = K, ending with the
// first empty entry. index = largest j with tower[j] nonempty.
struct BoundaryTower {
  std::vector<NodeSet> tower;
  int index = 0;
  bool meets_top = false;  // A meets the top nonempty boundary
};

inline BoundaryTower boundary_tower(const NodeSet& A) {
  const TreeSpace& sp = A.space();
  BoundaryTower t;
  t.tower.push_back(NodeSet::all(sp));
  while (!t.tower.back().empty()) {
    t.tower.push_back(boundary_rel(A, t.tower.back()));
  }
  t.index = static_cast<int>(t.tower.size()) - 2;
  t.meets_top = A.intersects(t.tower[t.index]);
  return t;
}

inline int set_index(const NodeSet& A) { return boundary_tower(A).index; }

inline SetClassification classify_set(const NodeSet& S) {
  const TreeSpace& sp = S.space();
  SetClassification c(sp);
  c.is_closed = is_closed(S);
  c.is_open = is_open(S);
  NodeSet cl = closure(S);
  c.is_dcs = !closure(cl - S).intersects(S);
  if (c.is_dcs) {
    c.has_canonical = true;
    c.canonical_closed = cl;
    c.canonical_boundary = boundary_rel(S, cl);
  }
  c.index = boundary_tower(S).index;
  return c;
}

// Exact norms of the indicator of A: ||chi_A||_D is n or n+1 according to
// whether A misses or meets its top boundary, and ||chi_A||_qD = n, n = i(A).
inline std::pair<Rational, Rational> chi_norm(const NodeSet& A) {
  BoundaryTower t = boundary_tower(A);
  Rational d = t.meets_top ? Rational(t.index + 1) : Rational(t.index);
  return {d, Rational(t.index)};
}

// One DCS part together with a (closed, open) witness pair whose intersection
// is the part. Parts designated open carry the witness (K, part).
struct DcsDecomposition {
  std::vector<NodeSet> parts;
  std::vector<std::pair<NodeSet, NodeSet>> certificates;
  int count = 0;
};

namespace detail {
inline std::pair<NodeSet, NodeSet> dcs_certificate(const NodeSet& W) {
  NodeSet cl = closure(W);
  NodeSet b = boundary_rel(W, cl);
  return {cl, b.complement()};
}
}  // namespace detail

// Decomposition of A into k pairwise disjoint DCS parts with k optimal:
// k = floor((n+1)/2) when A misses its top boundary, floor(n/2)+1 otherwise.
// The part layout is fixed by parity so output is deterministic:
//   * misses, n even:  W_i = A cap (d^{2i}A - d^{2i+2}A), 0 <= i < n/2
//   * misses, n odd:   W_0 = A - d^1 A (open), W_i = A cap (d^{2i-1}A - d^{2i+1}A)
//   * meets,  n even:  W_0 = A - d^1 A (open), W_i = A cap (d^{2i-1}A - d^{2i+1}A)
//   * meets,  n odd:   W_i = A cap (d^{2i}A - d^{2i+2}A), 0 <= i < (n+1)/2
inline DcsDecomposition dcs_decompose(const NodeSet& A) {
  const TreeSpace& sp = A.space();
  BoundaryTower t = boundary_tower(A);
  const int n = t.index;
  auto bd = [&](int j) {  // d^j A, empty beyond the computed tower
    if (j < static_cast<int>(t.tower.size())) return t.tower[j];
    return NodeSet(sp);
  };

  DcsDecomposition out;
  const bool meets = t.meets_top;
  const bool even = (n % 2 == 0);
  int k = meets ? (n / 2 + 1) : ((n + 1) / 2);
  const bool leading_open_part = (!meets && !even) || (meets && even);

  if (k == 0) {
    out.count = 0;
    return out;  // A empty, no parts
  }
  if (leading_open_part) {
    NodeSet w0 = A - bd(1);
    out.parts.push_back(w0);
    out.certificates.emplace_back(NodeSet::all(sp), w0);
    for (int i = 1; i < k; ++i) {
      NodeSet wi = A & (bd(2 * i - 1) - bd(2 * i + 1));
      out.parts.push_back(wi);
      out.certificates.push_back(detail::dcs_certificate(wi));
    }
  } else {
    for (int i = 0; i < k; ++i) {
      NodeSet wi = A & (bd(2 * i) - bd(2 * i + 2));
      out.parts.push_back(wi);
      out.certificates.push_back(detail::dcs_certificate(wi));
    }
  }
  out.count = k;
  return out;
}

// True minimum number of pairwise disjoint DCS parts with union A, by dynamic
// programming over subsets of A. Guarded: refuses on spaces above `budget`
// nodes, since the subset lattice grows exponentially.
inline int min_dcs_count(const NodeSet& A, int budget = 12) {
  const TreeSpace& sp = A.space();
  if (sp.size() > budget)
    throw precondition_error("min_dcs_count: space exceeds the exhaustive-search budget");
  std::vector<int> elems = A.indices();
  const int m = static_cast<int>(elems.size());
  if (m == 0) return 0;
  const uint32_t full = (m >= 31) ? 0 : (uint32_t{1} << m) - 1;
  if (m >= 31) throw precondition_error("min_dcs_count: set too large");

  auto to_set = [&](uint32_t mask) {
    NodeSet s(sp);
    for (int i = 0; i < m; ++i)
      if (mask & (uint32_t{1} << i)) s.add(elems[i]);
    return s;
  };
  std::vector<uint8_t> dcs(full + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    NodeSet s = to_set(mask);
    dcs[mask] = !closure(closure(s) - s).intersects(s) ? 1 : 0;
  }
  const int INF = m + 1;
  std::vector<int> dp(full + 1, INF);
  dp[0] = 0;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t low = mask & (~mask + 1);
    for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;  // the part covering the lowest element
      if (dcs[sub] && dp[mask ^ sub] + 1 < dp[mask]) dp[mask] = dp[mask ^ sub] + 1;
    }
  }
  return dp[full];
}

// The paired extremal sets on the path P_n: kind 'A' attains ||chi||_D = n,
// kind 'B' attains n+1, both with index n. On P_n these are the alternating
// node sets: A takes the indices of parity opposite to n, B those of the
// parity of n (so B contains the root).
inline NodeSet alternating_set(const TreeSpace& path_space, int n, char kind) {
  if (n < 1) throw precondition_error("alternating_set: n must be >= 1");
  if (kind != 'A' && kind != 'B') throw precondition_error("alternating_set: kind must be A or B");
  NodeSet s(path_space);
  int want = (kind == 'B') ? (n % 2) : 1 - (n % 2);
  for (int j = 0; j <= n; ++j)
    if (j % 2 == want) s.add(path_space.index_of("v" + std::to_string(j)));
  return s;
}

struct ExampleSet {
  TreeSpace space;
  std::vector<std::string> members;
};

inline ExampleSet example_sets(int n, char kind) {
  ExampleSet ex{TreeSpace::path(n), {}};
  // ids only; the caller materializes the NodeSet once the space is placed
  int want = (kind == 'B') ? (n % 2) : 1 - (n % 2);
  if (n < 1) throw precondition_error("example_sets: n must be >= 1");
  if (kind != 'A' && kind != 'B') throw precondition_error("example_sets: kind must be A or B");
  for (int j = 0; j <= n; ++j)
    if (j % 2 == want) ex.members.push_back("v" + std::to_string(j));
  return ex;
}

}  // namespace dk
