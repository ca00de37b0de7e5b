#pragma once

// Randomized property suite behind `check`. Each entry replays a named
// invariant for a number of cases; the per-check RNG is derived from the seed
// and the check name, so results do not depend on registration order.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dk/algebra.hpp"
#include "dk/enumerate.hpp"
#include "dk/norms.hpp"
#include "dk/oracles.hpp"
#include "dk/random_gen.hpp"

namespace dk {

struct Check {
  std::string suite;
  std::string name;
  // returns an error description on failure
  std::function<std::optional<std::string>(uint64_t seed, int cases)> run;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace checkdetail {

inline uint64_t name_hash(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string at_case(int i, const std::string& what) {
  std::ostringstream os;
  os << "case " << i << ": " << what;
  return os.str();
}

template <class Body>
std::optional<std::string> for_cases(uint64_t seed, int cases, Body body) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::optional<std::string> err = body(rng);
    if (err) return at_case(i, *err);
  }
  return std::nullopt;
}

inline bool maps_equal(const NodeSet& dom, const MagMap<Rational>& a, const MagMap<Rational>& b) {
  for (int x : dom.indices())
    if (a[x] != b[x]) return false;
  return true;
}

inline bool maps_le(const NodeSet& dom, const MagMap<Rational>& a, const MagMap<Rational>& b) {
  for (int x : dom.indices())
    if (a[x] > b[x]) return false;
  return true;
}

inline FnR alternating_on_path(const TreeSpace& p, int n) {
  std::vector<Rational> v(p.size());
  for (int j = 0; j <= n; ++j)
    v[p.index_of("v" + std::to_string(j))] = (j % 2 == 0) ? Rational(1) : Rational(-1);
  return FnR(p, std::move(v));
}

// ----- space ---------------------------------------------------------------

inline std::optional<std::string> chk_closure_laws(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet s = random_set(rng, sp), t = random_set(rng, sp);
    if (closure(closure(s)) != closure(s)) return "closure not idempotent";
    if (s.subset_of(t) && !closure(s).subset_of(closure(t))) return "closure not monotone";
    if (closure(s | t) != (closure(s) | closure(t))) return "closure does not split unions";
    NodeSet all = NodeSet::all(sp);
    if (interior_rel(s, all) != closure(s.complement()).complement())
      return "interior is not the open dual of closure";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_open_closed(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet s = random_set(rng, sp);
    bool desc_closed = true, anc_closed = true;
    for (int x : s.indices()) {
      for (int y : sp.strict_descendants(x))
        if (!s.contains(y)) desc_closed = false;
      for (int a = sp.parent(x); a != -1; a = sp.parent(a))
        if (!s.contains(a)) anc_closed = false;
    }
    if (is_open(s) != desc_closed) return "open <=> descendant-closed failed";
    if (is_closed(s) != anc_closed) return "closed <=> ancestor-closed failed";
    if (is_open(s) != is_closed(s.complement())) return "open <=> complement closed failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_dcs_exhaustive(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet s = random_set(rng, sp);
    SetClassification c = classify_set(s);
    if (c.is_dcs != oracles::exhaustive_is_dcs(s)) return "locally-closed test disagrees with search";
    if (c.is_dcs) {
      if (c.canonical_closed != closure(s)) return "canonical closed part is not cl(S)";
      if ((c.canonical_closed - c.canonical_boundary) != s) return "canonical parts do not recover S";
      if (!is_nowhere_dense(c.canonical_boundary, c.canonical_closed))
        return "canonical boundary not nowhere dense in cl(S)";
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_subspace_derived(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet l = random_nonempty_set(rng, sp);
    SpaceView view = subspace(l);
    NodeSet expect(sp);
    for (int x : l.indices())
      for (int y : sp.strict_descendants(x))
        if (l.contains(y)) {
          expect.add(x);
          break;
        }
    if (view.derived_set() != expect) return "induced derived set mismatch";
    // iterated derived sets of the full space are the height filtration
    NodeSet cur = NodeSet::all(sp);
    for (int n = 0; n <= sp.height() + 1; ++n) {
      NodeSet byheight(sp);
      for (int x = 0; x < sp.size(); ++x)
        if (sp.node_height(x) >= n) byheight.add(x);
      if (cur != byheight) return "derived iterate is not the height filtration";
      cur = derived_in(cur);
    }
    return std::nullopt;
  });
}

// ----- set_calculus ----------------------------------------------------------

inline std::optional<std::string> chk_index_vs_baire(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet a = random_set(rng, sp);
    BoundaryTower t = boundary_tower(a);
    FnR chi = FnR::indicator(a);
    for (Rational eps : {Rational(1, 2), Rational(1)}) {
      if (baire_index(chi, eps) != t.index) return "i(A) != i_B(chi_A, eps)";
      NodeSet w = chi.domain();
      for (size_t j = 1; j < t.tower.size(); ++j) {
        w = os_step(chi, w, eps);
        if (w != t.tower[j]) return "boundary tower differs from the os chain";
      }
    }
    // the oscillation of an indicator is the indicator of the boundary,
    // already at the pre-envelope stage
    auto low = lower_osc(chi);
    auto osc = upper_env<Rational>(sp, chi.domain(), low);
    NodeSet bd = boundary(a);
    for (int x = 0; x < sp.size(); ++x) {
      Rational expect = bd.contains(x) ? Rational(1) : Rational(0);
      if (low[x] != expect || osc[x] != expect)
        return "osc chi_A differs from chi of the boundary";
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_chi_norm_engine(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet a = random_set(rng, sp);
    auto [d, qd] = chi_norm(a);
    auto [de, qde] = norm_pair(FnR::indicator(a));
    if (d != de || qd != qde) return "indicator norms disagree with the oscillation engine";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_decompose(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet a = random_set(rng, sp);
    BoundaryTower t = boundary_tower(a);
    DcsDecomposition dec = dcs_decompose(a);
    int expect = t.meets_top ? t.index / 2 + 1 : (t.index + 1) / 2;
    if (dec.count != expect) return "part count differs from the closed form";
    NodeSet un(sp);
    for (size_t i = 0; i < dec.parts.size(); ++i) {
      const NodeSet& w = dec.parts[i];
      if (w.intersects(un)) return "parts not disjoint";
      un = un | w;
      if (!classify_set(w).is_dcs) return "part fails the DCS test";
      const auto& [c, o] = dec.certificates[i];
      if (!is_closed(c) || !is_open(o) || (c & o) != w) return "certificate invalid";
    }
    if (un != a) return "parts do not cover A";
    if (min_dcs_count(a) != dec.count) return "exhaustive minimum disagrees with the count";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_dcs_index(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet w = random_dcs(rng, sp);
    if (boundary_tower(w).index > 2) return "a DCS with index above 2";
    NodeSet a = random_set(rng, sp);
    if (boundary_tower(a).index <= 1 && !classify_set(a).is_dcs)
      return "a set of index at most one that is not locally closed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_strip_dcs(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet a = random_set(rng, sp);
    BoundaryTower t = boundary_tower(a);
    auto bd = [&](int j) {
      return j < static_cast<int>(t.tower.size()) ? t.tower[j] : NodeSet(sp);
    };
    for (int i = 0; i <= t.index; ++i) {
      NodeSet strip = a & (bd(i) - bd(i + 2));
      if (!classify_set(strip).is_dcs) return "A cap (d^i - d^{i+2}) is not a DCS";
    }
    return std::nullopt;
  });
}

// ----- oscillation -----------------------------------------------------------

inline std::optional<std::string> chk_osc_monotone_usc(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    auto p = full_profile(f);
    for (int k = 0; k <= p.d_index; ++k) {
      if (!maps_le(f.domain(), p.level(k), p.level(k + 1))) return "levels not monotone";
      if (!is_usc_map<Rational>(sp, f.domain(), p.level(k))) return "level not USC";
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_homog_subadd(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp), g = random_function(rng, sp);
    Rational t = rng.rational(6, 3);
    auto pf = full_profile(f), pg = full_profile(g);
    auto pt = full_profile(scale(t, f));
    auto ps = full_profile(add(f, g));
    int top = std::max({pf.d_index, pg.d_index, pt.d_index, ps.d_index}) + 1;
    for (int k = 0; k <= top; ++k) {
      for (int x : f.domain().indices()) {
        if (pt.level(k)[x] != rabs(t) * pf.level(k)[x]) return "osc_n(t f) != |t| osc_n f";
        if (ps.level(k)[x] > pf.level(k)[x] + pg.level(k)[x]) return "osc_n(f+g) subadditivity failed";
      }
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_product(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp, 4, 3), g = random_function(rng, sp, 4, 3);
    auto pf = full_profile(f), pg = full_profile(g), pp = full_profile(mul(f, g));
    MagMap<Rational> absf(sp.size(), Rational(0)), absg(sp.size(), Rational(0));
    for (int x : f.domain().indices()) {
      absf[x] = rabs(f(x));
      absg[x] = rabs(g(x));
    }
    auto Uf = upper_env<Rational>(sp, f.domain(), absf);
    auto Ug = upper_env<Rational>(sp, f.domain(), absg);
    int top = std::max({pf.d_index, pg.d_index, pp.d_index}) + 1;
    for (int k = 0; k <= top; ++k)
      for (int x : f.domain().indices())
        if (pp.level(k)[x] > Uf[x] * pg.level(k)[x] + Ug[x] * pf.level(k)[x])
          return "product oscillation bound failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_abs(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    auto pf = full_profile(f), pa = full_profile(abs_f(f));
    int top = std::max(pf.d_index, pa.d_index) + 1;
    for (int k = 0; k <= top; ++k)
      if (!maps_le(f.domain(), pa.level(k), pf.level(k))) return "osc_n |f| <= osc_n f failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_stabilization(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    auto p = full_profile(f);
    if (p.d_index > sp.height()) return "stabilization later than the height";
    if (!maps_equal(f.domain(), p.level(p.d_index), p.level(p.d_index + 7)))
      return "levels change after stabilization";
    if (p.d_index > 0 && maps_equal(f.domain(), p.level(p.d_index - 1), p.level(p.d_index)))
      return "d_index is not the least stabilization level";
    // equivalent formulation: osc_d f +- f both USC
    std::vector<Rational> plus(sp.size(), Rational(0)), minus(sp.size(), Rational(0));
    for (int x : f.domain().indices()) {
      plus[x] = p.omega()[x] + f(x);
      minus[x] = p.omega()[x] - f(x);
    }
    if (!is_usc_values(sp, f.domain(), plus) || !is_usc_values(sp, f.domain(), minus))
      return "osc_d f +- f not both USC";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_const_shift(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    FnR g = add(f, FnR::constant(sp, rng.rational()));
    auto pf = full_profile(f), pg = full_profile(g);
    int top = std::max(pf.d_index, pg.d_index) + 1;
    for (int k = 0; k <= top; ++k)
      if (!maps_equal(f.domain(), pf.level(k), pg.level(k)))
        return "adding a constant changed the oscillations";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_chain_search(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 8);
    FnR f = random_function(rng, sp);
    auto p = full_profile(f);
    for (int k = 0; k <= p.d_index + 1; ++k)
      for (int x : f.domain().indices())
        if (osc_by_chain_search(f, k, x) != p.level(k)[x])
          return "eps-chain characterization of osc_n failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_omega_sup_chain(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp);
    if (full_profile(f).omega_sup() != oracles::eps_sequence_search(f))
      return "||osc_omega|| differs from the eps-sequence search";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_d_index_le_baire(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    if (full_profile(f).d_index > baire_index(f)) return "i_D(f) > i_B(f)";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_baire_le_height(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    if (baire_index(f) > sp.height()) return "i_B above the height";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_baire_subadd(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp), g = random_function(rng, sp);
    Rational eps = random_positive_eps(rng);
    if (baire_index(add(f, g), eps) > baire_index(f, eps / 2) + baire_index(g, eps / 2))
      return "i_B(f+g,eps) subadditivity failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_omega_subadd(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 8);
    FnR f = random_function(rng, sp), g = random_function(rng, sp);
    Rational eps = random_positive_eps(rng);
    int s = omega_level_sets(add(f, g), eps).second;
    if (s > omega_level_sets(f, eps / 2).second + omega_level_sets(g, eps / 2).second)
      return "omega-level index subadditivity failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_omega_chain_bound(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp);
    Rational eps = random_positive_eps(rng);
    int idx = omega_level_sets(f, eps).second;
    if (eps * idx > full_profile(f).omega_sup()) return "eps * omega-index above ||osc_omega||";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_restriction_drop(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 2, 9);
    FnR f = random_function(rng, sp);
    NodeSet l = random_nonempty_set(rng, sp);
    auto pf = full_profile(f);
    auto pl = full_profile(f.restrict_to(l));
    Rational delta;
    bool first = true;
    for (int x : l.indices()) {
      if (first || pf.omega()[x] < delta) delta = pf.omega()[x];
      first = false;
    }
    for (int x : l.indices())
      if (pf.omega()[x] < delta + pl.omega()[x])
        return "stabilized oscillation does not absorb the restriction drop";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_scaling_index_law(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    Rational lam = random_positive_eps(rng);
    Rational eps = random_positive_eps(rng);
    if (baire_index(scale(lam, f), eps) != baire_index(f, eps / lam))
      return "i_B(lam f, eps) != i_B(f, eps/lam)";
    if (baire_index(abs_f(f), eps) > baire_index(f, eps)) return "i_B(|f|,eps) > i_B(f,eps)";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_qd_local_chain(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 8);
    FnR f = random_function(rng, sp);
    Rational eps = random_positive_eps(rng);
    if (qd_local_index(f, eps) != omega_level_sets(f, eps).second)
      return "local qD chain differs from the omega chain";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_envelopes(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    NodeSet dom = random_nonempty_set(rng, sp);
    MagMap<Rational> g(sp.size(), Rational(0));
    for (int x : dom.indices()) g[x] = rng.rational();
    auto ug = upper_env<Rational>(sp, dom, g);
    auto lg = lower_env<Rational>(sp, dom, g);
    if (upper_env<Rational>(sp, dom, ug) != ug) return "upper envelope not idempotent";
    if (lower_env<Rational>(sp, dom, lg) != lg) return "lower envelope not idempotent";
    for (int x : dom.indices())
      if (!(ug[x] >= g[x] && g[x] >= lg[x])) return "Ug >= g >= Lg failed";
    if (!is_usc_map<Rational>(sp, dom, ug)) return "upper envelope not USC";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_os_chain_closed(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    std::vector<Rational> eps;
    for (int i = rng.uniform(1, 4); i > 0; --i)
      eps.push_back(rng.flip() ? Rational(0) : random_positive_eps(rng));
    auto sets = os_sets(f, eps);
    NodeSet prev = f.domain();
    for (size_t j = 0; j < sets.size(); ++j) {
      if (!sets[j].subset_of(prev)) return "os set escapes its predecessor";
      if (!is_closed_in(sets[j], prev)) return "os set not closed in its predecessor";
      if (eps[j] == 0 && sets[j] != prev) return "eps = 0 must keep the carrier";
      prev = sets[j];
    }
    return std::nullopt;
  });
}

// A simple function's os chain at any eps below its least positive value gap
// is the discontinuity chain, and the eps-free index is attained there.
inline std::optional<std::string> chk_discontinuity_chain(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    Rational gap(0);
    for (int x : f.domain().indices())
      for (int y : f.domain().indices()) {
        Rational d = rabs(f(x) - f(y));
        if (d > 0 && (gap == 0 || d < gap)) gap = d;
      }
    if (gap == 0) {
      if (baire_index(f) != 0) return "constant function with positive index";
      return std::nullopt;
    }
    if (baire_index(f) != baire_index(f, gap)) return "index not attained at the least gap";
    NodeSet w = f.domain();
    while (true) {
      NodeSet disc(sp);
      for (int x : w.indices())
        for (int y : sp.strict_descendants(x))
          if (w.contains(y) && f(y) != f(x)) {
            disc.add(x);
            break;
          }
      NodeSet nxt = os_step(f, w, gap);
      if (nxt != disc) return "os step differs from the discontinuity set";
      if (nxt.empty()) break;
      w = nxt;
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_osc_definition_oracle(uint64_t seed, int cases) {
  return for_cases(seed, std::max(1, cases / 4), [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 7);
    FnR f = random_function(rng, sp, 5, 3);
    auto p = full_profile(f);
    for (int k = 0; k <= p.d_index + 1; ++k) {
      auto oracle = oracles::osc_by_definition(f, k);
      if (!maps_equal(f.domain(), oracle, p.level(k)))
        return "chain-enumeration oracle disagrees with the recursion";
    }
    return std::nullopt;
  });
}

// ----- norms -----------------------------------------------------------------

inline std::optional<std::string> chk_norm_chain(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    auto [d, qd] = norm_pair(f);
    if (!(qd <= d && d <= f.sup_norm() + qd)) return "qd <= d <= sup + qd failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_norm_three_routes(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp);
    if (d_norm(f) != eps_chain_lower_bound(f)) return "eps-chain bound is not exact";
    NodeSet a = random_set(rng, sp);
    auto [dc, qc] = chi_norm(a);
    auto [de, qe] = norm_pair(FnR::indicator(a));
    if (dc != de || qc != qe) return "indicator closed form differs from the engine";
    int len = rng.uniform(1, 7);
    std::vector<Rational> cell(len);
    for (auto& c : cell) c = rng.rational();
    TreeSpace p = TreeSpace::path(len - 1);
    FnR cf = make_cell(p, cell);
    auto closed = cell_norm(cell);
    auto engine = norm_pair(cf);
    if (closed != engine) return "cell closed form differs from the engine";
    if (closed.first != eps_chain_lower_bound(cf)) return "cell eps-chain bound differs";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_lsc_decomposition(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    auto [u, v] = lsc_decomposition(f);
    Rational sum(0);
    for (int x : f.domain().indices()) {
      if (u(x) < 0 || v(x) < 0) return "u or v negative";
      if (u(x) - v(x) != f(x)) return "f != u - v";
      sum = std::max(sum, Rational(u(x) + v(x)));
    }
    if (!is_lsc_values(sp, f.domain(), u.values()) || !is_lsc_values(sp, f.domain(), v.values()))
      return "u or v fails the LSC test";
    if (sum != d_norm(f)) return "||u+v|| != ||f||_D";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_local_qd(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp);
    auto p = full_profile(f);
    for (int x : f.domain().indices()) {
      NodeSet sub(sp);
      sub.add(x);
      for (int y : sp.strict_descendants(x)) sub.add(y);
      if (p.omega()[x] != qd_norm(f.restrict_to(sub)))
        return "osc at stabilization differs from the local qD norm";
    }
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_index_norm_bounds(uint64_t seed, int cases) {
  auto err = for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    int n = baire_index(f);
    auto [d, qd] = norm_pair(f);
    if (d > Rational(2 * n + 1) * f.sup_norm()) return "||f||_D above (2n+1)||f||_inf";
    if (qd > Rational(2 * n) * f.sup_norm()) return "||f||_qD above 2n||f||_inf";
    return std::nullopt;
  });
  if (err) return err;
  // the alternating family attains the bounds with ||osc f||_inf = 2
  for (int n = 1; n <= 5; ++n) {
    TreeSpace p = TreeSpace::path(n);
    FnR f = alternating_on_path(p, n);
    auto [d, qd] = norm_pair(f);
    auto prof = full_profile(f);
    Rational osc1(0);
    for (int x : f.domain().indices()) osc1 = std::max(osc1, prof.level(1)[x]);
    if (d != Rational(2 * n + 1) || qd != Rational(2 * n)) return std::string("alternating norms off");
    if (baire_index(f) != n || osc1 != 2) return std::string("alternating index data off");
  }
  return std::nullopt;
}

inline std::optional<std::string> chk_b14_sandwich(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    NormReport r = b14_report(f);
    if (!(r.b14_lower <= r.d_norm && r.d_norm <= r.b14_upper)) return "B_{1/4} sandwich failed";
    if (r.fl_value != r.d_norm) return "|| |f| + tilde-osc_omega f || != ||f||_D";
    if (r.lower_bound_18 != r.d_norm) return "chain lower bound not exact";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_closed_cover(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    NodeSet c1 = random_closed_set(rng, sp);
    NodeSet c2 = closure(c1.complement());
    std::vector<NodeSet> cover{c1, c2, random_closed_set(rng, sp)};
    if (c1.empty()) cover[0] = NodeSet::all(sp);
    if (closed_cover_norm(f, cover) != d_norm(f)) return "closed-cover norm differs";
    // pointwise form at stabilization
    auto pf = full_profile(f);
    std::vector<OscProfile<Rational>> parts;
    for (const auto& w : cover) parts.push_back(full_profile(f.restrict_to(w)));
    for (int x : f.domain().indices()) {
      Rational best(-1);
      for (size_t i = 0; i < cover.size(); ++i)
        if (cover[i].contains(x)) best = std::max(best, parts[i].omega()[x]);
      if (best != pf.omega()[x]) return "cover maximum differs pointwise";
    }
    return std::nullopt;
  });
}

// ----- algebra_ops -----------------------------------------------------------

inline std::optional<std::string> chk_banach_bounds(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp, 5, 3), g = random_function(rng, sp, 5, 3);
    if (d_norm(abs_f(f)) > d_norm(f)) return "|| |f| || > ||f||";
    if (d_norm(add(f, g)) > d_norm(f) + d_norm(g)) return "triangle inequality failed";
    if (d_norm(mul(f, g)) > d_norm(f) * d_norm(g)) return "algebra norm bound failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_lattice(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp), g = random_function(rng, sp);
    Rational bound = d_norm(f) + d_norm(g);
    if (d_norm(lattice_max(f, g)) > bound || d_norm(lattice_min(f, g)) > bound)
      return "lattice norm bound failed";
    FnR lhs = add(lattice_max(f, g), lattice_min(f, g)), rhs = add(f, g);
    for (int x : f.domain().indices())
      if (lhs(x) != rhs(x)) return "(f v g) + (f ^ g) != f + g";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_invert(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    std::vector<Rational> v(sp.size());
    for (auto& x : v) {
      Rational r = rng.rational(6, 3);
      x = (r == 0) ? Rational(1) : r;  // keep inf |f| positive
    }
    FnR f(sp, std::move(v));
    Rational delta = min_modulus(f);
    FnR inv = invert(f);
    for (int x : f.domain().indices())
      if (inv(x) * f(x) != 1) return "1/f is not the reciprocal";
    if (d_norm(inv) > 1 / delta + d_norm(f) / (delta * delta))
      return "reciprocal norm bound failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_compose(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp, 4, 2);
    LipschitzMap<Rational> phi;
    switch (rng.uniform(0, 2)) {
      case 0:
        phi = phi_abs();
        break;
      case 1:
        phi = phi_clamp(random_positive_eps(rng));
        break;
      default:
        phi = phi_poly({rng.rational(3, 2), rng.rational(3, 2), rng.rational(2, 2)}, f.sup_norm());
        break;
    }
    FnR cf = compose_lipschitz(phi, f);
    if (d_norm(cf) > cf.sup_norm() + phi.constant * d_norm(f))
      return "composition norm bound failed";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_clamp(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 10);
    FnR f = random_function(rng, sp);
    Rational lam = random_positive_eps(rng);
    FnR c = clamp_modulus(lam, f);
    for (int x : f.domain().indices())
      for (int y : f.domain().indices())
        if (rabs(c(x) - c(y)) > rabs(f(x) - f(y))) return "clamp is not 1-Lipschitz";
    if (f.sup_norm() <= lam) {
      for (int x : f.domain().indices())
        if (c(x) != f(x)) return "clamp below the bound is not the identity";
    }
    if (d_norm(c) > lam + qd_norm(f)) return "||clamp f||_D > lambda + ||f||_qD";
    NodeSet w = random_nonempty_set(rng, sp);
    FnR a = clamp_modulus(lam, f.restrict_to(w)), b = clamp_modulus(lam, f).restrict_to(w);
    for (int x : w.indices())
      if (a(x) != b(x)) return "clamp does not commute with restriction";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_extension(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    NodeSet w = random_nonempty_set(rng, sp);
    FnR f = random_function(rng, sp).restrict_to(w);
    FnR g = extend_from(f);
    for (int x : w.indices())
      if (g(x) != f(x)) return "extension does not restrict back to f";
    if (d_norm(g) != d_norm(f)) return "extension norm not preserved";
    if (is_open(w)) {
      if (d_norm(mul_indicator(f, w)) != d_norm(f)) return "open-carrier indicator norm differs";
    }
    if (classify_set(w).is_dcs) {
      if (d_norm(mul_indicator(f, w)) > 2 * d_norm(f)) return "DCS multiplier bound failed";
    }
    return std::nullopt;
  });
}

// ----- oracles ---------------------------------------------------------------

inline std::optional<std::string> chk_partition_oracle(uint64_t seed, int cases) {
  return for_cases(seed, std::max(1, cases / 4), [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 8);
    NodeSet a = random_set(rng, sp);
    if (a.count() > 8) return std::nullopt;
    int brute = oracles::exhaustive_dcs_min_parts(a);
    if (brute != dcs_decompose(a).count) return "partition enumeration disagrees with the count";
    if (brute != min_dcs_count(a)) return "partition enumeration disagrees with the DP minimum";
    return std::nullopt;
  });
}

inline std::optional<std::string> chk_eps_search_oracle(uint64_t seed, int cases) {
  return for_cases(seed, cases, [](Rng& rng) -> std::optional<std::string> {
    TreeSpace sp = random_tree(rng, 1, 9);
    FnR f = random_function(rng, sp);
    auto v = oracles::eps_sequence_search(f);
    if (v != qd_norm(f)) return "eps-sequence search differs from ||f||_qD";
    return std::nullopt;
  });
}

}  // namespace checkdetail

inline const std::vector<Check>& all_checks() {
  using namespace checkdetail;
  static const std::vector<Check> checks = {
      {"space", "closure_laws", chk_closure_laws},
      {"space", "open_closed_characterization", chk_open_closed},
      {"space", "locally_closed_vs_search", chk_dcs_exhaustive},
      {"space", "subspace_derived_sets", chk_subspace_derived},
      {"set_calculus", "index_vs_baire_index", chk_index_vs_baire},
      {"set_calculus", "chi_norm_vs_engine", chk_chi_norm_engine},
      {"set_calculus", "decomposition_valid_and_minimal", chk_decompose},
      {"set_calculus", "dcs_index_at_most_two", chk_dcs_index},
      {"set_calculus", "boundary_strips_are_dcs", chk_strip_dcs},
      {"oscillation", "envelopes", chk_envelopes},
      {"oscillation", "os_chain_closed", chk_os_chain_closed},
      {"oscillation", "discontinuity_chain", chk_discontinuity_chain},
      {"oscillation", "levels_monotone_usc", chk_osc_monotone_usc},
      {"oscillation", "homogeneity_subadditivity", chk_osc_homog_subadd},
      {"oscillation", "product_bound", chk_osc_product},
      {"oscillation", "abs_bound", chk_osc_abs},
      {"oscillation", "stabilization", chk_osc_stabilization},
      {"oscillation", "constant_shift_invariance", chk_osc_const_shift},
      {"oscillation", "chain_characterization", chk_osc_chain_search},
      {"oscillation", "omega_sup_chain_value", chk_omega_sup_chain},
      {"oscillation", "d_index_le_baire_index", chk_d_index_le_baire},
      {"oscillation", "baire_index_le_height", chk_baire_le_height},
      {"oscillation", "baire_index_subadditivity", chk_baire_subadd},
      {"oscillation", "omega_index_subadditivity", chk_omega_subadd},
      {"oscillation", "omega_chain_bound", chk_omega_chain_bound},
      {"oscillation", "restriction_drop", chk_restriction_drop},
      {"oscillation", "scaling_index_law", chk_scaling_index_law},
      {"oscillation", "qd_local_chain", chk_qd_local_chain},
      {"oscillation", "definition_oracle", chk_osc_definition_oracle},
      {"norms", "qd_d_sup_chain", chk_norm_chain},
      {"norms", "three_routes_agree", chk_norm_three_routes},
      {"norms", "lsc_decomposition", chk_lsc_decomposition},
      {"norms", "local_qd_norm", chk_local_qd},
      {"norms", "index_norm_bounds", chk_index_norm_bounds},
      {"norms", "b14_sandwich_fl", chk_b14_sandwich},
      {"norms", "closed_cover_norm", chk_closed_cover},
      {"algebra_ops", "banach_bounds", chk_banach_bounds},
      {"algebra_ops", "lattice", chk_lattice},
      {"algebra_ops", "invert", chk_invert},
      {"algebra_ops", "compose_lipschitz", chk_compose},
      {"algebra_ops", "clamp", chk_clamp},
      {"algebra_ops", "extension", chk_extension},
      {"oracles", "partition_minimum", chk_partition_oracle},
      {"oracles", "eps_sequence_value", chk_eps_search_oracle},
  };
  return checks;
}

inline std::vector<CheckResult> run_checks(const std::string& suite, uint64_t seed, int cases) {
  bool known = suite == "all";
  for (const Check& c : all_checks())
    if (c.suite == suite) known = true;
  if (!known) throw precondition_error("unknown check suite: " + suite);
  std::vector<CheckResult> out;
  for (const Check& c : all_checks()) {
    if (suite != "all" && c.suite != suite) continue;
    CheckResult r{c.suite, c.name, true, ""};
    auto err = c.run(seed ^ checkdetail::name_hash(c.suite + "." + c.name), cases);
    if (err) {
      r.pass = false;
      r.detail = *err;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dk
