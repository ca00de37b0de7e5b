#pragma once

// The worked-example gallery behind `gallery <name>`: parametric families on
// path spaces with every invariant recomputed, plus the divergence trend of
// uniformly bounded indicator sums. Computation and rendering are separated
// so both the CLI and the acceptance suite consume the same numbers.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dk/algebra.hpp"
#include "dk/json_io.hpp"
#include "dk/norms.hpp"
#include "dk/set_calculus.hpp"

namespace dk {

constexpr int kGalleryMaxN = 40;

inline void gallery_guard(int n, int max = kGalleryMaxN) {
  if (n < 1) throw precondition_error("gallery: n must be >= 1");
  if (n > max) throw precondition_error("gallery: n exceeds the size guard");
}

struct IndicatorPairReport {
  int n = 0;
  std::vector<std::string> members_a, members_b;
  Rational d_a, qd_a, d_b, qd_b;
  int index_a = 0, index_b = 0;
  int parts_a = 0, parts_b = 0;
  std::vector<std::vector<std::string>> part_ids_a, part_ids_b;
  bool first_part_open_a = false, first_part_open_b = false;
  int min_parts_a = -1, min_parts_b = -1;  // -1 when the space exceeds the search budget
};

inline IndicatorPairReport gallery_indicator_pair(int n) {
  gallery_guard(n);
  IndicatorPairReport r;
  r.n = n;
  TreeSpace sp = TreeSpace::path(n);
  for (char kind : {'A', 'B'}) {
    NodeSet s = alternating_set(sp, n, kind);
    BoundaryTower t = boundary_tower(s);
    auto [d, qd] = chi_norm(s);
    DcsDecomposition dec = dcs_decompose(s);
    int mc = sp.size() <= 12 ? min_dcs_count(s) : -1;
    std::vector<std::vector<std::string>> pid;
    for (const NodeSet& p : dec.parts) pid.push_back(p.ids());
    bool open0 = !dec.parts.empty() && is_open(dec.parts.front());
    if (kind == 'A') {
      r.members_a = s.ids();
      r.d_a = d;
      r.qd_a = qd;
      r.index_a = t.index;
      r.parts_a = dec.count;
      r.part_ids_a = pid;
      r.first_part_open_a = open0;
      r.min_parts_a = mc;
    } else {
      r.members_b = s.ids();
      r.d_b = d;
      r.qd_b = qd;
      r.index_b = t.index;
      r.parts_b = dec.count;
      r.part_ids_b = pid;
      r.first_part_open_b = open0;
      r.min_parts_b = mc;
    }
  }
  return r;
}

struct AlternatingReport {
  int n = 0;
  Rational d, qd, osc1_sup, sup;
  int baire = 0;
  bool equalities = false;  // d = (2n+1) sup, qd = n ||osc f|| = 2n sup
};

inline AlternatingReport gallery_alternating(int n) {
  gallery_guard(n);
  AlternatingReport r;
  r.n = n;
  TreeSpace sp = TreeSpace::path(n);
  std::vector<Rational> v(sp.size());
  for (int j = 0; j <= n; ++j)
    v[sp.index_of("v" + std::to_string(j))] = (j % 2 == 0) ? Rational(1) : Rational(-1);
  FnR f(sp, std::move(v));
  auto p = full_profile(f);
  r.d = d_norm_from_profile(f, p);
  r.qd = p.omega_sup();
  r.sup = f.sup_norm();
  Rational o1(0);
  for (int x : f.domain().indices()) o1 = std::max(o1, p.level(1)[x]);
  r.osc1_sup = o1;
  r.baire = baire_index(f);
  r.equalities = (r.d == Rational(2 * r.baire + 1) * r.sup) &&
                 (r.qd == Rational(r.baire) * r.osc1_sup) &&
                 (r.qd == Rational(2 * r.baire) * r.sup);
  return r;
}

struct CellReport {
  std::vector<Rational> a;
  Rational d_closed, qd_closed, d_engine, qd_engine, chain_bound;
  bool agree = false;
};

inline CellReport gallery_cells(const std::vector<Rational>& a) {
  if (a.empty()) throw precondition_error("gallery cells: empty value list");
  if (static_cast<int>(a.size()) > kGalleryMaxN)
    throw precondition_error("gallery: cell exceeds the size guard");
  CellReport r;
  r.a = a;
  auto closed = cell_norm(a);
  r.d_closed = closed.first;
  r.qd_closed = closed.second;
  TreeSpace sp = TreeSpace::path(static_cast<int>(a.size()) - 1);
  FnR f = make_cell(sp, a);
  auto engine = norm_pair(f);
  r.d_engine = engine.first;
  r.qd_engine = engine.second;
  r.chain_bound = eps_chain_lower_bound(f);
  r.agree = (closed == engine) && (r.chain_bound == r.d_engine);
  return r;
}

struct TrendRow {
  int n = 0;
  Rational chi_d;        // ||chi_{A_n}||_D = n, exact
  bool exact = false;    // scaled norm representable exactly (n a perfect square)
  Rational scaled_exact; // sqrt(n) when exact
  double scaled_approx = 0;
};

// ||f_n||_D for f_n = n^{-1/2} chi_{A_n}: the values sqrt(n) grow without
// bound while ||f_n||_inf -> 0, the uniform-limit gap in table form.
inline std::vector<TrendRow> gallery_b12_trend(int n) {
  gallery_guard(n, 60);
  std::vector<TrendRow> rows;
  for (int k = 1; k <= n; ++k) {
    TreeSpace sp = TreeSpace::path(k);
    NodeSet a = alternating_set(sp, k, 'A');
    TrendRow row;
    row.n = k;
    row.chi_d = chi_norm(a).first;
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
    row.exact = (r * r == k);
    row.scaled_exact = row.exact ? Rational(r) : Rational(0);
    row.scaled_approx = std::sqrt(static_cast<double>(k));
    rows.push_back(row);
  }
  return rows;
}

// --- textual rendering (byte-stable) ------------------------------------------

namespace render {

inline std::string ids_line(const std::vector<std::string>& ids) {
  std::string s = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ", ";
    s += ids[i];
  }
  return s + "}";
}

inline void indicator_pair(std::ostream& os, const IndicatorPairReport& r) {
  os << "paired indicator sets on the path space P_" << r.n << "\n";
  auto one = [&](char kind, const std::vector<std::string>& mem, const Rational& d,
                 const Rational& qd, int index, int parts,
                 const std::vector<std::vector<std::string>>& pid, bool open0, int minp) {
    os << "set " << kind << " = " << ids_line(mem) << "\n";
    os << "  index = " << index << "\n";
    os << "  d_norm = " << to_pq(d) << "  qd_norm = " << to_pq(qd) << "\n";
    os << "  parts (" << parts << "):";
    for (size_t i = 0; i < pid.size(); ++i) {
      os << " " << ids_line(pid[i]);
      if (i == 0 && open0) os << " (open)";
      if (i + 1 < pid.size()) os << ";";
    }
    os << "\n";
    if (minp >= 0) os << "  minimal part count (exhaustive) = " << minp << "\n";
  };
  one('A', r.members_a, r.d_a, r.qd_a, r.index_a, r.parts_a, r.part_ids_a, r.first_part_open_a,
      r.min_parts_a);
  one('B', r.members_b, r.d_b, r.qd_b, r.index_b, r.parts_b, r.part_ids_b, r.first_part_open_b,
      r.min_parts_b);
}

inline void alternating(std::ostream& os, const AlternatingReport& r) {
  os << "alternating +-1 function on the path space P_" << r.n << "\n";
  os << "  d_norm = " << to_pq(r.d) << "  qd_norm = " << to_pq(r.qd) << "\n";
  os << "  sup_norm = " << to_pq(r.sup) << "  osc_sup = " << to_pq(r.osc1_sup)
     << "  baire_index = " << r.baire << "\n";
  os << "  extremal equalities hold: " << (r.equalities ? "yes" : "no") << "\n";
}

inline void cells(std::ostream& os, const CellReport& r) {
  os << "cell values:";
  for (const Rational& c : r.a) os << " " << to_pq(c);
  os << "\n";
  os << "  closed form: d_norm = " << to_pq(r.d_closed) << "  qd_norm = " << to_pq(r.qd_closed)
     << "\n";
  os << "  engine:      d_norm = " << to_pq(r.d_engine) << "  qd_norm = " << to_pq(r.qd_engine)
     << "\n";
  os << "  chain bound: " << to_pq(r.chain_bound) << "\n";
  os << "  routes agree: " << (r.agree ? "yes" : "no") << "\n";
}

inline void trend(std::ostream& os, const std::vector<TrendRow>& rows) {
  os << "uniformly bounded indicator sums: scaled norms sqrt(n) diverge\n";
  os << "  n  chi_d_norm  scaled_d_norm\n";
  for (const TrendRow& r : rows) {
    os << "  " << r.n << "  " << to_pq(r.chi_d) << "  ";
    if (r.exact) {
      os << to_pq(r.scaled_exact) << "\n";
    } else {
      std::ostringstream tmp;
      tmp.precision(9);
      tmp << std::fixed << r.scaled_approx;
      os << "~" << tmp.str() << " (float)\n";
    }
  }
}

}  // namespace render

inline json indicator_pair_to_json(const IndicatorPairReport& r) {
  json j;
  j["family"] = "indicator-pair";
  j["n"] = r.n;
  auto side = [&](const std::vector<std::string>& mem, const Rational& d, const Rational& qd,
                  int idx, int parts, const std::vector<std::vector<std::string>>& pid,
                  int minp) {
    json s;
    s["members"] = mem;
    s["index"] = idx;
    s["d_norm"] = to_pq(d);
    s["qd_norm"] = to_pq(qd);
    s["parts"] = pid;
    s["part_count"] = parts;
    if (minp >= 0) s["min_part_count"] = minp;
    return s;
  };
  j["A"] = side(r.members_a, r.d_a, r.qd_a, r.index_a, r.parts_a, r.part_ids_a, r.min_parts_a);
  j["B"] = side(r.members_b, r.d_b, r.qd_b, r.index_b, r.parts_b, r.part_ids_b, r.min_parts_b);
  return j;
}

inline json alternating_to_json(const AlternatingReport& r) {
  json j;
  j["family"] = "alternating";
  j["n"] = r.n;
  j["d_norm"] = to_pq(r.d);
  j["qd_norm"] = to_pq(r.qd);
  j["sup_norm"] = to_pq(r.sup);
  j["osc_sup"] = to_pq(r.osc1_sup);
  j["baire_index"] = r.baire;
  j["extremal_equalities"] = r.equalities;
  return j;
}

inline json cells_to_json(const CellReport& r) {
  json j;
  j["family"] = "cells";
  json a = json::array();
  for (const Rational& c : r.a) a.push_back(to_pq(c));
  j["values"] = a;
  j["d_norm_closed_form"] = to_pq(r.d_closed);
  j["qd_norm_closed_form"] = to_pq(r.qd_closed);
  j["d_norm_engine"] = to_pq(r.d_engine);
  j["qd_norm_engine"] = to_pq(r.qd_engine);
  j["chain_bound"] = to_pq(r.chain_bound);
  j["routes_agree"] = r.agree;
  return j;
}

inline json trend_to_json(const std::vector<TrendRow>& rows) {
  json j;
  j["family"] = "b12-trend";
  json arr = json::array();
  for (const TrendRow& r : rows) {
    json row;
    row["n"] = r.n;
    row["chi_d_norm"] = to_pq(r.chi_d);
    if (r.exact)
      row["scaled_d_norm"] = to_pq(r.scaled_exact);
    else
      row["scaled_d_norm_float"] = r.scaled_approx;
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j;
}

}  // namespace dk
