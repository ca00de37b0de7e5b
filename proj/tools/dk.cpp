// Command-line front end: space/set/function ingestion from JSON documents,
// invariant reports, u-v decompositions, the worked-example gallery, and the
// randomized property-suite runner.
//
// Exit codes: 0 ok, 1 property failure, 2 input/usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dk/algebra.hpp"
#include "dk/check.hpp"
#include "dk/gallery.hpp"
#include "dk/json_io.hpp"
#include "dk/norms.hpp"
#include "dk/oracles.hpp"
#include "dk/set_calculus.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

dk::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dk::input_error("cannot open file: " + path);
  try {
    return dk::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw dk::input_error(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

std::string ids_line(const std::vector<std::string>& ids) { return dk::render::ids_line(ids); }

// ----- space validate --------------------------------------------------------

int run_space_validate(const std::string& path, bool as_json) {
  dk::TreeSpace sp = dk::parse_space(load_json(path), "$");
  std::ostringstream out;
  if (as_json) {
    dk::json j;
    j["valid"] = true;
    j["nodes"] = sp.size();
    j["root"] = sp.label(sp.root());
    j["height"] = sp.height();
    dk::json der = dk::json::array();
    dk::NodeSet cur = dk::NodeSet::all(sp);
    while (!cur.empty()) {
      der.push_back(dk::ids_to_json(cur));
      cur = dk::derived_in(cur);
    }
    j["derived_sets"] = der;
    out << j.dump(2) << "\n";
  } else {
    out << "valid space: " << sp.size() << " nodes, root " << sp.label(sp.root()) << ", height "
        << sp.height() << "\n";
    dk::NodeSet cur = dk::NodeSet::all(sp);
    int n = 0;
    while (!cur.empty()) {
      out << "  derived set " << n++ << " = " << ids_line(cur.ids()) << "\n";
      cur = dk::derived_in(cur);
    }
  }
  std::cout << out.str();
  return kExitOk;
}

// ----- set analyze / decompose -----------------------------------------------

dk::json decomposition_json(const dk::DcsDecomposition& dec) {
  dk::json parts = dk::json::array();
  for (size_t i = 0; i < dec.parts.size(); ++i) {
    dk::json p;
    p["members"] = dk::ids_to_json(dec.parts[i]);
    p["closed_witness"] = dk::ids_to_json(dec.certificates[i].first);
    p["open_witness"] = dk::ids_to_json(dec.certificates[i].second);
    parts.push_back(p);
  }
  dk::json j;
  j["count"] = dec.count;
  j["parts"] = parts;
  return j;
}

void render_decomposition(std::ostream& out, const dk::DcsDecomposition& dec) {
  out << "decomposition (" << dec.count << " part" << (dec.count == 1 ? "" : "s") << "):\n";
  for (size_t i = 0; i < dec.parts.size(); ++i) {
    out << "  part " << i + 1 << " = " << ids_line(dec.parts[i].ids());
    if (dk::is_open(dec.parts[i])) out << " (open)";
    out << "  [closed " << ids_line(dec.certificates[i].first.ids()) << " cap open "
        << ids_line(dec.certificates[i].second.ids()) << "]\n";
  }
}

int run_set(const std::string& path, bool decompose_only, bool as_json) {
  dk::SetDoc doc = dk::parse_set_doc(load_json(path));
  dk::NodeSet a = dk::NodeSet::of_ids(doc.space, doc.members);
  dk::BoundaryTower t = dk::boundary_tower(a);
  auto [d, qd] = dk::chi_norm(a);
  dk::DcsDecomposition dec = dk::dcs_decompose(a);
  dk::SetClassification cls = dk::classify_set(a);
  std::ostringstream out;
  if (as_json) {
    dk::json j;
    if (!decompose_only) {
      j["members"] = dk::ids_to_json(a);
      dk::json tower = dk::json::array();
      for (const dk::NodeSet& s : t.tower) tower.push_back(dk::ids_to_json(s));
      j["boundary_tower"] = tower;
      j["index"] = t.index;
      j["meets_top"] = t.meets_top;
      j["chi_d_norm"] = dk::to_pq(d);
      j["chi_qd_norm"] = dk::to_pq(qd);
      j["is_open"] = cls.is_open;
      j["is_closed"] = cls.is_closed;
      j["is_dcs"] = cls.is_dcs;
      if (doc.space.size() <= 12) j["min_part_count"] = dk::min_dcs_count(a);
    }
    j["decomposition"] = decomposition_json(dec);
    out << j.dump(2) << "\n";
  } else {
    if (!decompose_only) {
      out << "set " << ids_line(a.ids()) << " on " << doc.space.size() << " nodes (height "
          << doc.space.height() << ")\n";
      out << "boundary tower:\n";
      for (size_t k = 0; k < t.tower.size(); ++k)
        out << "  boundary " << k << " = " << ids_line(t.tower[k].ids()) << "\n";
      out << "index = " << t.index << ", meets top boundary: " << (t.meets_top ? "yes" : "no")
          << "\n";
      out << "chi d_norm = " << dk::to_pq(d) << ", chi qd_norm = " << dk::to_pq(qd) << "\n";
      out << "open: " << (cls.is_open ? "yes" : "no")
          << ", closed: " << (cls.is_closed ? "yes" : "no")
          << ", dcs: " << (cls.is_dcs ? "yes" : "no") << "\n";
    }
    render_decomposition(out, dec);
    if (!decompose_only && doc.space.size() <= 12)
      out << "minimal part count (exhaustive) = " << dk::min_dcs_count(a) << "\n";
  }
  std::cout << out.str();
  return kExitOk;
}

// ----- fn analyze / decompose -------------------------------------------------

int run_fn(const std::string& path, bool decompose_only, bool as_json) {
  dk::FunctionDoc doc = dk::parse_function_doc(load_json(path));
  dk::FnR f = dk::function_from_doc(doc);
  std::ostringstream out;
  if (decompose_only) {
    auto [u, v] = dk::lsc_decomposition(f);
    if (as_json) {
      dk::json j;
      dk::json ju, jv;
      for (int x : f.domain().indices()) {
        ju[doc.space.label(x)] = dk::to_pq(u(x));
        jv[doc.space.label(x)] = dk::to_pq(v(x));
      }
      j["d_norm"] = dk::to_pq(dk::d_norm(f));
      j["u"] = ju;
      j["v"] = jv;
      out << j.dump(2) << "\n";
    } else {
      out << "f = u - v with u, v nonnegative lower semi-continuous, ||u+v||_inf = ||f||_D = "
          << dk::to_pq(dk::d_norm(f)) << "\n";
      for (int x : f.domain().indices())
        out << "  " << doc.space.label(x) << ": u = " << dk::to_pq(u(x))
            << ", v = " << dk::to_pq(v(x)) << "\n";
    }
    std::cout << out.str();
    return kExitOk;
  }

  auto prof = dk::full_profile(f);
  dk::NormReport rep = dk::b14_report(f);
  auto breakpoints = dk::baire_breakpoints(f);
  int ib = dk::baire_index(f);
  if (as_json) {
    dk::json j;
    j["nodes"] = doc.space.size();
    j["height"] = doc.space.height();
    j["domain_size"] = f.domain().count();
    dk::json sups = dk::json::array();
    for (int k = 0; k <= prof.d_index; ++k) {
      dk::Rational m(0);
      for (int x : f.domain().indices()) m = std::max(m, prof.level(k)[x]);
      sups.push_back(dk::to_pq(m));
    }
    j["profile"] = {{"d_index", prof.d_index},
                    {"level_sups", sups},
                    {"osc_omega_sup", dk::to_pq(prof.omega_sup())}};
    j["norms"] = dk::report_to_json(rep);
    j["baire_index"] = ib;
    dk::json table = dk::json::array();
    for (const dk::Rational& e : breakpoints) {
      int idx = dk::baire_index(f, e);
      table.push_back({{"eps", dk::to_pq(e)},
                       {"i_B", idx},
                       {"eps_times_i_B", dk::to_pq(e * idx)}});
    }
    j["breakpoints"] = table;
    out << j.dump(2) << "\n";
  } else {
    out << "function on " << doc.space.size() << " nodes (height " << doc.space.height()
        << "), domain " << f.domain().count() << " nodes\n";
    out << "oscillation profile: d_index = " << prof.d_index << "\n  level sups:";
    for (int k = 0; k <= prof.d_index; ++k) {
      dk::Rational m(0);
      for (int x : f.domain().indices()) m = std::max(m, prof.level(k)[x]);
      out << " " << dk::to_pq(m);
    }
    out << "\n";
    out << "norm report:\n";
    out << "  sup_norm = " << dk::to_pq(rep.sup_norm) << "\n";
    out << "  d_norm = " << dk::to_pq(rep.d_norm) << "\n";
    out << "  qd_norm = " << dk::to_pq(rep.qd_norm) << "\n";
    out << "  d_index = " << rep.d_index << "\n";
    out << "  lower_bound_18 = " << dk::to_pq(rep.lower_bound_18) << "\n";
    out << "  b14_lower = " << dk::to_pq(rep.b14_lower) << "\n";
    out << "  b14_upper = " << dk::to_pq(rep.b14_upper) << "\n";
    out << "  fl_value = " << dk::to_pq(rep.fl_value) << "\n";
    out << "baire index = " << ib << "\n";
    out << "breakpoints (eps, i_B, eps*i_B):\n";
    for (const dk::Rational& e : breakpoints) {
      int idx = dk::baire_index(f, e);
      out << "  " << dk::to_pq(e) << "  " << idx << "  " << dk::to_pq(e * idx) << "\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

// ----- gallery ----------------------------------------------------------------

int run_gallery(const std::string& name, int n, const std::string& cells_arg, bool as_json) {
  std::ostringstream out;
  if (name == "prop2.6") {
    auto r = dk::gallery_indicator_pair(n);
    if (as_json)
      out << dk::indicator_pair_to_json(r).dump(2) << "\n";
    else
      dk::render::indicator_pair(out, r);
  } else if (name == "alternating") {
    auto r = dk::gallery_alternating(n);
    if (as_json)
      out << dk::alternating_to_json(r).dump(2) << "\n";
    else
      dk::render::alternating(out, r);
  } else if (name == "cells") {
    if (cells_arg.empty()) throw dk::input_error("gallery cells: --a is required");
    std::vector<dk::Rational> a;
    std::stringstream ss(cells_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto r = dk::parse_rational(tok);
      if (!r) throw dk::input_error("gallery cells: invalid rational \"" + tok + "\"");
      a.push_back(*r);
    }
    auto r = dk::gallery_cells(a);
    if (as_json)
      out << dk::cells_to_json(r).dump(2) << "\n";
    else
      dk::render::cells(out, r);
  } else if (name == "b12-trend") {
    auto rows = dk::gallery_b12_trend(n);
    if (as_json)
      out << dk::trend_to_json(rows).dump(2) << "\n";
    else
      dk::render::trend(out, rows);
  } else {
    throw dk::input_error("unknown gallery name: " + name);
  }
  std::cout << out.str();
  return kExitOk;
}

// ----- check ------------------------------------------------------------------

int run_check(const std::string& suite, uint64_t seed, int cases, bool as_json) {
  std::vector<dk::CheckResult> results;
  try {
    results = dk::run_checks(suite, seed, cases);
  } catch (const dk::precondition_error& e) {
    throw dk::input_error(e.what());
  }
  int failed = 0;
  std::ostringstream out;
  if (as_json) {
    dk::json arr = dk::json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      failed += r.pass ? 0 : 1;
    }
    dk::json j;
    j["seed"] = seed;
    j["cases"] = cases;
    j["results"] = arr;
    j["failed"] = failed;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.pass) {
        out << "ok   " << r.suite << "." << r.name << "\n";
      } else {
        out << "FAIL " << r.suite << "." << r.name << ": " << r.detail << "\n";
        ++failed;
      }
    }
    out << "summary: " << (results.size() - failed) << "/" << results.size()
        << " checks passed (seed " << seed << ", cases " << cases << ")\n";
  }
  std::cout << out.str();
  return failed == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of bounded semi-continuous differences on finite tree models"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json trail the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file;
  auto* sp_cmd = app.add_subcommand("space", "space documents");
  sp_cmd->require_subcommand(1);
  auto* sp_validate = sp_cmd->add_subcommand("validate", "validate a space document");
  sp_validate->add_option("file", file, "JSON space document")->required();

  auto* set_cmd = app.add_subcommand("set", "node-set documents");
  set_cmd->require_subcommand(1);
  auto* set_analyze = set_cmd->add_subcommand("analyze", "tower, index, norms, decomposition");
  set_analyze->add_option("file", file, "JSON set document")->required();
  auto* set_decompose = set_cmd->add_subcommand("decompose", "optimal disjoint DCS parts");
  set_decompose->add_option("file", file, "JSON set document")->required();

  auto* fn_cmd = app.add_subcommand("fn", "function documents");
  fn_cmd->require_subcommand(1);
  auto* fn_analyze = fn_cmd->add_subcommand("analyze", "profile, norm report, index tables");
  fn_analyze->add_option("file", file, "JSON function document")->required();
  auto* fn_decompose = fn_cmd->add_subcommand("decompose", "semicontinuous u - v split");
  fn_decompose->add_option("file", file, "JSON function document")->required();

  std::string gallery_name;
  int gallery_n = 1;
  std::string cells_arg;
  auto* gal = app.add_subcommand("gallery", "worked-example families");
  gal->add_option("name", gallery_name, "prop2.6 | alternating | cells | b12-trend")->required();
  gal->add_option("--n", gallery_n, "family parameter");
  gal->add_option("--a", cells_arg, "comma-separated rational cell values");

  std::string suite;
  uint64_t seed = 7;
  int cases = 100;
  auto* chk = app.add_subcommand("check", "randomized property suites");
  chk->add_option("suite", suite, "all or a module name")->required();
  chk->add_option("--seed", seed, "RNG seed");
  chk->add_option("--cases", cases, "cases per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (sp_validate->parsed()) return run_space_validate(file, as_json);
    if (set_analyze->parsed()) return run_set(file, false, as_json);
    if (set_decompose->parsed()) return run_set(file, true, as_json);
    if (fn_analyze->parsed()) return run_fn(file, false, as_json);
    if (fn_decompose->parsed()) return run_fn(file, true, as_json);
    if (gal->parsed()) return run_gallery(gallery_name, gallery_n, cells_arg, as_json);
    if (chk->parsed()) return run_check(suite, seed, cases, as_json);
  } catch (const dk::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const dk::structural_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const dk::precondition_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
