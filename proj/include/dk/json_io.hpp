#pragma once

// JSON documents for spaces, sets, functions and reports.
//
//   space:    {"nodes":["v0",...], "root":"v1", "edges":[["parent","child"],...]}
//   set:      {"space": <space>, "members":["v0",...]}
//   function: {"space": <space>, "values":{"v0":"p/q",...}, "domain":["v0",...]?}
//
// Node ids are strings, arrays are order-insensitive (node indexing follows
// the "nodes" array), duplicate edges are rejected. Rationals travel as
// "p/q" strings.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "dk/function.hpp"
#include "dk/norms.hpp"
#include "dk/space.hpp"

namespace dk {

using json = nlohmann::ordered_json;

struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

namespace jsondetail {
inline const json& need(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) throw input_error(where + ": missing field \"" + field + "\"");
  return *it;
}
}  // namespace jsondetail

inline TreeSpace parse_space(const json& j, const std::string& where = "$.space") {
  if (!j.is_object()) throw input_error(where + ": expected an object");
  const json& jn = jsondetail::need(j, "nodes", where);
  const json& jr = jsondetail::need(j, "root", where);
  const json& je = jsondetail::need(j, "edges", where);
  if (!jn.is_array() || jn.empty()) throw input_error(where + ".nodes: expected a nonempty array");
  std::vector<std::string> nodes;
  for (size_t i = 0; i < jn.size(); ++i) {
    if (!jn[i].is_string())
      throw input_error(where + ".nodes[" + std::to_string(i) + "]: expected a string");
    nodes.push_back(jn[i].get<std::string>());
  }
  if (!jr.is_string()) throw input_error(where + ".root: expected a string");
  if (!je.is_array()) throw input_error(where + ".edges: expected an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < je.size(); ++i) {
    const json& e = je[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw input_error(where + ".edges[" + std::to_string(i) + "]: expected [parent, child]");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  TreeSpace sp = [&] {
    try {
      return TreeSpace::build(nodes, edges);
    } catch (const structural_error& ex) {
      throw input_error(where + ": " + ex.what());
    }
  }();
  std::string root = jr.get<std::string>();
  if (!sp.has(root) || sp.index_of(root) != sp.root())
    throw input_error(where + ".root: \"" + root + "\" is not the root of the edge relation");
  return sp;
}

inline NodeSet parse_members(const json& j, const TreeSpace& sp, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array of node ids");
  NodeSet s(sp);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw input_error(where + "[" + std::to_string(i) + "]: expected a string");
    std::string id = j[i].get<std::string>();
    if (!sp.has(id))
      throw input_error(where + "[" + std::to_string(i) + "]: unknown node \"" + id + "\"");
    s.add(sp.index_of(id));
  }
  return s;
}

// Set documents carry their space; the space must outlive the set, so both
// come back together.
struct SetDoc {
  TreeSpace space;
  std::vector<std::string> members;
};

inline SetDoc parse_set_doc(const json& j) {
  if (!j.is_object()) throw input_error("$: expected an object");
  SetDoc d{parse_space(jsondetail::need(j, "space", "$")), {}};
  const json& jm = jsondetail::need(j, "members", "$");
  NodeSet s = parse_members(jm, d.space, "$.members");
  d.members = s.ids();
  return d;
}

struct FunctionDoc {
  TreeSpace space;
  std::vector<Rational> values;
  std::vector<std::string> domain;  // empty = whole space
};

inline FunctionDoc parse_function_doc(const json& j) {
  if (!j.is_object()) throw input_error("$: expected an object");
  FunctionDoc d{parse_space(jsondetail::need(j, "space", "$")), {}, {}};
  const json& jv = jsondetail::need(j, "values", "$");
  if (!jv.is_object()) throw input_error("$.values: expected an object of rational strings");
  d.values.assign(d.space.size(), Rational(0));
  std::vector<bool> present(d.space.size(), false);
  for (auto it = jv.begin(); it != jv.end(); ++it) {
    if (!d.space.has(it.key()))
      throw input_error("$.values: unknown node \"" + it.key() + "\"");
    if (!it.value().is_string())
      throw input_error("$.values[\"" + it.key() + "\"]: expected a \"p/q\" string");
    auto r = parse_rational(it.value().get<std::string>());
    if (!r)
      throw input_error("$.values[\"" + it.key() + "\"]: invalid rational \"" +
                        it.value().get<std::string>() + "\"");
    d.values[d.space.index_of(it.key())] = *r;
    present[d.space.index_of(it.key())] = true;
  }
  NodeSet dom = NodeSet::all(d.space);
  if (j.contains("domain")) {
    dom = parse_members(j["domain"], d.space, "$.domain");
    d.domain = dom.ids();
  }
  for (int x : dom.indices())
    if (!present[x])
      throw input_error("$.values: no value for domain node \"" + d.space.label(x) + "\"");
  return d;
}

inline FnR function_from_doc(const FunctionDoc& d) {
  if (d.domain.empty()) return FnR(d.space, d.values);
  return FnR(d.space, d.values, NodeSet::of_ids(d.space, d.domain));
}

// --- serializers -------------------------------------------------------------

inline json space_to_json(const TreeSpace& sp) {
  json j;
  json nodes = json::array(), edges = json::array();
  for (int i = 0; i < sp.size(); ++i) nodes.push_back(sp.label(i));
  for (int i = 0; i < sp.size(); ++i)
    if (sp.parent(i) != -1) edges.push_back({sp.label(sp.parent(i)), sp.label(i)});
  j["nodes"] = nodes;
  j["root"] = sp.label(sp.root());
  j["edges"] = edges;
  return j;
}

inline json ids_to_json(const NodeSet& s) {
  json a = json::array();
  for (const auto& id : s.ids()) a.push_back(id);
  return a;
}

inline json report_to_json(const NormReport& r) {
  json j;
  j["sup_norm"] = to_pq(r.sup_norm);
  j["d_norm"] = to_pq(r.d_norm);
  j["qd_norm"] = to_pq(r.qd_norm);
  j["d_index"] = r.d_index;
  j["lower_bound_18"] = to_pq(r.lower_bound_18);
  j["b14_lower"] = to_pq(r.b14_lower);
  j["b14_upper"] = to_pq(r.b14_upper);
  j["fl_value"] = to_pq(r.fl_value);
  return j;
}

}  // namespace dk
