#include <doctest.h>

#include "dk/json_io.hpp"
#include "dk/norms.hpp"

using namespace dk;

namespace {
json p1_space() {
  json j;
  j["nodes"] = json::array({"v0", "v1"});
  j["root"] = "v1";
  j["edges"] = json::array({json::array({"v1", "v0"})});
  return j;
}
}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("+2/6") == Rational(1, 3));
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("3/0").has_value());
  CHECK_FALSE(parse_rational("3/-4").has_value());
  CHECK_FALSE(parse_rational("a/4").has_value());
  CHECK_FALSE(parse_rational("1/2/3").has_value());
  CHECK(to_pq(Rational(4, 8)) == "1/2");
  CHECK(to_pq(Rational(-3)) == "-3/1");
}

TEST_CASE("space documents round-trip") {
  TreeSpace sp = parse_space(p1_space(), "$");
  CHECK(sp.size() == 2);
  CHECK(sp.label(sp.root()) == "v1");
  json back = space_to_json(sp);
  TreeSpace again = parse_space(back, "$");
  CHECK(again.size() == 2);
  CHECK(again.label(again.root()) == "v1");
}

TEST_CASE("space document validation errors carry locations") {
  json missing = {{"nodes", {"a"}}, {"root", "a"}};
  CHECK_THROWS_WITH_AS(parse_space(missing, "$"), "$: missing field \"edges\"", input_error);

  json bad_root = p1_space();
  bad_root["root"] = "v0";
  CHECK_THROWS_AS(parse_space(bad_root, "$"), input_error);

  json dup = p1_space();
  dup["edges"] = json::array({json::array({"v1", "v0"}), json::array({"v1", "v0"})});
  CHECK_THROWS_WITH_AS(parse_space(dup, "$"), "$: duplicate edge: v1 -> v0", input_error);
}

TEST_CASE("set documents") {
  json doc = {{"space", p1_space()}, {"members", {"v0"}}};
  SetDoc d = parse_set_doc(doc);
  CHECK(d.members == std::vector<std::string>{"v0"});

  doc["members"].push_back("zz");
  CHECK_THROWS_AS(parse_set_doc(doc), input_error);
}

TEST_CASE("function documents") {
  json doc = {{"space", p1_space()}, {"values", {{"v0", "1/2"}, {"v1", "-3"}}}};
  FunctionDoc d = parse_function_doc(doc);
  FnR f = function_from_doc(d);
  CHECK(f(d.space.index_of("v0")) == Rational(1, 2));
  CHECK(f(d.space.index_of("v1")) == Rational(-3));

  json partial = {{"space", p1_space()}, {"values", {{"v0", "1"}}}, {"domain", {"v0"}}};
  FnR g = function_from_doc(parse_function_doc(partial));
  CHECK(g.domain().count() == 1);

  json missing_value = {{"space", p1_space()}, {"values", {{"v0", "1"}}}};
  CHECK_THROWS_AS(parse_function_doc(missing_value), input_error);

  json bad_rat = {{"space", p1_space()}, {"values", {{"v0", "x"}, {"v1", "1"}}}};
  CHECK_THROWS_AS(parse_function_doc(bad_rat), input_error);
}

TEST_CASE("norm report serialization has a stable field order") {
  TreeSpace sp = TreeSpace::path(1);
  NormReport r = b14_report(FnR::indicator(NodeSet::of(sp, {"v1"})));
  json j = report_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"sup_norm", "d_norm", "qd_norm", "d_index",
                                         "lower_bound_18", "b14_lower", "b14_upper", "fl_value"});
  CHECK(j["d_norm"] == "2/1");
}
