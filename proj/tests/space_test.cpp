#include <doctest.h>

#include "dk/set_calculus.hpp"
#include "dk/space.hpp"

using namespace dk;

TEST_CASE("path space heights and derived sets") {
  TreeSpace p3 = TreeSpace::path(3);
  CHECK(p3.size() == 4);
  CHECK(p3.height() == 3);
  CHECK(p3.label(p3.root()) == "v3");
  NodeSet cur = NodeSet::all(p3);
  std::vector<std::vector<std::string>> expect = {
      {"v0", "v1", "v2", "v3"}, {"v1", "v2", "v3"}, {"v2", "v3"}, {"v3"}};
  for (const auto& ids : expect) {
    CHECK(cur == NodeSet::of_ids(p3, ids));
    cur = derived_in(cur);
  }
  CHECK(cur.empty());
}

TEST_CASE("single node and star") {
  TreeSpace one = TreeSpace::path(0);
  CHECK(one.height() == 0);
  CHECK(derived_in(NodeSet::all(one)).empty());

  TreeSpace st = TreeSpace::star(3);
  CHECK(st.height() == 1);
  CHECK(derived_in(NodeSet::all(st)) == NodeSet::of(st, {"root"}));
}

TEST_CASE("malformed trees are rejected") {
  CHECK_THROWS_AS(TreeSpace::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), structural_error);
  CHECK_THROWS_AS(TreeSpace::build({"a", "b", "c"}, {{"a", "b"}}), structural_error);  // two roots
  CHECK_THROWS_AS(TreeSpace::build({"a"}, {{"a", "zz"}}), structural_error);  // dangling
  CHECK_THROWS_AS(TreeSpace::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}), structural_error);
  CHECK_THROWS_AS(TreeSpace::build({"a", "a"}, {}), structural_error);
  CHECK_THROWS_AS(TreeSpace::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                  structural_error);  // two parents
}

TEST_CASE("closure") {
  TreeSpace p2 = TreeSpace::path(2);
  CHECK(closure(NodeSet::of(p2, {"v0"})) == NodeSet::all(p2));
  CHECK(closure(NodeSet::of(p2, {"v2"})) == NodeSet::of(p2, {"v2"}));

  TreeSpace st = TreeSpace::star(3);
  CHECK(closure(NodeSet::of(st, {"leaf1"})) == NodeSet::of(st, {"leaf1", "root"}));
}

TEST_CASE("relative boundary") {
  TreeSpace p1 = TreeSpace::path(1);
  CHECK(boundary(NodeSet::of(p1, {"v0"})) == NodeSet::of(p1, {"v1"}));

  TreeSpace p3 = TreeSpace::path(3);
  CHECK(boundary(NodeSet(p3)).empty());
  CHECK(boundary(NodeSet::of(p3, {"v0", "v2"})) == NodeSet::of(p3, {"v1", "v2", "v3"}));
}

TEST_CASE("classification and canonical DCS parts") {
  TreeSpace p2 = TreeSpace::path(2);
  SetClassification c = classify_set(NodeSet::of(p2, {"v1"}));
  CHECK_FALSE(c.is_open);
  CHECK_FALSE(c.is_closed);
  CHECK(c.is_dcs);
  CHECK(c.canonical_closed == NodeSet::of(p2, {"v1", "v2"}));
  CHECK(c.canonical_boundary == NodeSet::of(p2, {"v2"}));

  SetClassification e = classify_set(NodeSet(p2));
  CHECK(e.is_open);
  CHECK(e.is_closed);
  CHECK(e.is_dcs);
  CHECK(e.index == 0);

  TreeSpace p3 = TreeSpace::path(3);
  CHECK_FALSE(classify_set(NodeSet::of(p3, {"v0", "v2"})).is_dcs);
}

TEST_CASE("relative interior and nowhere density") {
  TreeSpace p2 = TreeSpace::path(2);
  NodeSet b = NodeSet::of(p2, {"v2"}), a = NodeSet::of(p2, {"v1", "v2"});
  CHECK(interior_rel(b, a).empty());
  CHECK(is_nowhere_dense(b, a));

  CHECK(interior_rel(a, a) == a);
  CHECK_FALSE(is_nowhere_dense(a, a));

  TreeSpace st = TreeSpace::star(3);
  NodeSet r = NodeSet::of(st, {"root"});
  CHECK(interior_rel(r, NodeSet::all(st)).empty());
  CHECK(is_nowhere_dense(r, NodeSet::all(st)));

  CHECK_THROWS_AS(is_nowhere_dense(NodeSet::all(p2), a), precondition_error);
}

TEST_CASE("subspace views induce the relative relation") {
  TreeSpace p3 = TreeSpace::path(3);
  SpaceView tail = subspace(NodeSet::of(p3, {"v1", "v2", "v3"}));
  CHECK(tail.height() == 2);

  SpaceView discrete = subspace(NodeSet::of(p3, {"v0"}));
  CHECK(discrete.derived_set().empty());

  SpaceView gap = subspace(NodeSet::of(p3, {"v0", "v3"}));
  CHECK(gap.strict_descendant(p3.index_of("v3"), p3.index_of("v0")));
  CHECK(gap.height() == 1);
  CHECK(gap.derived_set() == NodeSet::of(p3, {"v3"}));
}
