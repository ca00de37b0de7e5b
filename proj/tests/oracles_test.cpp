#include <doctest.h>

#include "dk/enumerate.hpp"
#include "dk/norms.hpp"
#include "dk/oracles.hpp"
#include "dk/set_calculus.hpp"

using namespace dk;

namespace {
FnR alternating(const TreeSpace& p, int n) {
  std::vector<Rational> v(p.size());
  for (int j = 0; j <= n; ++j)
    v[p.index_of("v" + std::to_string(j))] = (j % 2 == 0) ? Rational(1) : Rational(-1);
  return FnR(p, std::move(v));
}
}  // namespace

TEST_CASE("chain-enumeration oracle matches the recursion") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR chi = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  auto prof = full_profile(chi);
  for (int k = 0; k <= prof.d_index + 1; ++k) {
    auto o = oracles::osc_by_definition(chi, k);
    for (int x = 0; x < p3.size(); ++x) CHECK(o[x] == prof.level(k)[x]);
  }

  FnR f = alternating(p3, 3);
  auto pf = full_profile(f);
  auto o3 = oracles::osc_by_definition(f, 3);
  for (int x = 0; x < p3.size(); ++x) CHECK(o3[x] == pf.level(3)[x]);

  FnR c = FnR::constant(p3, Rational(9, 7));
  auto oc = oracles::osc_by_definition(c, 2);
  for (int x = 0; x < p3.size(); ++x) CHECK(oc[x] == 0);
}

TEST_CASE("eps-sequence search values") {
  TreeSpace p2 = TreeSpace::path(2);
  CHECK(oracles::eps_sequence_search(alternating(p2, 2)) == 4);
  CHECK(oracles::eps_sequence_search(FnR::constant(p2, Rational(5))) == 0);

  TreeSpace p3 = TreeSpace::path(3);
  CHECK(oracles::eps_sequence_search(FnR::indicator(NodeSet::of(p3, {"v0", "v2"}))) == 3);
}

TEST_CASE("partition enumeration agrees with the decomposition count") {
  TreeSpace p5 = TreeSpace::path(5);
  NodeSet even = NodeSet::of(p5, {"v0", "v2", "v4"});
  CHECK(oracles::exhaustive_dcs_min_parts(even) == 3);

  TreeSpace p3 = TreeSpace::path(3);
  CHECK(oracles::exhaustive_dcs_min_parts(NodeSet::of(p3, {"v1"})) == 1);
  CHECK(oracles::exhaustive_dcs_min_parts(NodeSet(p3)) == 0);
}

TEST_CASE("exhaustive locally-closed search") {
  TreeSpace p3 = TreeSpace::path(3);
  CHECK(oracles::exhaustive_is_dcs(NodeSet::of(p3, {"v1"})));
  CHECK_FALSE(oracles::exhaustive_is_dcs(NodeSet::of(p3, {"v0", "v2"})));
}

TEST_CASE("rooted tree enumeration counts") {
  const size_t expect[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (int n = 1; n <= 10; ++n) CHECK(count_rooted_trees(n) == expect[n - 1]);
  // every parent vector builds a valid space of the right size
  for (const auto& parent : rooted_trees(6)) {
    TreeSpace sp = TreeSpace::from_parents(parent);
    CHECK(sp.size() == 6);
  }
}
