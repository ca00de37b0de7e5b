#include <doctest.h>

#include "dk/algebra.hpp"
#include "dk/oscillation.hpp"
#include "dk/set_calculus.hpp"

using namespace dk;

namespace {
FnR alternating(const TreeSpace& p, int n) {
  std::vector<Rational> v(p.size());
  for (int j = 0; j <= n; ++j)
    v[p.index_of("v" + std::to_string(j))] = (j % 2 == 0) ? Rational(1) : Rational(-1);
  return FnR(p, std::move(v));
}

MagMap<Rational> expect_map(const TreeSpace& sp, std::vector<std::pair<const char*, Rational>> kv) {
  MagMap<Rational> m(sp.size(), Rational(0));
  for (auto& [id, val] : kv) m[sp.index_of(id)] = val;
  return m;
}
}  // namespace

TEST_CASE("lower oscillation") {
  TreeSpace p1 = TreeSpace::path(1);
  FnR c = FnR::constant(p1, Rational(5, 3));
  for (int x = 0; x < p1.size(); ++x) CHECK(lower_osc(c)[x] == 0);

  FnR chi = FnR::indicator(NodeSet::of(p1, {"v1"}));
  CHECK(lower_osc(chi) == expect_map(p1, {{"v0", Rational(0)}, {"v1", Rational(1)}}));

  TreeSpace p3 = TreeSpace::path(3);
  FnR f = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  CHECK(lower_osc(f) ==
        expect_map(p3, {{"v1", Rational(1)}, {"v2", Rational(1)}, {"v3", Rational(1)}}));
}

TEST_CASE("envelopes") {
  TreeSpace p1 = TreeSpace::path(1);
  NodeSet all1 = NodeSet::all(p1);
  MagMap<Rational> g = expect_map(p1, {{"v0", Rational(1)}});
  CHECK(upper_env<Rational>(p1, all1, g) ==
        expect_map(p1, {{"v0", Rational(1)}, {"v1", Rational(1)}}));

  // an already USC map is a fixed point
  MagMap<Rational> usc = expect_map(p1, {{"v1", Rational(2)}});
  CHECK(upper_env<Rational>(p1, all1, usc) == usc);
  CHECK(lower_env<Rational>(p1, all1, usc) ==
        expect_map(p1, {{"v0", Rational(0)}, {"v1", Rational(0)}}));

  TreeSpace p2 = TreeSpace::path(2);
  MagMap<Rational> h = expect_map(p2, {{"v0", Rational(1)}});
  auto uh = upper_env<Rational>(p2, NodeSet::all(p2), h);
  for (int x = 0; x < p2.size(); ++x) CHECK(uh[x] == 1);
}

TEST_CASE("oscillation levels of an indicator") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR f = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  auto p = full_profile(f);
  CHECK(p.d_index == 3);
  CHECK(p.level(2) ==
        expect_map(p3, {{"v1", Rational(1)}, {"v2", Rational(2)}, {"v3", Rational(2)}}));
  CHECK(p.level(3) ==
        expect_map(p3, {{"v1", Rational(1)}, {"v2", Rational(2)}, {"v3", Rational(3)}}));
  CHECK(p.level(9) == p.level(3));  // stabilized
}

TEST_CASE("alternating functions peak at twice the level") {
  for (int n : {1, 2, 3, 4}) {
    TreeSpace p = TreeSpace::path(n);
    FnR f = alternating(p, n);
    auto prof = full_profile(f);
    CHECK(prof.d_index == n);
    for (int j = 0; j <= n; ++j)
      CHECK(prof.omega()[p.index_of("v" + std::to_string(j))] == Rational(2 * j));
  }
}

TEST_CASE("semicontinuous functions stabilize immediately") {
  TreeSpace p3 = TreeSpace::path(3);
  NodeSet closed = NodeSet::of(p3, {"v2", "v3"});
  REQUIRE(is_closed(closed));
  FnR f = FnR::indicator(closed);
  auto p = full_profile(f);
  CHECK(p.d_index <= 1);
  CHECK(p.omega() == p.level(1));
}

TEST_CASE("oscillation set chains") {
  TreeSpace p3 = TreeSpace::path(3);

  // an indicator's chain at eps = 1 is the boundary tower
  NodeSet a = NodeSet::of(p3, {"v0", "v2"});
  FnR chi = FnR::indicator(a);
  auto sets = os_sets(chi, {Rational(1), Rational(1), Rational(1), Rational(1)});
  BoundaryTower t = boundary_tower(a);
  REQUIRE(sets.size() == 4);
  for (int j = 1; j <= 4; ++j) CHECK(sets[j - 1] == t.tower[j]);

  // eps = 0 keeps the previous set
  FnR f = alternating(p3, 3);
  auto zero = os_sets(f, {Rational(0)});
  CHECK(zero[0] == f.domain());

  auto twos = os_sets(f, {Rational(2), Rational(2), Rational(2)});
  CHECK(twos[0] == NodeSet::of(p3, {"v1", "v2", "v3"}));
  CHECK(twos[1] == NodeSet::of(p3, {"v2", "v3"}));
  CHECK(twos[2] == NodeSet::of(p3, {"v3"}));
}

TEST_CASE("baire indices") {
  TreeSpace p3 = TreeSpace::path(3);
  NodeSet a = NodeSet::of(p3, {"v0", "v2"});
  CHECK(baire_index(FnR::indicator(a)) == boundary_tower(a).index);

  CHECK(baire_index(FnR::constant(p3, Rational(7))) == 0);

  TreeSpace p2 = TreeSpace::path(2);
  FnR cell = make_cell(p2, {Rational(0), Rational(1), Rational(0)});
  CHECK(baire_index(cell) == 2);

  CHECK_THROWS_AS(baire_index(cell, Rational(0)), precondition_error);
  CHECK_THROWS_AS(baire_index(cell, Rational(-1)), precondition_error);
}

TEST_CASE("chain search characterization") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR c = FnR::constant(p3, Rational(2));
  CHECK(osc_by_chain_search(c, 2, p3.index_of("v1")) == 0);  // empty-sum convention

  FnR chi = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  CHECK(osc_by_chain_search(chi, 3, p3.index_of("v3")) == 3);

  FnR f = alternating(p3, 3);
  CHECK(osc_by_chain_search(f, 3, p3.index_of("v3")) == 6);
}

TEST_CASE("omega-level chains") {
  TreeSpace p3 = TreeSpace::path(3);
  CHECK(omega_level_sets(FnR::constant(p3, Rational(1)), Rational(1)).second == 0);

  NodeSet a = NodeSet::of(p3, {"v0", "v2"});
  FnR chi = FnR::indicator(a);
  auto [sets, idx] = omega_level_sets(chi, Rational(1));
  CHECK(Rational(idx) <= qd_norm(chi));
  CHECK(idx == static_cast<int>(sets.size()));

  FnR f = alternating(p3, 3);
  auto six = omega_level_sets(f, Rational(6));
  CHECK(six.second == 1);
  CHECK(six.first[0] == NodeSet::of(p3, {"v3"}));

  CHECK_THROWS_AS(omega_level_sets(f, Rational(0)), precondition_error);
}

TEST_CASE("local qD chains") {
  TreeSpace p1 = TreeSpace::path(1);
  FnR chi = FnR::indicator(NodeSet::of(p1, {"v1"}));
  CHECK(qd_local_index(chi, Rational(1)) == 1);

  TreeSpace p3 = TreeSpace::path(3);
  CHECK(qd_local_index(FnR::constant(p3, Rational(3)), Rational(1, 2)) == 0);

  FnR f = alternating(p3, 3);
  CHECK(qd_local_index(f, Rational(1, 2)) == omega_level_sets(f, Rational(1, 2)).second);
  CHECK_THROWS_AS(qd_local_index(f, Rational(0)), precondition_error);
}

TEST_CASE("breakpoint tables cover the index") {
  TreeSpace p2 = TreeSpace::path(2);
  FnR cell = make_cell(p2, {Rational(0), Rational(1, 2), Rational(0)});
  auto bps = baire_breakpoints(cell);
  REQUIRE_FALSE(bps.empty());
  int best = 0;
  for (const auto& e : bps) best = std::max(best, baire_index(cell, e));
  CHECK(best == baire_index(cell));
}

TEST_CASE("complex layer oscillations") {
  TreeSpace p1 = TreeSpace::path(1);
  std::vector<std::complex<double>> v{{0.0, 0.0}, {3.0, 4.0}};
  FnC f(p1, v);
  auto p = full_profile(f);
  CHECK(p.omega()[p1.index_of("v1")] == doctest::Approx(5.0));
  CHECK(p.omega()[p1.index_of("v0")] == doctest::Approx(0.0));
}
