#include <doctest.h>

#include "dk/algebra.hpp"
#include "dk/norms.hpp"
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

TEST_CASE("norms of indicators and alternating functions") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR chi = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  CHECK(d_norm(chi) == 3);
  CHECK(qd_norm(chi) == 3);

  for (int n : {1, 2, 3, 4, 5}) {
    TreeSpace p = TreeSpace::path(n);
    FnR f = alternating(p, n);
    CHECK(d_norm(f) == 2 * n + 1);
    CHECK(qd_norm(f) == 2 * n);
  }

  // nonnegative LSC functions have d-norm equal to the sup norm
  TreeSpace p1 = TreeSpace::path(1);
  NodeSet open_leaf = NodeSet::of(p1, {"v0"});
  REQUIRE(is_open(open_leaf));
  FnR g = FnR::indicator(open_leaf);
  CHECK(d_norm(g) == g.sup_norm());
}

TEST_CASE("semicontinuous decomposition") {
  TreeSpace p1 = TreeSpace::path(1);
  FnR f = FnR::indicator(NodeSet::of(p1, {"v1"}));
  CHECK(d_norm(f) == 2);
  auto [u, v] = lsc_decomposition(f);
  CHECK(u(p1.index_of("v0")) == 1);
  CHECK(u(p1.index_of("v1")) == 1);
  CHECK(v(p1.index_of("v0")) == 1);
  CHECK(v(p1.index_of("v1")) == 0);

  // contract case: nonnegative LSC input
  FnR g = FnR::indicator(NodeSet::of(p1, {"v0"}));
  auto [ug, vg] = lsc_decomposition(g);
  Rational sum(0);
  for (int x = 0; x < p1.size(); ++x) {
    CHECK(ug(x) - vg(x) == g(x));
    sum = std::max(sum, Rational(ug(x) + vg(x)));
  }
  CHECK(sum == d_norm(g));

  TreeSpace p2 = TreeSpace::path(2);
  auto [ua, va] = lsc_decomposition(alternating(p2, 2));
  Rational m(0);
  for (int x = 0; x < p2.size(); ++x) m = std::max(m, Rational(ua(x) + va(x)));
  CHECK(m == 5);
}

TEST_CASE("eps-chain lower bound is exact") {
  for (int n : {1, 2, 3}) {
    TreeSpace p = TreeSpace::path(n);
    FnR f = alternating(p, n);
    CHECK(eps_chain_lower_bound(f) == 2 * n + 1);
  }
  TreeSpace p2 = TreeSpace::path(2);
  CHECK(eps_chain_lower_bound(FnR::constant(p2, Rational(-7, 2))) == Rational(7, 2));

  TreeSpace p3 = TreeSpace::path(3);
  CHECK(eps_chain_lower_bound(FnR::indicator(NodeSet::of(p3, {"v1", "v3"}))) == 4);
}

TEST_CASE("cell closed form") {
  CHECK(cell_norm({Rational(0), Rational(1), Rational(0)}) == std::pair{Rational(2), Rational(2)});
  CHECK(cell_norm({Rational(1), Rational(-1), Rational(1), Rational(-1)}) ==
        std::pair{Rational(7), Rational(6)});
  CHECK(cell_norm({Rational(-5, 2)}) == std::pair{Rational(5, 2), Rational(0)});
  CHECK_THROWS_AS(cell_norm({}), precondition_error);

  TreeSpace p2 = TreeSpace::path(2);
  std::vector<Rational> a{Rational(0), Rational(1), Rational(0)};
  CHECK(norm_pair(make_cell(p2, a)) == cell_norm(a));
}

TEST_CASE("b14 report") {
  TreeSpace p3 = TreeSpace::path(3);
  NormReport r = b14_report(FnR::indicator(NodeSet::of(p3, {"v0", "v2"})));
  CHECK(r.sup_norm == 1);
  CHECK(r.d_norm == 3);
  CHECK(r.qd_norm == 3);
  CHECK(r.b14_lower == 2);
  CHECK(r.b14_upper == 10);
  CHECK(r.fl_value == 3);
  CHECK(r.lower_bound_18 == 3);

  NormReport c = b14_report(FnR::constant(p3, Rational(-4, 3)));
  CHECK(c.d_norm == Rational(4, 3));
  CHECK(c.fl_value == Rational(4, 3));
  CHECK(c.qd_norm == 0);

  TreeSpace p2 = TreeSpace::path(2);
  NormReport alt = b14_report(alternating(p2, 2));
  CHECK(alt.b14_lower == Rational(5, 2));
  CHECK(alt.d_norm == 5);
  CHECK(alt.b14_upper == 13);
}

TEST_CASE("closed cover maximum") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR f = alternating(p3, 3);
  CHECK(closed_cover_norm(f, {NodeSet::all(p3)}) == d_norm(f));
  CHECK(closed_cover_norm(f, {closure(NodeSet::of(p3, {"v0"})),
                              NodeSet::of(p3, {"v1", "v2", "v3"})}) == 7);
  CHECK(d_norm(f) == 7);

  CHECK_THROWS_AS(closed_cover_norm(f, {NodeSet::of(p3, {"v0"})}), precondition_error);
  CHECK_THROWS_AS(closed_cover_norm(f, {NodeSet::of(p3, {"v2", "v3"})}), precondition_error);
}

TEST_CASE("complex estimates are flagged") {
  TreeSpace p1 = TreeSpace::path(1);
  std::vector<std::complex<double>> v{{1.0, 0.0}, {-1.0, 0.0}};
  ApproxNormReport r = norm_estimate(FnC(p1, v));
  CHECK_FALSE(r.exact);
  CHECK(r.fl_value == doctest::Approx(3.0));  // matches the exact value of the real cell (1,-1)
  CHECK(r.d_lower <= r.fl_value);
  CHECK(r.fl_value <= r.d_upper);
}
