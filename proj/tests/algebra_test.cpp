#include <doctest.h>

#include "dk/algebra.hpp"
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

TEST_CASE("pointwise algebra") {
  TreeSpace p2 = TreeSpace::path(2);
  FnR f = alternating(p2, 2);
  FnR af = abs_f(f);
  for (int x = 0; x < p2.size(); ++x) CHECK(af(x) == 1);
  CHECK(d_norm(af) <= d_norm(f));

  NodeSet a = NodeSet::of(p2, {"v0"}), b = NodeSet::of(p2, {"v2"});
  FnR sum = add(FnR::indicator(a), FnR::indicator(b));
  FnR un = FnR::indicator(a | b);
  for (int x = 0; x < p2.size(); ++x) CHECK(sum(x) == un(x));

  FnR prod = mul(FnR::indicator(a | b), FnR::indicator(b));
  FnR inter = FnR::indicator(b);
  for (int x = 0; x < p2.size(); ++x) CHECK(prod(x) == inter(x));
  CHECK(d_norm(prod) <= d_norm(FnR::indicator(a | b)) * d_norm(FnR::indicator(b)));

  TreeSpace other = TreeSpace::path(2);
  CHECK_THROWS_AS(add(f, FnR::constant(other, Rational(1))), structural_error);
}

TEST_CASE("lattice identities") {
  TreeSpace p2 = TreeSpace::path(2);
  FnR f = alternating(p2, 2), g = FnR::indicator(NodeSet::of(p2, {"v1"}));
  FnR mx = lattice_max(f, f);
  for (int x = 0; x < p2.size(); ++x) CHECK(mx(x) == f(x));
  FnR lhs = add(lattice_max(f, g), lattice_min(f, g)), rhs = add(f, g);
  for (int x = 0; x < p2.size(); ++x) CHECK(lhs(x) == rhs(x));
  CHECK(d_norm(lattice_max(f, g)) <= d_norm(f) + d_norm(g));
}

TEST_CASE("reciprocal") {
  TreeSpace p2 = TreeSpace::path(2);
  FnR two = FnR::constant(p2, Rational(2));
  FnR half = invert(two);
  for (int x = 0; x < p2.size(); ++x) CHECK(half(x) == Rational(1, 2));
  CHECK(d_norm(half) <= Rational(1, 2) + Rational(2, 4));

  FnR f = add(FnR::constant(p2, Rational(1)), FnR::indicator(NodeSet::of(p2, {"v1"})));
  CHECK(d_norm(invert(f)) <= 1 + d_norm(f));  // delta = 1

  std::vector<Rational> v{Rational(1), Rational(0), Rational(2)};
  FnR z(p2, v);
  CHECK_THROWS_WITH_AS(invert(z), "invert: function vanishes at node v1", precondition_error);
}

TEST_CASE("lipschitz composition") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR f = alternating(p3, 3);
  FnR comp = compose_lipschitz(phi_abs(), f);
  CHECK(d_norm(comp) == 1);
  CHECK(d_norm(comp) <= comp.sup_norm() + phi_abs().constant * d_norm(f));

  // t -> t^2 with derivative bound on [-||f||, ||f||]
  auto sq = phi_poly({Rational(0), Rational(0), Rational(1)}, f.sup_norm());
  CHECK(sq.constant == 2 * f.sup_norm());
  FnR chi = FnR::indicator(NodeSet::of(p3, {"v0", "v2"}));
  FnR chisq = compose_lipschitz(phi_poly({Rational(0), Rational(0), Rational(1)}, Rational(1)), chi);
  for (int x = 0; x < p3.size(); ++x) CHECK(chisq(x) == chi(x));
}

TEST_CASE("modulus clamp") {
  TreeSpace p2 = TreeSpace::path(2);
  FnR f = alternating(p2, 2);
  FnR same = clamp_modulus(Rational(3), f);
  for (int x = 0; x < p2.size(); ++x) CHECK(same(x) == f(x));

  FnR big = scale(Rational(3), f);
  FnR clamped = clamp_modulus(Rational(1), big);
  for (int x = 0; x < p2.size(); ++x) CHECK(rabs(clamped(x)) == 1);
  for (int x = 0; x < p2.size(); ++x)
    for (int y = 0; y < p2.size(); ++y)
      CHECK(rabs(clamped(x) - clamped(y)) <= rabs(big(x) - big(y)));
  CHECK(d_norm(clamped) <= Rational(1) + qd_norm(big));
  CHECK_THROWS_AS(clamp_modulus(Rational(0), f), precondition_error);

  TreeSpace p1 = TreeSpace::path(1);
  std::vector<std::complex<double>> cv{{3.0, 4.0}, {0.5, 0.0}};
  FnC cf(p1, cv);
  FnC cc = clamp_modulus(1.0, cf);
  CHECK(std::abs(cc(0)) == doctest::Approx(1.0));
  CHECK(std::abs(cc(1)) == doctest::Approx(0.5));
}

TEST_CASE("restriction and norm-preserving extension") {
  TreeSpace p1 = TreeSpace::path(1);
  NodeSet w0 = NodeSet::of(p1, {"v0"});
  REQUIRE(is_open(w0));
  FnR one = FnR::constant(p1, Rational(1)).restrict_to(w0);
  CHECK(d_norm(mul_indicator(one, w0)) == 1);
  CHECK(d_norm(one) == 1);

  // whole-space carrier: the extension is the identity
  FnR f = FnR::indicator(NodeSet::of(p1, {"v1"}));
  FnR ext = extend_from(f);
  for (int x = 0; x < p1.size(); ++x) CHECK(ext(x) == f(x));

  // closed carrier {v2, v3} inside P_3 with alternating values
  TreeSpace p3 = TreeSpace::path(3);
  NodeSet w = NodeSet::of(p3, {"v2", "v3"});
  REQUIRE(is_closed(w));
  std::vector<Rational> vals(p3.size(), Rational(0));
  vals[p3.index_of("v2")] = 1;
  vals[p3.index_of("v3")] = -1;
  FnR g(p3, vals, w);
  CHECK(d_norm(g) == 3);
  FnR ge = extend_from(g);
  for (int x : w.indices()) CHECK(ge(x) == g(x));
  CHECK(d_norm(ge) == 3);

  CHECK_THROWS_AS(extend_from(FnR(p3, vals, NodeSet(p3))), precondition_error);
}

TEST_CASE("clamp commutes with restriction") {
  TreeSpace p3 = TreeSpace::path(3);
  FnR f = scale(Rational(5, 2), alternating(p3, 3));
  NodeSet w = NodeSet::of(p3, {"v0", "v2", "v3"});
  FnR a = clamp_modulus(Rational(2), f.restrict_to(w));
  FnR b = clamp_modulus(Rational(2), f).restrict_to(w);
  for (int x : w.indices()) CHECK(a(x) == b(x));
}
