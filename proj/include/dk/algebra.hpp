#pragma once

// Pointwise algebra and lattice operations, composition with certified
// Lipschitz maps, the modulus clamp, and restriction / extension between
// subspaces. Norm-bound contracts are asserted by the property suite, not
// here.

#include <algorithm>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "dk/norms.hpp"

namespace dk {

namespace detail {
template <class Num>
void require_same_shape(const NodeFunction<Num>& f, const NodeFunction<Num>& g) {
  if (!f.same_shape(g)) throw structural_error("functions live on different spaces or domains");
}

template <class Num, class Op>
NodeFunction<Num> pointwise(const NodeFunction<Num>& f, Op op) {
  std::vector<Num> v(f.space().size(), Num(0));
  for (int x : f.domain().indices()) v[x] = op(f(x));
  return NodeFunction<Num>(f.space(), std::move(v), f.domain());
}

template <class Num, class Op>
NodeFunction<Num> pointwise2(const NodeFunction<Num>& f, const NodeFunction<Num>& g, Op op) {
  require_same_shape(f, g);
  std::vector<Num> v(f.space().size(), Num(0));
  for (int x : f.domain().indices()) v[x] = op(f(x), g(x));
  return NodeFunction<Num>(f.space(), std::move(v), f.domain());
}
}  // namespace detail

inline FnR abs_f(const FnR& f) {
  return detail::pointwise(f, [](const Rational& a) { return rabs(a); });
}
inline FnC abs_f(const FnC& f) {
  return detail::pointwise(f, [](const std::complex<double>& a) {
    return std::complex<double>(std::abs(a), 0.0);
  });
}

template <class Num>
NodeFunction<Num> add(const NodeFunction<Num>& f, const NodeFunction<Num>& g) {
  return detail::pointwise2(f, g, [](const Num& a, const Num& b) { return Num(a + b); });
}
template <class Num>
NodeFunction<Num> sub(const NodeFunction<Num>& f, const NodeFunction<Num>& g) {
  return detail::pointwise2(f, g, [](const Num& a, const Num& b) { return Num(a - b); });
}
template <class Num>
NodeFunction<Num> mul(const NodeFunction<Num>& f, const NodeFunction<Num>& g) {
  return detail::pointwise2(f, g, [](const Num& a, const Num& b) { return Num(a * b); });
}
template <class Num>
NodeFunction<Num> scale(const Num& t, const NodeFunction<Num>& f) {
  return detail::pointwise(f, [&](const Num& a) { return Num(t * a); });
}

inline FnR lattice_max(const FnR& f, const FnR& g) {
  return detail::pointwise2(f, g, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}
inline FnR lattice_min(const FnR& f, const FnR& g) {
  return detail::pointwise2(f, g, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

// Pointwise reciprocal; requires inf |f| > 0 and reports the offending node
// otherwise.
inline FnR invert(const FnR& f) {
  for (int x : f.domain().indices())
    if (f(x) == 0)
      throw precondition_error("invert: function vanishes at node " + f.space().label(x));
  return detail::pointwise(f, [](const Rational& a) { return Rational(1 / a); });
}

inline FnC invert(const FnC& f) {
  for (int x : f.domain().indices())
    if (std::abs(f(x)) <= scalar_traits<std::complex<double>>::tol)
      throw precondition_error("invert: function vanishes at node " + f.space().label(x));
  return detail::pointwise(f, [](const std::complex<double>& a) { return 1.0 / a; });
}

inline Rational min_modulus(const FnR& f) {
  Rational m;
  bool first = true;
  for (int x : f.domain().indices()) {
    Rational a = rabs(f(x));
    if (first || a < m) m = a;
    first = false;
  }
  return first ? Rational(0) : m;
}

// A scalar map together with a Lipschitz constant certified by the caller on
// the closed disc of radius ||f||_inf. Constants are hypotheses, not derived.
template <class Num>
struct LipschitzMap {
  std::function<Num(const Num&)> eval;
  typename scalar_traits<Num>::mag constant;
};

inline LipschitzMap<Rational> phi_abs() {
  return {[](const Rational& a) { return rabs(a); }, Rational(1)};
}

// Real polynomial sum c_k t^k with the derivative bound sum k |c_k| R^{k-1}
// as Lipschitz constant on [-R, R].
inline LipschitzMap<Rational> phi_poly(const std::vector<Rational>& coeffs, const Rational& radius) {
  Rational m(0), rpow(1);
  for (size_t k = 1; k < coeffs.size(); ++k) {
    m += Rational(static_cast<long>(k)) * rabs(coeffs[k]) * rpow;
    rpow *= radius;
  }
  return {[coeffs](const Rational& a) {
            Rational acc(0), p(1);
            for (const Rational& c : coeffs) {
              acc += c * p;
              p *= a;
            }
            return acc;
          },
          m};
}

template <class Num>
NodeFunction<Num> compose_lipschitz(const LipschitzMap<Num>& phi, const NodeFunction<Num>& f) {
  return detail::pointwise(f, [&](const Num& a) { return phi.eval(a); });
}

// Modulus clamp: values of modulus above lambda are radially projected onto
// the circle |z| = lambda. Lipschitz with constant one. Exact for rationals.
inline FnR clamp_modulus(const Rational& lambda, const FnR& f) {
  if (!(lambda > 0)) throw precondition_error("clamp_modulus: lambda must be positive");
  return detail::pointwise(f, [&](const Rational& a) {
    if (a > lambda) return lambda;
    if (a < -lambda) return Rational(-lambda);
    return a;
  });
}

inline FnC clamp_modulus(double lambda, const FnC& f) {
  if (!(lambda > 0)) throw precondition_error("clamp_modulus: lambda must be positive");
  return detail::pointwise(f, [&](const std::complex<double>& z) {
    double m = std::abs(z);
    return m > lambda ? z * (lambda / m) : z;
  });
}

inline LipschitzMap<Rational> phi_clamp(const Rational& lambda) {
  return {[lambda](const Rational& a) {
            if (a > lambda) return lambda;
            if (a < -lambda) return Rational(-lambda);
            return a;
          },
          Rational(1)};
}

// f . chi_W : f on W, 0 elsewhere, defined on the whole space.
inline FnR mul_indicator(const FnR& f, const NodeSet& W) {
  std::vector<Rational> v(f.space().size(), Rational(0));
  for (int x : (f.domain() & W).indices()) v[x] = f(x);
  return FnR(f.space(), std::move(v));
}

// Norm-preserving extension of a real f defined on W to the whole space.
//
// Split f|W = u - v by the semicontinuous decomposition, spread u and v over
// cl(W) by the lim-inf envelope (min over the W-points accumulating at the
// node, the node itself included when it lies in W), then fill the open
// complement of cl(W) by copying each node's deepest ancestor inside cl(W).
// The copies keep both extensions lower semi-continuous with u + v bounded by
// ||f||_D(W), which forces ||g||_D(K) = ||f||_D(W) exactly.
inline FnR extend_from(const FnR& f) {
  const TreeSpace& sp = f.space();
  const NodeSet& W = f.domain();
  if (W.empty()) throw precondition_error("extend_from: empty domain");
  auto [u, v] = lsc_decomposition(f);
  NodeSet cl = closure(W);
  std::vector<Rational> ue(sp.size(), Rational(0)), ve(sp.size(), Rational(0));
  for (int x : cl.indices()) {
    bool first = true;
    Rational mu(0), mv(0);
    auto take = [&](int y) {
      if (first) {
        mu = u(y);
        mv = v(y);
        first = false;
      } else {
        mu = std::min(mu, u(y));
        mv = std::min(mv, v(y));
      }
    };
    if (W.contains(x)) take(x);
    for (int y : sp.strict_descendants(x))
      if (W.contains(y)) take(y);
    ue[x] = mu;
    ve[x] = mv;
  }
  for (int x = 0; x < sp.size(); ++x) {
    if (cl.contains(x)) continue;
    int a = sp.parent(x);
    while (a != -1 && !cl.contains(a)) a = sp.parent(a);
    // a != -1 always: the root lies in cl(W) for nonempty W
    ue[x] = ue[a];
    ve[x] = ve[a];
  }
  std::vector<Rational> g(sp.size());
  for (int x = 0; x < sp.size(); ++x) g[x] = ue[x] - ve[x];
  return FnR(sp, std::move(g));
}

}  // namespace dk
