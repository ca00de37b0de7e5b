#pragma once

// Node-uniform bounded functions. The real core stores exact rationals; a
// complex layer stores std::complex<double> and compares magnitudes with an
// absolute tolerance of 1e-9. An integer instantiation is provided for
// integer-valued functions (indicators and their oscillations stay integral).

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "dk/rational.hpp"
#include "dk/space.hpp"

namespace dk {

template <class Num>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  using mag = Rational;
  static constexpr bool exact = true;
  static mag abs(const Rational& v) { return rabs(v); }
  static mag dist(const Rational& a, const Rational& b) { return rabs(a - b); }
  static bool eq(const mag& a, const mag& b) { return a == b; }
  static bool ge(const mag& a, const mag& b) { return a >= b; }
  static mag zero() { return Rational(0); }
};

template <>
struct scalar_traits<long long> {
  using mag = long long;
  static constexpr bool exact = true;
  static mag abs(long long v) { return v < 0 ? -v : v; }
  static mag dist(long long a, long long b) { return abs(a - b); }
  static bool eq(mag a, mag b) { return a == b; }
  static bool ge(mag a, mag b) { return a >= b; }
  static mag zero() { return 0; }
};

template <>
struct scalar_traits<std::complex<double>> {
  using mag = double;
  static constexpr bool exact = false;
  static constexpr double tol = 1e-9;
  static mag abs(const std::complex<double>& v) { return std::abs(v); }
  static mag dist(const std::complex<double>& a, const std::complex<double>& b) {
    return std::abs(a - b);
  }
  static bool eq(mag a, mag b) { return std::fabs(a - b) <= tol; }
  static bool ge(mag a, mag b) { return a >= b - tol; }
  static mag zero() { return 0.0; }
};

template <class Num>
class NodeFunction {
 public:
  using traits = scalar_traits<Num>;
  using mag = typename traits::mag;

  NodeFunction(const TreeSpace& sp, std::vector<Num> values)
      : sp_(&sp), v_(std::move(values)), dom_(NodeSet::all(sp)) {
    if (static_cast<int>(v_.size()) != sp.size())
      throw structural_error("value vector does not match the space");
  }
  NodeFunction(const TreeSpace& sp, std::vector<Num> values, NodeSet domain)
      : sp_(&sp), v_(std::move(values)), dom_(std::move(domain)) {
    if (static_cast<int>(v_.size()) != sp.size())
      throw structural_error("value vector does not match the space");
    if (&dom_.space() != sp_) throw structural_error("domain lives on a different space");
  }

  static NodeFunction constant(const TreeSpace& sp, const Num& c) {
    return NodeFunction(sp, std::vector<Num>(sp.size(), c));
  }
  static NodeFunction indicator(const NodeSet& A) {
    const TreeSpace& sp = A.space();
    std::vector<Num> v(sp.size(), Num(0));
    for (int i : A.indices()) v[i] = Num(1);
    return NodeFunction(sp, std::move(v));
  }

  const TreeSpace& space() const { return *sp_; }
  const NodeSet& domain() const { return dom_; }
  const Num& operator()(int x) const { return v_[x]; }
  const std::vector<Num>& values() const { return v_; }

  NodeFunction restrict_to(const NodeSet& W) const {
    return NodeFunction(*sp_, v_, dom_ & W);
  }

  mag sup_norm() const {
    mag m = traits::zero();
    for (int x : dom_.indices()) m = std::max(m, traits::abs(v_[x]));
    return m;
  }

  bool same_shape(const NodeFunction& g) const {
    return sp_ == g.sp_ && dom_ == g.dom_;
  }

 private:
  const TreeSpace* sp_;
  std::vector<Num> v_;
  NodeSet dom_;
};

using FnR = NodeFunction<Rational>;
using FnZ = NodeFunction<long long>;
using FnC = NodeFunction<std::complex<double>>;

// A per-node map of oscillation magnitudes (rational for the exact core).
template <class Num>
using MagMap = std::vector<typename scalar_traits<Num>::mag>;

}  // namespace dk
