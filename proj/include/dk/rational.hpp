#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace dk {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Rational rabs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

// Canonical "p/q" form, q >= 1, sign on the numerator. Integers print as "p/1".
inline std::string to_pq(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

// Accepts "p" or "p/q" with optional leading sign on p; q must be a positive
// integer literal. Anything else yields nullopt.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  Integer num = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    num = num * 10 + (s[i] - '0');
    ++i;
  }
  Integer den = 1;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      den = den * 10 + (s[i] - '0');
      ++i;
    }
    if (den == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace dk
