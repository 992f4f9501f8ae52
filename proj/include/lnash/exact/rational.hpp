#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lnash {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline Integer num(const Rational& q) { return mp::numerator(q); }
inline Integer den(const Rational& q) { return mp::denominator(q); }
inline bool is_integral(const Rational& q) { return den(q) == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(num(q), den(q)); }

inline Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return mp::abs(a / mp::gcd(a, b) * b);
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

}  // namespace lnash
