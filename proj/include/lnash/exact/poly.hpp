#pragma once

#include "lnash/exact/rational.hpp"

#include <utility>
#include <vector>

namespace lnash {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

namespace poly {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly mod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);
// returns (g, s) with g = gcd(a, b) monic and s*a = g mod b
std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
int sign_at(const QPoly& a, const Rational& x);

// enclosure of a over [lo, hi] by interval Horner evaluation
std::pair<Rational, Rational> eval_interval(const QPoly& a, const Rational& lo, const Rational& hi);

std::vector<QPoly> sturm_chain(const QPoly& a);
int sign_variations(const std::vector<QPoly>& chain, const Rational& x);
// number of distinct real roots in (lo, hi]; requires a(lo) != 0
int count_roots(const QPoly& a, const Rational& lo, const Rational& hi);

}  // namespace poly
}  // namespace lnash
