#include "lnash/exact/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lnash::poly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r(a);
  trim(r);
  int db = degree(b);
  if (degree(r) < db) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (int k = degree(r); k >= db; --k) {
    Rational c = r[k] / lead;
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

QPoly mod(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, Rational(1) / a.back());
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& b) {
  // invariant: r0 = s0*a mod b, r1 = s1*a mod b
  QPoly r0 = a, r1 = b, s0{Rational(1)}, s1{};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {{}, {}};
  Rational inv = Rational(1) / r0.back();
  return {scale(r0, inv), mod(scale(s0, inv), b)};
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

Rational eval(const QPoly& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const QPoly& a, const Rational& x) {
  Rational v = eval(a, x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::pair<Rational, Rational> eval_interval(const QPoly& a, const Rational& lo, const Rational& hi) {
  Rational l = 0, h = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    Rational p[4] = {l * lo, l * hi, h * lo, h * hi};
    l = *std::min_element(p, p + 4) + *it;
    h = *std::max_element(p, p + 4) + *it;
  }
  return {l, h};
}

std::vector<QPoly> sturm_chain(const QPoly& a) {
  std::vector<QPoly> chain;
  QPoly p0 = a, p1 = derivative(a);
  trim(p0);
  chain.push_back(p0);
  while (!p1.empty()) {
    chain.push_back(p1);
    QPoly r = scale(mod(p0, p1), Rational(-1));
    p0 = std::move(p1);
    p1 = std::move(r);
  }
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_roots(const QPoly& a, const Rational& lo, const Rational& hi) {
  auto chain = sturm_chain(a);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace lnash::poly
