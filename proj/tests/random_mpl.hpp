#pragma once

#include "fixtures.hpp"

#include <random>

namespace fx {

inline Rational small_q(std::mt19937& g, int range = 3, int denom = 4) {
  std::uniform_int_distribution<int> n(-range, range), d(1, denom);
  return Rational(n(g)) / d(g);
}

inline KScalar small_k(std::mt19937& g) { return KScalar(sqrt2(), QPoly{small_q(g), small_q(g)}); }

// a_dim <= 1, v_dim <= 2, t_rank <= 2, denominators <= 4
inline Mpl random_mpl(std::mt19937& g) {
  std::uniform_int_distribution<int> two(0, 1), three(0, 2);
  Index a = two(g), v = three(g), t = three(g);
  Mpl m = mpl(sqrt2(), a, v, t);
  if (a == 1) {
    static const KScalar alphas[] = {KScalar(1), s2(), KScalar(Rational(1, 2)) * s2(), KScalar(Rational(3, 4))};
    KScalar alpha = alphas[g() % 4];
    Rational b = two(g) ? Rational(1, 2) : Rational(0);
    m.lambda_a = ckmat(1, 2, {CKScalar(1), CKScalar(KScalar(b), alpha)});
  }
  for (Index i = 0; i < a; ++i)
    for (Index j = 0; j < v; ++j) m.phi_v(i, j) = small_k(g);
  static const long taus1[] = {1, -1};
  static const long taus2[][4] = {{1, 0, 0, 1}, {-1, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 1, 0},
                                  {1, 2, 0, -1}, {-1, 1, 0, 1}, {0, -1, -1, 0}};
  if (t == 1) m.tau_t = zmat(1, 1, {taus1[g() % 2]});
  if (t == 2) {
    const long* c = taus2[g() % 7];
    m.tau_t = zmat(2, 2, {c[0], c[1], c[2], c[3]});
  }
  if (a == 1 && t > 0) {
    CKMatrix X(a, t);
    for (Index j = 0; j < t; ++j) X(0, j) = CKScalar(small_k(g), small_k(g));
    m.phi_t_lift = X + conj(X) * to_ck(to_q(m.tau_t));
    if (two(g)) {
      CKMatrix dual = dual_lattice_basis(m.lambda_a);
      std::uniform_int_distribution<int> c(-2, 2);
      for (Index j = 0; j < t; ++j) m.phi_t_lift.col(j) += dual * ckmat(2, 1, {CKScalar(c(g)), CKScalar(c(g))});
    }
  }
  return m;
}

}  // namespace fx
