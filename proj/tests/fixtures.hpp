#pragma once

#include "lnash/structures.hpp"

namespace fx {

using namespace lnash;

inline FieldPtr sqrt2() {
  static FieldPtr f = make_field({Integer(-2), Integer(0), Integer(1)}, Rational(1), Rational(2));
  return f;
}

inline KScalar s2() { return KScalar::generator(sqrt2()); }
inline CKScalar I(const KScalar& y = KScalar(1)) { return CKScalar(KScalar(0), y); }

inline KMatrix kmat(Index r, Index c, std::initializer_list<KScalar> v) {
  KMatrix M(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) M(i, j) = *it++;
  return M;
}

inline CKMatrix ckmat(Index r, Index c, std::initializer_list<CKScalar> v) {
  CKMatrix M(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) M(i, j) = *it++;
  return M;
}

inline ZMatrix zmat(Index r, Index c, std::initializer_list<long> v) {
  ZMatrix M(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) M(i, j) = *it++;
  return M;
}

inline Fprs line(const FieldPtr& f, bool vec, bool aff, CKMatrix lambda) {
  Fprs x;
  x.field = f;
  x.n = 1;
  x.fil_v = vec ? KMatrix::Identity(1, 1) : KMatrix(1, 0);
  x.fil_a = aff ? KMatrix::Identity(1, 1) : KMatrix(1, 0);
  x.lambda_r = std::move(lambda);
  return x;
}

inline Fprs additive() { return line(rational_field(), true, true, CKMatrix(1, 0)); }
inline Fprs multiplicative() { return line(rational_field(), false, true, ckmat(1, 1, {I()})); }
inline Fprs twisted() { return line(rational_field(), false, true, ckmat(1, 1, {CKScalar(1)})); }
inline Fprs elliptic() { return line(sqrt2(), false, false, ckmat(1, 2, {CKScalar(1), I(s2())})); }

inline TripleD triple(Fprs x, KMatrix gamma) { return {std::move(x), std::move(gamma)}; }
inline KMatrix no_gamma(Index n = 1) { return KMatrix(n, 0); }
inline KMatrix unit_gamma() { return KMatrix::Identity(1, 1); }

inline Mpl mpl(const FieldPtr& f, Index a, Index v, Index t) {
  Mpl m;
  m.field = f;
  m.a_dim = a;
  m.v_dim = v;
  m.t_rank = t;
  m.lambda_a = CKMatrix(a, 2 * a);
  m.tau_t = ZMatrix::Identity(t, t);
  m.phi_v = KMatrix::Zero(a, v);
  m.phi_t_lift = CKMatrix::Zero(a, t);
  return m;
}

inline CKMatrix elliptic_lattice() { return ckmat(1, 2, {CKScalar(1), I(s2())}); }

inline Mpl additive_mpl() { return mpl(rational_field(), 0, 1, 0); }
inline Mpl multiplicative_mpl() { return mpl(rational_field(), 0, 0, 1); }
inline Mpl twisted_mpl() {
  Mpl m = mpl(rational_field(), 0, 0, 1);
  m.tau_t = zmat(1, 1, {-1});
  return m;
}
inline Mpl elliptic_mpl() {
  Mpl m = mpl(sqrt2(), 1, 0, 0);
  m.lambda_a = elliptic_lattice();
  return m;
}
// graph of lambda -> conj(lambda) over the elliptic curve
inline Mpl elliptic_additive_mpl() {
  Mpl m = mpl(sqrt2(), 1, 1, 0);
  m.lambda_a = elliptic_lattice();
  m.phi_v = KMatrix::Identity(1, 1);
  return m;
}
// elliptic curve extended by a torus through the lift w
inline Mpl elliptic_torus_mpl(const CKScalar& w, long tau) {
  Mpl m = mpl(sqrt2(), 1, 0, 1);
  m.lambda_a = elliptic_lattice();
  m.tau_t = zmat(1, 1, {tau});
  m.phi_t_lift = ckmat(1, 1, {w});
  return m;
}

}  // namespace fx

namespace fx {

// block direct sum of two MPLs over the same field
inline Mpl mpl_sum(const Mpl& x, const Mpl& y) {
  auto f = x.field && x.field->degree() > 1 ? x.field : y.field;
  Mpl m = mpl(f, x.a_dim + y.a_dim, x.v_dim + y.v_dim, x.t_rank + y.t_rank);
  m.lambda_a = CKMatrix::Zero(m.a_dim, 2 * m.a_dim);
  m.lambda_a.block(0, 0, x.a_dim, 2 * x.a_dim) = x.lambda_a;
  m.lambda_a.block(x.a_dim, 2 * x.a_dim, y.a_dim, 2 * y.a_dim) = y.lambda_a;
  m.tau_t = ZMatrix::Zero(m.t_rank, m.t_rank);
  m.tau_t.block(0, 0, x.t_rank, x.t_rank) = x.tau_t;
  m.tau_t.block(x.t_rank, x.t_rank, y.t_rank, y.t_rank) = y.tau_t;
  m.phi_v.block(0, 0, x.a_dim, x.v_dim) = x.phi_v;
  m.phi_v.block(x.a_dim, x.v_dim, y.a_dim, y.v_dim) = y.phi_v;
  m.phi_t_lift.block(0, 0, x.a_dim, x.t_rank) = x.phi_t_lift;
  m.phi_t_lift.block(x.a_dim, x.t_rank, y.a_dim, y.t_rank) = y.phi_t_lift;
  return m;
}

}  // namespace fx
