#include "lnash/functors.hpp"

namespace lnash {

namespace {

const Rational kHalf(1, 2);

PolarizationWitness require_valid(const ValidationReport& r, const char* what) {
  if (!r.valid()) throw Error(Errc::InvalidInput, std::string(what) + " fails validation: " + r.first_failure());
  return *r.witness;
}

CKMatrix unit_columns(Index n, Index first, Index count) {
  CKMatrix E = CKMatrix::Zero(n, count);
  for (Index k = 0; k < count; ++k) E(first + k, k) = CKScalar(1);
  return E;
}

// z -> (M z + i M(i z)) / 2, the anti-linear part of a real-linear map M
// given by its values on the real basis `basis` of C^a
CKMatrix antilinear_rows(const CKMatrix& basis, const CKMatrix& values) {
  const Index a = basis.rows();
  KMatrix P(2 * a, 2 * a);
  P << real_part(basis), imag_part(basis);
  KMatrix Pinv = *inverse<KScalar>(P);
  auto apply = [&](const CKVector& z) -> CKVector {
    KVector xy(2 * a);
    xy << real_part(z), imag_part(z);
    return values * to_ck(KMatrix(Pinv * xy));
  };
  CKMatrix out(a, values.rows());
  for (Index l = 0; l < a; ++l) {
    CKVector e = CKVector::Zero(a);
    e(l) = CKScalar(1);
    CKVector ie = e * CKScalar::i();
    CKVector v = (apply(e) + apply(ie) * CKScalar::i()) * CKScalar(kHalf);
    out.row(l) = v.transpose();
  }
  return out;
}

}  // namespace

Fpl mpl_to_fpl(const Mpl& m, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_mpl(m, p), "MPL");
  const Index a = m.a_dim, v = m.v_dim, t = m.t_rank, n = a + v + t;
  const FieldPtr K = m.field ? m.field : rational_field();

  QMatrix tau = to_q(m.tau_t).transpose();
  QMatrix Id = QMatrix::Identity(t, t);
  // Lambda_aff basis: -1 eigenvectors land as real vectors, +1 as imaginary
  CKMatrix C = make_ck(to_k(QMatrix((Id - tau) * kHalf)), to_k(QMatrix((Id + tau) * kHalf)));
  CKMatrix Gbar = C * CKScalar(KScalar(0), KScalar(-1));
  // complex-linear correction that keeps the graph sigma-stable when the
  // lift is only equivariant modulo the dual lattice
  CKMatrix L = to_ck(tau) * conj(equivariance_defect(m)).transpose() * CKScalar(Rational(1, 4));
  CKMatrix Wt = m.phi_t_lift.transpose();

  Fpl f;
  f.field = K;
  f.n = n;
  f.fil_v = real_part(unit_columns(n, a, v));
  f.fil_a = real_part(unit_columns(n, a, v + t));
  f.lambda = CKMatrix::Zero(n, 2 * a + t);
  for (Index k = 0; k < 2 * a; ++k) {
    CKVector lam = m.lambda_a.col(k);
    CKVector bar = conj(CKMatrix(lam));
    CKVector beta = Wt * bar * CKScalar(kHalf) + L * lam;
    f.lambda.block(0, k, a, 1) = lam;
    f.lambda.block(a, k, v, 1) = to_ck(m.phi_v).transpose() * bar;
    f.lambda.block(a + v, k, t, 1) = Gbar * beta;
  }
  f.lambda.block(a + v, 2 * a, t, t) = C;
  f.witness = w;
  return f;
}

Mpl fpl_to_mpl(const Fpl& f, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_fpl(f, p), "FPL");
  const FieldPtr K = f.field ? f.field : rational_field();
  const Index n = f.n, m = f.lambda.cols();
  const KMatrix& fil_v = f.fil_v;
  KMatrix Q = quotient_coordinates(f.fil_a, n);
  KMatrix E = quotient_basis(f.fil_a, n);
  const Index a = Q.rows(), v = fil_v.cols();

  // Lambda_aff = Fil^a g ∩ Lambda in the coordinates of Lambda's basis
  CKMatrix Z = to_ck(Q) * f.lambda;
  QMatrix ker = nullspace<Rational>(restrict_scalars(Z, K));
  for (Index j = 0; j < ker.cols(); ++j) ker.col(j) *= Rational(common_denominator(ker.col(j)));
  ZMatrix B_aff = ker.cols() ? saturation(to_z(ker)) : ZMatrix(m, 0);
  const Index t = B_aff.cols();
  if (m - t != 2 * a) throw Error(Errc::InvalidInput, "FPL quotient lattice has wrong rank");
  ZMatrix sec = unimodular_complement(B_aff);

  CKMatrix lambda_a = Z * to_ck(to_q(sec));
  CKMatrix A = f.lambda * to_ck(to_q(B_aff));
  auto tau_aff = rational_coordinates(A, conj(A), K);
  if (!tau_aff) throw Error(Errc::InvalidInput, "Fil^a part of the lattice is not sigma-stable");

  // split each section vector's Fil^a component along Fil^v ⊕ (Lambda_aff ⊗ C)
  CKMatrix S = f.lambda * to_ck(to_q(sec));
  CKMatrix fa = S - to_ck(E) * (to_ck(Q) * S);
  CKMatrix basis(n, v + t);
  basis << to_ck(fil_v), A;
  auto coef = solve<CKScalar>(basis, fa);
  if (!coef) throw Error(Errc::InvalidInput, "Fil^a component outside Fil^v + Lambda_aff");
  CKMatrix alpha = coef->topRows(v);
  CKMatrix beta = coef->bottomRows(t) * CKScalar::i();

  CKMatrix pv = antilinear_rows(lambda_a, alpha);
  for (Index i = 0; i < pv.rows(); ++i)
    for (Index j = 0; j < pv.cols(); ++j)
      if (!pv(i, j).is_real()) throw Error(Errc::InvalidInput, "vector part of the graph is not real");

  Mpl out;
  out.field = K;
  out.a_dim = a;
  out.v_dim = v;
  out.t_rank = t;
  out.lambda_a = lambda_a;
  out.tau_t = to_z(QMatrix(-tau_aff->transpose()));
  out.phi_v = real_part(pv);
  out.phi_t_lift = antilinear_rows(lambda_a, beta) * CKScalar(2);
  out.witness = w;
  return out;
}

Fprs fpl_to_fprs(const Fpl& f, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_fpl(f, p), "FPL");
  return Fprs{f.field, f.n, f.fil_v, f.fil_a, f.lambda, w};
}

}  // namespace lnash
