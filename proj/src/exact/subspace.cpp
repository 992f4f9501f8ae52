#include "lnash/exact/subspace.hpp"

namespace lnash {

namespace {

Index degree_of(const FieldPtr& K) { return K ? K->degree() : 1; }

void check_rows(const KMatrix& U, const KMatrix& W) {
  if (U.rows() != W.rows()) throw Error(Errc::DimensionMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

KMatrix span_basis(const KMatrix& U) { return column_echelon<KScalar>(U); }

KMatrix subspace_sum(const KMatrix& U, const KMatrix& W) {
  check_rows(U, W);
  KMatrix M(U.rows(), U.cols() + W.cols());
  M << U, W;
  return span_basis(M);
}

KMatrix subspace_intersect(const KMatrix& U, const KMatrix& W) {
  check_rows(U, W);
  KMatrix Ub = span_basis(U), Wb = span_basis(W);
  KMatrix M(U.rows(), Ub.cols() + Wb.cols());
  M << Ub, -Wb;
  KMatrix N = nullspace<KScalar>(M);
  return span_basis(Ub * N.topRows(Ub.cols()));
}

KMatrix quotient_basis(const KMatrix& U, Index ambient) {
  if (U.rows() != ambient) throw Error(Errc::DimensionMismatch, "quotient: ambient dimension mismatch");
  auto e = rref<KScalar>(U.transpose());
  std::vector<bool> piv(ambient, false);
  for (Index c : e.pivots) piv[c] = true;
  KMatrix E = KMatrix::Zero(ambient, ambient - e.rank());
  Index k = 0;
  for (Index i = 0; i < ambient; ++i)
    if (!piv[i]) E(i, k++) = KScalar(1);
  return E;
}

KMatrix quotient_coordinates(const KMatrix& U, Index ambient) {
  KMatrix B = span_basis(U);
  KMatrix E = quotient_basis(U, ambient);
  KMatrix M(ambient, ambient);
  M << B, E;
  KMatrix inv = *inverse<KScalar>(M);
  return inv.bottomRows(E.cols());
}

KMatrix annihilator(const KMatrix& U, Index ambient) {
  if (U.rows() != ambient) throw Error(Errc::DimensionMismatch, "annihilator: ambient dimension mismatch");
  if (U.cols() == 0) return KMatrix::Identity(ambient, ambient);
  return nullspace<KScalar>(U.transpose()).transpose();
}

bool in_span(const KMatrix& U, const KVector& v) {
  if (U.rows() != v.rows()) throw Error(Errc::DimensionMismatch, "membership: vector length mismatch");
  return in_column_span<KScalar>(U, v);
}

bool contains(const KMatrix& U, const KMatrix& W) {
  check_rows(U, W);
  return in_column_span<KScalar>(U, W);
}

bool same_span(const KMatrix& U, const KMatrix& W) { return contains(U, W) && contains(W, U); }

QMatrix restrict_scalars(const KMatrix& M, const FieldPtr& K) {
  const Index d = degree_of(K);
  QMatrix R = QMatrix::Zero(d * M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) {
      const KScalar& x = M(i, j);
      if (x.field()) common_field(x.field(), K);
      for (Index k = 0; k < static_cast<Index>(x.coeffs().size()); ++k) R(d * i + k, j) = x.coeffs()[k];
    }
  return R;
}

QMatrix restrict_scalars(const CKMatrix& M, const FieldPtr& K) {
  const Index d = degree_of(K);
  QMatrix R = QMatrix::Zero(2 * d * M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) {
      const CKScalar& x = M(i, j);
      if (x.field()) common_field(x.field(), K);
      const auto& re = x.re().coeffs();
      const auto& im = x.im().coeffs();
      for (Index k = 0; k < static_cast<Index>(re.size()); ++k) R(2 * d * i + k, j) = re[k];
      for (Index k = 0; k < static_cast<Index>(im.size()); ++k) R(2 * d * i + d + k, j) = im[k];
    }
  return R;
}

QMatrix restrict_scalars(const CKMatrix& M) { return restrict_scalars(M, field_of(M)); }

CKMatrix extend_scalars(const QMatrix& R, Index rows, const FieldPtr& K) {
  const Index d = degree_of(K);
  if (R.rows() != 2 * d * rows) throw Error(Errc::DimensionMismatch, "extend_scalars: wrong row count");
  CKMatrix M(rows, R.cols());
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < R.cols(); ++j) {
      QPoly re(d), im(d);
      for (Index k = 0; k < d; ++k) {
        re[k] = R(2 * d * i + k, j);
        im[k] = R(2 * d * i + d + k, j);
      }
      poly::trim(re);
      poly::trim(im);
      M(i, j) = CKScalar(re.size() > 1 ? KScalar(K, re) : KScalar(re.empty() ? Rational(0) : re[0]),
                         im.size() > 1 ? KScalar(K, im) : KScalar(im.empty() ? Rational(0) : im[0]));
    }
  return M;
}

KMatrix extend_real_scalars(const QMatrix& R, Index rows, const FieldPtr& K) {
  const Index d = degree_of(K);
  if (R.rows() != d * rows) throw Error(Errc::DimensionMismatch, "extend_scalars: wrong row count");
  KMatrix M(rows, R.cols());
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < R.cols(); ++j) {
      QPoly c(d);
      for (Index k = 0; k < d; ++k) c[k] = R(d * i + k, j);
      poly::trim(c);
      M(i, j) = c.size() > 1 ? KScalar(K, c) : KScalar(c.empty() ? Rational(0) : c[0]);
    }
  return M;
}

Index rational_rank(const CKMatrix& C, const FieldPtr& K) { return rank<Rational>(restrict_scalars(C, K)); }

bool in_rational_span(const CKMatrix& C, const CKMatrix& v, const FieldPtr& K) {
  return rational_coordinates(C, v, K).has_value();
}

std::optional<QMatrix> rational_coordinates(const CKMatrix& C, const CKMatrix& v, const FieldPtr& K) {
  if (C.rows() != v.rows()) throw Error(Errc::DimensionMismatch, "membership: vector length mismatch");
  return solve<Rational>(restrict_scalars(C, K), restrict_scalars(v, K));
}

CKMatrix rational_span_basis(const CKMatrix& C, const FieldPtr& K) {
  return extend_scalars(column_echelon<Rational>(restrict_scalars(C, K)), C.rows(), K);
}

QMatrix rational_intersection(const CKMatrix& C, const KMatrix& re_sub, const KMatrix& im_sub, const FieldPtr& K) {
  const Index n = C.rows();
  if (re_sub.rows() != n || im_sub.rows() != n)
    throw Error(Errc::DimensionMismatch, "intersection: ambient dimension mismatch");
  KMatrix Pre = annihilator(re_sub, n), Pim = annihilator(im_sub, n);
  KMatrix cond(Pre.rows() + Pim.rows(), C.cols());
  cond << Pre * real_part(C), Pim * imag_part(C);
  return nullspace<Rational>(restrict_scalars(cond, K));
}

}  // namespace lnash
