#include "lnash/exact/linalg.hpp"

namespace lnash {

CKMatrix make_ck(const KMatrix& re, const KMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw Error(Errc::DimensionMismatch, "real and imaginary parts differ in shape");
  CKMatrix M(re.rows(), re.cols());
  for (Index i = 0; i < re.rows(); ++i)
    for (Index j = 0; j < re.cols(); ++j) M(i, j) = CKScalar(re(i, j), im(i, j));
  return M;
}

KMatrix real_part(const CKMatrix& M) {
  KMatrix R(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) R(i, j) = M(i, j).re();
  return R;
}

KMatrix imag_part(const CKMatrix& M) {
  KMatrix R(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) R(i, j) = M(i, j).im();
  return R;
}

CKMatrix conj(const CKMatrix& M) {
  CKMatrix R(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) R(i, j) = M(i, j).conj();
  return R;
}

ZMatrix to_z(const QMatrix& M) {
  ZMatrix Z(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) {
      if (!is_integral(M(i, j))) throw Error(Errc::InvalidInput, "non-integral entry " + M(i, j).str());
      Z(i, j) = num(M(i, j));
    }
  return Z;
}

bool is_rational(const KMatrix& M) {
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_rational()) return false;
  return true;
}

bool is_integral(const KMatrix& M) {
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_rational() || !is_integral(M(i, j).rational_value())) return false;
  return true;
}

QMatrix to_rational(const KMatrix& M) {
  QMatrix Q(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) {
      if (!M(i, j).is_rational()) throw Error(Errc::InvalidInput, "irrational entry " + M(i, j).to_string());
      Q(i, j) = M(i, j).rational_value();
    }
  return Q;
}

FieldPtr field_of(const KMatrix& M) {
  FieldPtr f;
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) f = common_field(f, M(i, j).field());
  return f;
}

FieldPtr field_of(const CKMatrix& M) {
  FieldPtr f;
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) f = common_field(f, M(i, j).field());
  return f;
}

}  // namespace lnash
