#pragma once

#include "lnash/exact/number_field.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <vector>

namespace lnash {

using Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;
using ZMatrix = Mat<Integer>;
using ZVector = Vec<Integer>;
using KMatrix = Mat<KScalar>;
using KVector = Vec<KScalar>;
using CKMatrix = Mat<CKScalar>;
using CKVector = Vec<CKScalar>;

template <class S>
struct Echelon {
  Mat<S> R;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// reduced row echelon form over a field
template <class S>
Echelon<S> rref(Mat<S> M) {
  std::vector<Index> piv;
  Index r = 0;
  const Index rows = M.rows(), cols = M.cols();
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(M(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) M.row(p).swap(M.row(r));
    S inv = S(1) / M(r, c);
    for (Index j = c; j < cols; ++j) M(r, j) = M(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(M(i, c))) continue;
      S f = M(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(M(r, j))) M(i, j) -= f * M(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(M), std::move(piv)};
}

template <class S>
Index rank(const Mat<S>& M) {
  return rref<S>(M).rank();
}

// columns form a basis of the right kernel
template <class S>
Mat<S> nullspace(const Mat<S>& M) {
  auto e = rref<S>(M);
  const Index n = M.cols();
  std::vector<bool> is_piv(n, false);
  for (Index c : e.pivots) is_piv[c] = true;
  Mat<S> N = Mat<S>::Zero(n, n - e.rank());
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    N(f, k) = S(1);
    for (Index i = 0; i < e.rank(); ++i) N(e.pivots[i], k) = -e.R(i, f);
    ++k;
  }
  return N;
}

// some X with A X = B (free variables zero), or nothing
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& A, const Mat<S>& B) {
  Mat<S> aug(A.rows(), A.cols() + B.cols());
  aug << A, B;
  auto e = rref<S>(aug);
  Mat<S> X = Mat<S>::Zero(A.cols(), B.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    Index c = e.pivots[i];
    if (c >= A.cols()) return std::nullopt;
    X.row(c) = e.R.row(i).tail(B.cols());
  }
  return X;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  if (rank<S>(A) != A.rows()) return std::nullopt;
  return solve<S>(A, Mat<S>::Identity(A.rows(), A.rows()));
}

template <class S>
S determinant(Mat<S> M) {
  const Index n = M.rows();
  S det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && is_zero(M(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      M.row(p).swap(M.row(c));
      det = -det;
    }
    det = det * M(c, c);
    S inv = S(1) / M(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(M(i, c))) continue;
      S f = M(i, c) * inv;
      for (Index j = c; j < n; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return det;
}

// canonical basis of the column span: transpose of the nonzero rref rows
template <class S>
Mat<S> column_echelon(const Mat<S>& M) {
  auto e = rref<S>(M.transpose());
  return e.R.topRows(e.rank()).transpose();
}

template <class S>
bool in_column_span(const Mat<S>& basis, const Mat<S>& v) {
  return solve<S>(basis, v).has_value();
}

template <class T, class S>
Mat<T> cast_matrix(const Mat<S>& M) {
  Mat<T> R(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) R(i, j) = T(M(i, j));
  return R;
}

inline CKMatrix to_ck(const KMatrix& M) { return cast_matrix<CKScalar>(M); }
inline KMatrix to_k(const QMatrix& M) { return cast_matrix<KScalar>(M); }
inline CKMatrix to_ck(const QMatrix& M) { return cast_matrix<CKScalar>(M); }
inline QMatrix to_q(const ZMatrix& M) { return cast_matrix<Rational>(M); }
CKMatrix make_ck(const KMatrix& re, const KMatrix& im);
KMatrix real_part(const CKMatrix& M);
KMatrix imag_part(const CKMatrix& M);
CKMatrix conj(const CKMatrix& M);
// entries must be integers
ZMatrix to_z(const QMatrix& M);
// entries must be rational
QMatrix to_rational(const KMatrix& M);
bool is_rational(const KMatrix& M);
bool is_integral(const KMatrix& M);

FieldPtr field_of(const KMatrix& M);
FieldPtr field_of(const CKMatrix& M);

}  // namespace lnash
