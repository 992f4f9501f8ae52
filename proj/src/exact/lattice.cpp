#include "lnash/exact/lattice.hpp"

namespace lnash {

namespace {

void col_axpy(ZMatrix& M, Index dst, const Integer& q, Index src) {
  // col dst -= q * col src
  if (q == 0) return;
  for (Index i = 0; i < M.rows(); ++i) M(i, dst) -= q * M(i, src);
}

void row_axpy(ZMatrix& M, Index dst, const Integer& q, Index src) {
  if (q == 0) return;
  for (Index j = 0; j < M.cols(); ++j) M(dst, j) -= q * M(src, j);
}

}  // namespace

HermiteForm hnf(const ZMatrix& M) {
  const Index m = M.rows(), n = M.cols();
  ZMatrix H = M;
  ZMatrix U = ZMatrix::Identity(n, n);
  std::vector<Index> pivots;
  Index c = 0;
  for (Index i = 0; i < m && c < n; ++i) {
    for (;;) {
      Index best = -1;
      for (Index j = c; j < n; ++j)
        if (H(i, j) != 0 && (best < 0 || mp::abs(H(i, j)) < mp::abs(H(i, best)))) best = j;
      if (best < 0) break;
      if (best != c) {
        H.col(best).swap(H.col(c));
        U.col(best).swap(U.col(c));
      }
      bool clean = true;
      for (Index j = c + 1; j < n; ++j) {
        if (H(i, j) == 0) continue;
        Integer q = H(i, j) / H(i, c);
        col_axpy(H, j, q, c);
        col_axpy(U, j, q, c);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(i, c) == 0) continue;
    if (H(i, c) < 0) {
      H.col(c) = -H.col(c);
      U.col(c) = -U.col(c);
    }
    for (Index j = 0; j < c; ++j) {
      Integer q = floor_div(H(i, j), H(i, c));
      col_axpy(H, j, q, c);
      col_axpy(U, j, q, c);
    }
    pivots.push_back(i);
    ++c;
  }
  return {std::move(H), std::move(U), std::move(pivots)};
}

SmithForm snf(const ZMatrix& M) {
  const Index m = M.rows(), n = M.cols();
  ZMatrix D = M;
  ZMatrix L = ZMatrix::Identity(m, m);
  ZMatrix R = ZMatrix::Identity(n, n);
  for (Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // bring the smallest nonzero entry of the trailing block to (t, t)
      Index bi = -1, bj = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (bi < 0 || mp::abs(D(i, j)) < mp::abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      if (bi != t) {
        D.row(bi).swap(D.row(t));
        L.row(bi).swap(L.row(t));
      }
      if (bj != t) {
        D.col(bj).swap(D.col(t));
        R.col(bj).swap(R.col(t));
      }
      bool done = true;
      for (Index i = t + 1; i < m; ++i) {
        Integer q = D(i, t) / D(t, t);
        row_axpy(D, i, q, t);
        row_axpy(L, i, q, t);
        if (D(i, t) != 0) done = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        Integer q = D(t, j) / D(t, t);
        col_axpy(D, j, q, t);
        col_axpy(R, j, q, t);
        if (D(t, j) != 0) done = false;
      }
      if (!done) continue;
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // row t += row bad, then reduce again
      row_axpy(D, t, Integer(-1), bad);
      row_axpy(L, t, Integer(-1), bad);
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      L.row(t) = -L.row(t);
    }
  }
  return {std::move(D), std::move(L), std::move(R)};
}

Integer determinant(const ZMatrix& M) {
  Rational d = lnash::determinant<Rational>(to_q(M));
  return num(d);
}

bool is_unimodular(const ZMatrix& M) {
  if (M.rows() != M.cols()) return false;
  return mp::abs(determinant(M)) == 1;
}

ZMatrix lattice_basis(const ZMatrix& gens) {
  auto h = hnf(gens);
  return h.H.leftCols(h.rank());
}

Integer common_denominator(const QMatrix& A) {
  Integer d = 1;
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) d = lcm(d, den(A(i, j)));
  return d;
}

QMatrix rational_lattice_basis(const QMatrix& gens) {
  Integer d = common_denominator(gens);
  QMatrix scaled = gens * Rational(d);
  return to_q(lattice_basis(to_z(scaled))) / Rational(d);
}

ZMatrix integer_kernel(const ZMatrix& M) {
  auto h = hnf(M);
  ZMatrix K = h.U.rightCols(M.cols() - h.rank());
  return lattice_basis(K);
}

ZMatrix dual_preimage(const QMatrix& A) {
  const Index m = A.rows(), n = A.cols();
  if (m == 0) return ZMatrix::Identity(n, n);
  Integer d = common_denominator(A);
  ZMatrix B = to_z(A * Rational(d));
  ZMatrix big(m, n + m);
  big << B, ZMatrix::Identity(m, m) * Integer(-d);
  ZMatrix K = integer_kernel(big);
  return lattice_basis(K.topRows(n));
}

ZMatrix saturation(const ZMatrix& B) {
  const Index n = B.rows();
  if (B.cols() == 0) return ZMatrix(n, 0);
  QMatrix P = nullspace<Rational>(to_q(B).transpose()).transpose();
  if (P.rows() == 0) return ZMatrix::Identity(n, n);
  for (Index i = 0; i < P.rows(); ++i) {
    Integer d = common_denominator(P.row(i));
    P.row(i) *= Rational(d);
  }
  return integer_kernel(to_z(P));
}

bool is_saturated(const ZMatrix& B) {
  auto h = hnf(ZMatrix(B.transpose()));
  if (h.rank() != B.cols()) return false;
  for (Index i = 0; i < B.cols(); ++i)
    if (h.H(i, i) != 1) return false;
  return true;
}

ZMatrix unimodular_complement(const ZMatrix& B) {
  const Index n = B.rows(), k = B.cols();
  ZMatrix cur = B;
  std::vector<Index> picked;
  for (Index i = 0; i < n && cur.cols() < n; ++i) {
    ZMatrix trial(n, cur.cols() + 1);
    trial << cur, ZMatrix::Identity(n, n).col(i);
    if (rank<Rational>(to_q(trial)) == trial.cols() && is_saturated(trial)) {
      cur = trial;
      picked.push_back(i);
    }
  }
  if (cur.cols() == n) return cur.rightCols(n - k);
  // Bᵀ U = [I | 0] for saturated B, so B is the first k columns of U⁻ᵀ
  auto h = hnf(ZMatrix(B.transpose()));
  ZMatrix Pinv = to_z(*inverse<Rational>(to_q(ZMatrix(h.U.transpose()))));
  return Pinv.rightCols(n - k);
}

std::optional<ZMatrix> integer_coordinates(const QMatrix& basis, const QMatrix& v) {
  auto x = solve<Rational>(basis, v);
  if (!x) return std::nullopt;
  for (Index i = 0; i < x->rows(); ++i)
    for (Index j = 0; j < x->cols(); ++j)
      if (!is_integral((*x)(i, j))) return std::nullopt;
  return to_z(*x);
}

}  // namespace lnash
