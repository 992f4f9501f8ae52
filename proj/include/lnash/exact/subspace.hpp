#pragma once

#include "lnash/exact/linalg.hpp"

namespace lnash {

// K-subspaces of K^n given by spanning columns
KMatrix span_basis(const KMatrix& U);
KMatrix subspace_sum(const KMatrix& U, const KMatrix& W);
KMatrix subspace_intersect(const KMatrix& U, const KMatrix& W);
// unit vectors e_i for the non-pivot rows of the column echelon form of U
KMatrix quotient_basis(const KMatrix& U, Index ambient);
// rows: coordinates on K^n / span(U) with respect to quotient_basis
KMatrix quotient_coordinates(const KMatrix& U, Index ambient);
// rows span the left annihilator of U
KMatrix annihilator(const KMatrix& U, Index ambient);
bool in_span(const KMatrix& U, const KVector& v);
bool contains(const KMatrix& U, const KMatrix& W);
bool same_span(const KMatrix& U, const KMatrix& W);

// Q-structure. Every entry is expanded over {1, t, ..., t^(d-1)} with d the
// degree of K; complex entries give the real block then the imaginary block.
QMatrix restrict_scalars(const KMatrix& M, const FieldPtr& K);
QMatrix restrict_scalars(const CKMatrix& M, const FieldPtr& K);
QMatrix restrict_scalars(const CKMatrix& M);
// inverse of restrict_scalars on a column
CKMatrix extend_scalars(const QMatrix& R, Index rows, const FieldPtr& K);
KMatrix extend_real_scalars(const QMatrix& R, Index rows, const FieldPtr& K);

Index rational_rank(const CKMatrix& C, const FieldPtr& K);
bool in_rational_span(const CKMatrix& C, const CKMatrix& v, const FieldPtr& K);
// coefficients X with C X = v, or nothing
std::optional<QMatrix> rational_coordinates(const CKMatrix& C, const CKMatrix& v, const FieldPtr& K);
// canonical Q-basis of the Q-span of the columns of C
CKMatrix rational_span_basis(const CKMatrix& C, const FieldPtr& K);

// Q-basis (as coefficient columns on C) of {x : Re(Cx) in re_sub, Im(Cx) in im_sub}
QMatrix rational_intersection(const CKMatrix& C, const KMatrix& re_sub, const KMatrix& im_sub, const FieldPtr& K);

}  // namespace lnash
