#pragma once

#include "lnash/exact/linalg.hpp"

namespace lnash {

// Column Hermite normal form: H = M * U with U unimodular, H lower echelon
// with positive pivots and entries left of each pivot reduced into [0, pivot).
struct HermiteForm {
  ZMatrix H;
  ZMatrix U;
  std::vector<Index> pivot_rows;
  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};
HermiteForm hnf(const ZMatrix& M);

// L * M * R = D with D diagonal, d_1 | d_2 | ..., all nonnegative
struct SmithForm {
  ZMatrix D;
  ZMatrix L;
  ZMatrix R;
};
SmithForm snf(const ZMatrix& M);

Integer determinant(const ZMatrix& M);
bool is_unimodular(const ZMatrix& M);

// HNF basis of the lattice generated by the columns
ZMatrix lattice_basis(const ZMatrix& gens);
QMatrix rational_lattice_basis(const QMatrix& gens);
ZMatrix integer_kernel(const ZMatrix& M);
// basis of {x in Z^n : A x in Z^m}
ZMatrix dual_preimage(const QMatrix& A);
// basis of span_Q(B) ∩ Z^n
ZMatrix saturation(const ZMatrix& B);
bool is_saturated(const ZMatrix& B);
// C with [B | C] unimodular; B must have saturated, independent columns.
// Unit vectors are preferred in index order when they suffice.
ZMatrix unimodular_complement(const ZMatrix& B);
// integer coordinates of v in the basis (full column rank), or nothing
std::optional<ZMatrix> integer_coordinates(const QMatrix& basis, const QMatrix& v);
Integer common_denominator(const QMatrix& A);

}  // namespace lnash
