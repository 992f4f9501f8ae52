#pragma once

#include "lnash/exact/lattice.hpp"
#include "lnash/exact/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lnash {

// S on the quotient coordinates of g0 / Fil^a (or on V_a)
struct PolarizationWitness {
  KMatrix S;
};

struct Fprs {
  FieldPtr field;
  Index n = 0;
  KMatrix fil_v;
  KMatrix fil_a;
  CKMatrix lambda_r;  // Q-basis
  std::optional<PolarizationWitness> witness;
};

struct Fpl {
  FieldPtr field;
  Index n = 0;
  KMatrix fil_v;
  KMatrix fil_a;
  CKMatrix lambda;  // Z-basis
  std::optional<PolarizationWitness> witness;
};

struct Mpl {
  FieldPtr field;
  Index a_dim = 0;
  Index v_dim = 0;
  Index t_rank = 0;
  CKMatrix lambda_a;    // a_dim x 2 a_dim
  ZMatrix tau_t;        // t_rank x t_rank
  KMatrix phi_v;        // a_dim x v_dim
  CKMatrix phi_t_lift;  // a_dim x t_rank, column w gives z -> w^T conj(z)
  std::optional<PolarizationWitness> witness;
};

struct TripleD {
  Fprs space;
  KMatrix gamma;  // Z-basis of a discrete subgroup of g0
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  std::optional<PolarizationWitness> witness;  // verified or found

  bool valid() const;
  std::string first_failure() const;
};

struct SearchParams {
  int denominator_bound = 4;
  int coordinate_bound = 3;
  long max_candidates = 20000;
};

struct PolarizationCheck {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Data a Riemann form has to be checked against: generators of a lattice
// (integral mode) or of a Q-space (rational mode) in V = K^dim.
struct PolarizationTarget {
  FieldPtr field;
  Index dim = 0;
  CKMatrix generators;
  bool integral = true;
};

PolarizationTarget polarization_target(const Fprs& x);
PolarizationTarget polarization_target(const Fpl& x);
PolarizationTarget polarization_target(const Mpl& x);

// E(x1 + i y1, x2 + i y2) = y1^T S x2 - x1^T S y2
KScalar riemann_form(const KMatrix& S, const CKVector& z1, const CKVector& z2);
bool is_positive_definite(const KMatrix& S);

PolarizationCheck verify_polarization(const PolarizationTarget& target, const PolarizationWitness& w);
PolarizationCheck verify_polarization(const Fprs& x, const PolarizationWitness& w);
PolarizationCheck verify_polarization(const Fpl& x, const PolarizationWitness& w);
PolarizationCheck verify_polarization(const Mpl& x, const PolarizationWitness& w);

std::optional<PolarizationWitness> find_polarization(const PolarizationTarget& target, const SearchParams& p = {});
std::optional<PolarizationWitness> find_polarization(const Fprs& x, const SearchParams& p = {});
std::optional<PolarizationWitness> find_polarization(const Fpl& x, const SearchParams& p = {});
std::optional<PolarizationWitness> find_polarization(const Mpl& x, const SearchParams& p = {});

ValidationReport validate_fprs(const Fprs& x, const SearchParams& p = {});
ValidationReport validate_fpl(const Fpl& x, const SearchParams& p = {});
ValidationReport validate_mpl(const Mpl& x, const SearchParams& p = {});
ValidationReport validate_triple(const TripleD& t, const SearchParams& p = {});

// sigma on a Q-spanning set: conj(C) = C T, or nothing when not sigma-stable
std::optional<QMatrix> sigma_matrix(const CKMatrix& C, const FieldPtr& K);

// Dual lattice of Lambda_a: w = u + i v lies in it iff L (u; v) is integral,
// where row k of L is (-y_k^T, x_k^T) for lambda_k = x_k + i y_k.
KMatrix dual_pairing_matrix(const CKMatrix& lambda_a);
KMatrix dual_coordinates(const CKMatrix& lambda_a, const CKMatrix& W);
bool in_dual_lattice(const CKMatrix& lambda_a, const CKMatrix& W);
CKMatrix dual_lattice_basis(const CKMatrix& lambda_a);
// conj(W) - W tau
CKMatrix equivariance_defect(const Mpl& m);

// equal data, lifts congruent modulo the dual lattice
bool congruent(const Mpl& a, const Mpl& b);


}  // namespace lnash
