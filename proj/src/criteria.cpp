#include "lnash/criteria.hpp"

namespace lnash {

namespace {

PolarizationWitness require_valid(const ValidationReport& r, const char* what) {
  if (!r.valid()) throw Error(Errc::InvalidInput, std::string(what) + " fails validation: " + r.first_failure());
  return *r.witness;
}

FieldPtr field_or_q(const FieldPtr& f) { return f ? f : rational_field(); }

KMatrix enca_unchecked(const Fprs& x) {
  const FieldPtr K = field_or_q(x.field);
  QMatrix T = *sigma_matrix(x.lambda_r, K);
  QMatrix X = nullspace<Rational>(QMatrix(T + QMatrix::Identity(T.rows(), T.cols())));
  // i * (purely imaginary vector) = - its imaginary part
  KMatrix real = -imag_part(x.lambda_r * to_ck(X));
  KMatrix part = subspace_intersect(span_basis(real), x.fil_a);
  return subspace_sum(x.fil_v, part);
}

bool is_affine_unchecked(const TripleD& t) {
  const Fprs& x = t.space;
  const FieldPtr K = field_or_q(x.field);
  QMatrix X = rational_intersection(x.lambda_r, KMatrix::Identity(x.n, x.n), KMatrix(x.n, 0), K);
  CKMatrix fixed = x.lambda_r * to_ck(X);
  CKMatrix gamma = to_ck(t.gamma);
  return in_rational_span(fixed, gamma, K) && in_rational_span(gamma, fixed, K);
}

SplitDimensions split_unchecked(const Mpl& m) {
  SplitDimensions s;
  s.d_v = m.v_dim - rank<KScalar>(m.phi_v);
  ZMatrix ker = phi_t_kernel(m);
  const Index k = ker.cols();
  if (k == 0) return s;
  QMatrix R = *solve<Rational>(to_q(ker), QMatrix(to_q(m.tau_t) * to_q(ker)));
  QMatrix Id = QMatrix::Identity(k, k);
  s.d_t_plus = k - rank<Rational>(QMatrix(R - Id));
  s.d_t_minus = k - rank<Rational>(QMatrix(R + Id));
  return s;
}

// rows of restrict_scalars(A) holding the coefficients of t^1 .. t^(d-1)
QMatrix irrational_rows(const KMatrix& A, const FieldPtr& K) {
  const Index d = K->degree();
  QMatrix R = restrict_scalars(A, K);
  QMatrix H(A.rows() * (d - 1), A.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index k = 1; k < d; ++k) H.row(i * (d - 1) + k - 1) = R.row(i * d + k);
  return H;
}

QMatrix constant_rows(const KMatrix& A, const FieldPtr& K) {
  const Index d = K->degree();
  QMatrix R = restrict_scalars(A, K);
  QMatrix C(A.rows(), A.cols());
  for (Index i = 0; i < A.rows(); ++i) C.row(i) = R.row(i * d);
  return C;
}

ZMatrix integer_kernel_q(const QMatrix& M) {
  QMatrix S = M;
  for (Index i = 0; i < S.rows(); ++i) S.row(i) *= Rational(common_denominator(S.row(i)));
  return integer_kernel(to_z(S));
}

UInvariants u_unchecked(const Mpl& m) {
  UInvariants u;
  u.u_v = rank<KScalar>(m.phi_v);
  if (m.a_dim == 0 || m.t_rank == 0) return u;
  const FieldPtr K = field_or_q(m.field);
  const Index d = K->degree();
  if (d == 1) return u;
  QMatrix H = irrational_rows(dual_coordinates(m.lambda_a, m.phi_t_lift), K);
  QMatrix U = column_echelon<Rational>(H);
  if (U.cols() == 0) return u;
  // sigma: w -> conj(w) in dual lattice coordinates, acting on each coefficient level
  CKMatrix dual = dual_lattice_basis(m.lambda_a);
  QMatrix Ts = *rational_coordinates(dual, conj(dual), K);
  const Index two_a = 2 * m.a_dim;
  QMatrix sig = QMatrix::Zero(H.rows(), H.rows());
  for (Index i = 0; i < two_a; ++i)
    for (Index j = 0; j < two_a; ++j)
      for (Index k = 0; k < d - 1; ++k) sig(i * (d - 1) + k, j * (d - 1) + k) = Ts(i, j);
  QMatrix Id = QMatrix::Identity(sig.rows(), sig.cols());
  u.u_t_plus = rank<Rational>(QMatrix((Id + sig) * U));
  u.u_t_minus = rank<Rational>(QMatrix((Id - sig) * U));
  return u;
}

Fpl integral_model_unchecked(const Fprs& x, const PolarizationWitness& w) {
  const FieldPtr K = field_or_q(x.field);
  const Index r = x.lambda_r.cols();
  QMatrix T = *sigma_matrix(x.lambda_r, K);
  QMatrix gens(r, 2 * r);
  gens << QMatrix::Identity(r, r), T;
  QMatrix B = rational_lattice_basis(gens);
  Fpl f{K, x.n, x.fil_v, x.fil_a, x.lambda_r * to_ck(B), {}};
  // make E integral on the new generators
  PolarizationTarget target = polarization_target(f);
  Integer N = 1;
  for (Index i = 0; i < target.generators.cols(); ++i)
    for (Index j = i + 1; j < target.generators.cols(); ++j)
      N = lcm(N, den(riemann_form(w.S, target.generators.col(i), target.generators.col(j)).rational_value()));
  f.witness = PolarizationWitness{w.S * KScalar(N)};
  return f;
}

}  // namespace

KMatrix enca(const Fprs& x, const SearchParams& p) {
  require_valid(validate_fprs(x, p), "FPRS");
  return enca_unchecked(x);
}

bool is_nash(const TripleD& t, const SearchParams& p) {
  require_valid(validate_triple(t, p), "triple");
  KMatrix e = enca_unchecked(t.space);
  KMatrix both(t.space.n, e.cols() + t.gamma.cols());
  both << e, t.gamma;
  return rank<KScalar>(both) == t.space.n;
}

bool is_affine(const TripleD& t, const SearchParams& p) {
  require_valid(validate_triple(t, p), "triple");
  return is_affine_unchecked(t);
}

bool is_toroidal_affine(const TripleD& t, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_triple(t, p), "triple");
  if (!is_affine_unchecked(t)) return false;
  return split_unchecked(fpl_to_mpl(integral_model_unchecked(t.space, w), p)).total() == 0;
}

ZMatrix phi_t_kernel(const Mpl& m) {
  const Index t = m.t_rank;
  if (t == 0) return ZMatrix(0, 0);
  if (m.a_dim == 0) return ZMatrix::Identity(t, t);
  const FieldPtr K = field_or_q(m.field);
  KMatrix A = dual_coordinates(m.lambda_a, m.phi_t_lift);
  ZMatrix X = K->degree() > 1 ? integer_kernel_q(irrational_rows(A, K)) : ZMatrix(ZMatrix::Identity(t, t));
  if (X.cols() == 0) return ZMatrix(t, 0);
  ZMatrix Y = dual_preimage(QMatrix(constant_rows(A, K) * to_q(X)));
  return lattice_basis(ZMatrix(X * Y));
}

SplitDimensions split_dimensions(const Mpl& m, const SearchParams& p) {
  require_valid(validate_mpl(m, p), "MPL");
  return split_unchecked(m);
}

UInvariants u_invariants(const Mpl& m, const SearchParams& p) {
  require_valid(validate_mpl(m, p), "MPL");
  return u_unchecked(m);
}

Mpl ant_quotient(const Mpl& m, const SearchParams& p) {
  require_valid(validate_mpl(m, p), "MPL");
  Mpl out = m;
  out.witness.reset();

  KMatrix kerv = nullspace<KScalar>(m.phi_v);
  KMatrix Ev = quotient_basis(kerv, m.v_dim);
  out.v_dim = Ev.cols();
  out.phi_v = m.phi_v * Ev;

  ZMatrix ker = phi_t_kernel(m);
  ZMatrix sat = saturation(ker);
  Integer N = 1;
  if (ker.cols() > 0) {
    // exponent of sat / ker; phi_t kills sat only after scaling Lambda_a by it
    ZMatrix Y = to_z(*solve<Rational>(to_q(sat), to_q(ker)));
    SmithForm s = snf(Y);
    for (Index i = 0; i < s.D.rows() && i < s.D.cols(); ++i) N = lcm(N, s.D(i, i));
  }
  ZMatrix M = unimodular_complement(sat);
  ZMatrix full(m.t_rank, m.t_rank);
  full << sat, M;
  ZMatrix P = to_z(*inverse<Rational>(to_q(full)));
  ZMatrix Qt = P.bottomRows(M.cols());
  out.t_rank = M.cols();
  out.tau_t = Qt * m.tau_t * M;
  out.phi_t_lift = m.phi_t_lift * to_ck(to_q(M));
  out.lambda_a = m.lambda_a * CKScalar(Rational(N));

  ValidationReport r = validate_mpl(out, p);
  if (!r.valid()) throw Error(Errc::InvalidInput, "quotient data failed validation: " + r.first_failure());
  out.witness = r.witness;
  return out;
}

Fpl integral_model(const Fprs& x, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_fprs(x, p), "FPRS");
  return integral_model_unchecked(x, w);
}

ClassReport classify(const TripleD& t, const SearchParams& p) {
  PolarizationWitness w = require_valid(validate_triple(t, p), "triple");
  ClassReport c;
  c.enca_basis = enca_unchecked(t.space);
  KMatrix both(t.space.n, c.enca_basis.cols() + t.gamma.cols());
  both << c.enca_basis, t.gamma;
  c.is_nash = rank<KScalar>(both) == t.space.n;
  c.is_affine = is_affine_unchecked(t);
  Mpl m = fpl_to_mpl(integral_model_unchecked(t.space, w), p);
  c.split = split_unchecked(m);
  c.u = u_unchecked(m);
  c.is_toroidal_affine = c.is_affine && c.split.total() == 0;
  return c;
}

}  // namespace lnash
