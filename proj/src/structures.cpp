#include "lnash/structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lnash {

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

namespace {

void need(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::DimensionMismatch, what);
}

void add(ValidationReport& r, std::string name, bool ok, std::string detail = "") {
  r.checks.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
}

FieldPtr resolve_field(const FieldPtr& declared, std::initializer_list<FieldPtr> seen) {
  FieldPtr f = declared;
  for (const auto& s : seen) f = common_field(f, s);
  return f ? f : rational_field();
}

KMatrix real_expansion(const CKMatrix& C) {
  KMatrix R(2 * C.rows(), C.cols());
  R << real_part(C), imag_part(C);
  return R;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// axioms shared by FPRS and FPL; C spans Lambda_r (over Q) or Lambda (over Z)
void filtration_axioms(ValidationReport& r, const FieldPtr& K, Index n, const KMatrix& fil_v, const KMatrix& fil_a,
                       const CKMatrix& C) {
  const Index kv = rank<KScalar>(fil_v), ka = rank<KScalar>(fil_a);
  add(r, "filtration bases independent", kv == fil_v.cols() && ka == fil_a.cols(),
      "fil_v or fil_a has dependent columns");
  add(r, "Fil^v within Fil^a", contains(fil_a, fil_v), "a column of fil_v is not in the span of fil_a");

  QMatrix Xv = rational_intersection(C, fil_v, fil_v, K);
  add(r, "Fil^v meets the lattice trivially", Xv.cols() == 0,
      "intersection has Q-dimension " + std::to_string(Xv.cols()));

  QMatrix Xa = rational_intersection(C, fil_a, fil_a, K);
  bool dim_ok = Xa.cols() == ka - kv;
  CKMatrix aff = C * to_ck(Xa);
  CKMatrix both(n, aff.cols() + fil_v.cols());
  both << aff, to_ck(fil_v);
  bool span_ok = rank<CKScalar>(both) == ka;
  add(r, "Fil^a part spans Fil^a/Fil^v", dim_ok && span_ok,
      "Q-dimension " + std::to_string(Xa.cols()) + ", expected " + std::to_string(ka - kv));

  const Index q = n - ka;
  KMatrix Q = quotient_coordinates(fil_a, n);
  CKMatrix img = to_ck(Q) * C;
  Index qrank = rational_rank(img, K);
  Index rrank = rank<KScalar>(real_expansion(img));
  add(r, "image in g/Fil^a is full", qrank == 2 * q && rrank == 2 * q,
      "Q-rank " + std::to_string(qrank) + ", real rank " + std::to_string(rrank) + ", expected " +
          std::to_string(2 * q));
}

void polarization_axiom(ValidationReport& r, const PolarizationTarget& target,
                        const std::optional<PolarizationWitness>& w, const SearchParams& p) {
  if (w) {
    auto chk = verify_polarization(target, *w);
    add(r, "polarizable", chk.ok, "supplied witness rejected: " + chk.detail);
    if (chk.ok) r.witness = w;
    return;
  }
  auto found = find_polarization(target, p);
  add(r, "polarizable", found.has_value(), "no witness found by the bounded search");
  r.witness = found;
}

}  // namespace

std::optional<QMatrix> sigma_matrix(const CKMatrix& C, const FieldPtr& K) {
  return rational_coordinates(C, conj(C), K);
}

PolarizationTarget polarization_target(const Fprs& x) {
  KMatrix Q = quotient_coordinates(x.fil_a, x.n);
  return {resolve_field(x.field, {}), Q.rows(), to_ck(Q) * x.lambda_r, false};
}

PolarizationTarget polarization_target(const Fpl& x) {
  KMatrix Q = quotient_coordinates(x.fil_a, x.n);
  return {resolve_field(x.field, {}), Q.rows(), to_ck(Q) * x.lambda, true};
}

PolarizationTarget polarization_target(const Mpl& x) {
  return {resolve_field(x.field, {}), x.a_dim, x.lambda_a, true};
}

KScalar riemann_form(const KMatrix& S, const CKVector& z1, const CKVector& z2) {
  KVector x1 = real_part(z1), y1 = imag_part(z1), x2 = real_part(z2), y2 = imag_part(z2);
  KScalar e(0);
  for (Index i = 0; i < S.rows(); ++i)
    for (Index j = 0; j < S.cols(); ++j) {
      if (S(i, j).is_zero()) continue;
      e += S(i, j) * (y1(i) * x2(j) - x1(i) * y2(j));
    }
  return e;
}

bool is_positive_definite(const KMatrix& S) {
  for (Index k = 1; k <= S.rows(); ++k)
    if (determinant<KScalar>(S.topLeftCorner(k, k)).sign() <= 0) return false;
  return true;
}

PolarizationCheck verify_polarization(const PolarizationTarget& t, const PolarizationWitness& w) {
  const KMatrix& S = w.S;
  if (S.rows() != t.dim || S.cols() != t.dim)
    throw Error(Errc::DimensionMismatch, "witness is " + std::to_string(S.rows()) + "x" + std::to_string(S.cols()) +
                                             ", expected " + std::to_string(t.dim) + "x" + std::to_string(t.dim));
  for (Index i = 0; i < S.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (S(i, j) != S(j, i)) return {false, "S is not symmetric"};
  if (!is_positive_definite(S)) return {false, "S is not positive definite"};
  const CKMatrix& Z = t.generators;
  for (Index p = 0; p < Z.cols(); ++p)
    for (Index q = p + 1; q < Z.cols(); ++q) {
      KScalar e = riemann_form(S, Z.col(p), Z.col(q));
      std::string where = "E(z" + std::to_string(p + 1) + ", z" + std::to_string(q + 1) + ") = " + e.to_string();
      if (!e.is_rational()) return {false, where + " is not rational"};
      if (t.integral && !is_integral(e.rational_value())) return {false, where + " is not an integer"};
    }
  return {true, ""};
}

PolarizationCheck verify_polarization(const Fprs& x, const PolarizationWitness& w) {
  return verify_polarization(polarization_target(x), w);
}
PolarizationCheck verify_polarization(const Fpl& x, const PolarizationWitness& w) {
  return verify_polarization(polarization_target(x), w);
}
PolarizationCheck verify_polarization(const Mpl& x, const PolarizationWitness& w) {
  return verify_polarization(polarization_target(x), w);
}

namespace {

struct SymParams {
  Index a, d;
  std::vector<std::pair<Index, Index>> entries;  // i <= j
  Index size() const { return static_cast<Index>(entries.size()) * d; }
};

SymParams sym_params(Index a, Index d) {
  SymParams sp{a, d, {}};
  for (Index i = 0; i < a; ++i)
    for (Index j = i; j < a; ++j) sp.entries.push_back({i, j});
  return sp;
}

KMatrix sym_from_params(const SymParams& sp, const QVector& v, const FieldPtr& K) {
  KMatrix S = KMatrix::Zero(sp.a, sp.a);
  for (size_t e = 0; e < sp.entries.size(); ++e) {
    QPoly c(sp.d);
    for (Index k = 0; k < sp.d; ++k) c[k] = v(static_cast<Index>(e) * sp.d + k);
    KScalar x(K, c);
    auto [i, j] = sp.entries[e];
    S(i, j) = x;
    S(j, i) = x;
  }
  return S;
}

// rationals p/q with q <= D and |p/q| <= B, ordered by height then value
std::vector<Rational> grid_values(int D, int B) {
  std::set<Rational> seen;
  std::vector<std::pair<std::pair<int, Rational>, Rational>> tagged;
  for (int q = 1; q <= D; ++q)
    for (int p = -B * q; p <= B * q; ++p) {
      Rational r(p, q);
      if (!seen.insert(r).second) continue;
      int h = std::max(static_cast<int>(mp::abs(num(r))), static_cast<int>(den(r)));
      if (r == 0) h = 0;
      tagged.push_back({{h, mp::abs(r)}, r});
    }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.second > b.second;
  });
  std::vector<Rational> out;
  for (auto& t : tagged) out.push_back(t.second);
  return out;
}

}  // namespace

std::optional<PolarizationWitness> find_polarization(const PolarizationTarget& t, const SearchParams& p) {
  const Index a = t.dim;
  if (a == 0) return PolarizationWitness{KMatrix(0, 0)};
  const FieldPtr K = t.field ? t.field : rational_field();
  const Index d = K->degree();
  const CKMatrix& Z = t.generators;
  SymParams sp = sym_params(a, d);

  // E on each generator pair is linear in the parameters; its t^1..t^(d-1)
  // coefficients must vanish
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < Z.cols(); ++i)
    for (Index j = i + 1; j < Z.cols(); ++j) pairs.push_back({i, j});
  QMatrix A = QMatrix::Zero(static_cast<Index>(pairs.size()) * (d - 1), sp.size());
  KScalar gen = KScalar::generator(K);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    CKVector z1 = Z.col(pairs[pi].first), z2 = Z.col(pairs[pi].second);
    for (size_t e = 0; e < sp.entries.size(); ++e) {
      auto [i, j] = sp.entries[e];
      KScalar c = z1(i).im() * z2(j).re() - z1(i).re() * z2(j).im();
      if (i != j) c += z1(j).im() * z2(i).re() - z1(j).re() * z2(i).im();
      KScalar power(1);
      for (Index k = 0; k < d; ++k) {
        KScalar term = c * power;
        for (Index l = 1; l < d; ++l)
          A(static_cast<Index>(pi) * (d - 1) + l - 1, static_cast<Index>(e) * d + k) = term.coeff(static_cast<int>(l));
        power *= gen;
      }
    }
  }
  QMatrix V = nullspace<Rational>(A);
  const Index s = V.cols();
  if (s == 0) return std::nullopt;

  auto finish = [&](const QVector& coords) -> std::optional<PolarizationWitness> {
    KMatrix S = sym_from_params(sp, V * coords, K);
    if (!is_positive_definite(S)) return std::nullopt;
    // rescale so the E values are coprime integers
    Integer gn = 0, gd = 1;
    for (auto [i, j] : pairs) {
      Rational e = riemann_form(S, Z.col(i), Z.col(j)).rational_value();
      if (e == 0) continue;
      gn = gcd(gn, num(e));
      gd = lcm(gd, den(e));
    }
    if (gn != 0) S = S * KScalar(Rational(gd) / Rational(gn));
    PolarizationWitness w{S};
    if (!verify_polarization(t, w)) return std::nullopt;
    return w;
  };

  // projection of the identity onto the solution space
  QVector id = QVector::Zero(sp.size());
  for (size_t e = 0; e < sp.entries.size(); ++e)
    if (sp.entries[e].first == sp.entries[e].second) id(static_cast<Index>(e) * d) = 1;
  QMatrix gram = V.transpose() * V;
  QVector proj = *solve<Rational>(gram, QMatrix(V.transpose() * id));
  if (auto w = finish(proj)) return w;

  for (Index b = 0; b < s; ++b)
    for (int sg : {1, -1}) {
      QVector c = QVector::Zero(s);
      c(b) = sg;
      if (auto w = finish(c)) return w;
    }

  auto values = grid_values(p.denominator_bound, p.coordinate_bound);
  const Index nv = static_cast<Index>(values.size());
  // enumerate coordinate tuples shell by shell in the value ordering
  long tried = 0;
  std::vector<Index> idx(s, 0);
  for (Index shell = 1; shell < nv && tried < p.max_candidates; ++shell) {
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      bool on_shell = std::any_of(idx.begin(), idx.end(), [&](Index v) { return v == shell; });
      if (on_shell) {
        QVector c(s);
        for (Index k = 0; k < s; ++k) c(k) = values[idx[k]];
        if (auto w = finish(c)) return w;
        if (++tried >= p.max_candidates) break;
      }
      Index k = 0;
      while (k < s && idx[k] == shell) idx[k++] = 0;
      if (k == s) break;
      ++idx[k];
    }
  }
  return std::nullopt;
}

std::optional<PolarizationWitness> find_polarization(const Fprs& x, const SearchParams& p) {
  return find_polarization(polarization_target(x), p);
}
std::optional<PolarizationWitness> find_polarization(const Fpl& x, const SearchParams& p) {
  return find_polarization(polarization_target(x), p);
}
std::optional<PolarizationWitness> find_polarization(const Mpl& x, const SearchParams& p) {
  return find_polarization(polarization_target(x), p);
}

ValidationReport validate_fprs(const Fprs& x, const SearchParams& p) {
  need(x.fil_v.rows() == x.n && x.fil_a.rows() == x.n && x.lambda_r.rows() == x.n,
       "FPRS matrices must have n rows");
  const FieldPtr K = resolve_field(x.field, {field_of(x.fil_v), field_of(x.fil_a), field_of(x.lambda_r)});
  ValidationReport r;
  const Index rr = rational_rank(x.lambda_r, K);
  add(r, "lambda_r independent over Q", rr == x.lambda_r.cols(),
      "Q-rank " + std::to_string(rr) + " < " + std::to_string(x.lambda_r.cols()));
  add(r, "sigma-stable", sigma_matrix(x.lambda_r, K).has_value(), "conjugate of a basis vector leaves the Q-span");
  filtration_axioms(r, K, x.n, x.fil_v, x.fil_a, x.lambda_r);
  if (!r.valid()) return r;
  Fprs y = x;
  y.field = K;
  polarization_axiom(r, polarization_target(y), x.witness, p);
  return r;
}

ValidationReport validate_fpl(const Fpl& x, const SearchParams& p) {
  need(x.fil_v.rows() == x.n && x.fil_a.rows() == x.n && x.lambda.rows() == x.n, "FPL matrices must have n rows");
  const FieldPtr K = resolve_field(x.field, {field_of(x.fil_v), field_of(x.fil_a), field_of(x.lambda)});
  ValidationReport r;
  const Index kr = rank<KScalar>(real_expansion(x.lambda));
  add(r, "discrete", kr == x.lambda.cols(),
      "real rank " + std::to_string(kr) + " < " + std::to_string(x.lambda.cols()) + " columns");
  auto T = sigma_matrix(x.lambda, K);
  bool integral = T.has_value();
  if (T)
    for (Index i = 0; i < T->rows() && integral; ++i)
      for (Index j = 0; j < T->cols(); ++j)
        if (!is_integral((*T)(i, j))) {
          integral = false;
          break;
        }
  add(r, "sigma-stable over Z", integral, "conjugate of a basis vector is not an integer combination");
  if (!r.valid()) return r;
  filtration_axioms(r, K, x.n, x.fil_v, x.fil_a, x.lambda);
  if (!r.valid()) return r;
  Fpl y = x;
  y.field = K;
  polarization_axiom(r, polarization_target(y), x.witness, p);
  return r;
}

KMatrix dual_pairing_matrix(const CKMatrix& lambda_a) {
  const Index a = lambda_a.rows(), m = lambda_a.cols();
  KMatrix L(m, 2 * a);
  L << -imag_part(lambda_a).transpose(), real_part(lambda_a).transpose();
  return L;
}

KMatrix dual_coordinates(const CKMatrix& lambda_a, const CKMatrix& W) {
  return dual_pairing_matrix(lambda_a) * real_expansion(W);
}

bool in_dual_lattice(const CKMatrix& lambda_a, const CKMatrix& W) {
  return is_integral(dual_coordinates(lambda_a, W));
}

CKMatrix dual_lattice_basis(const CKMatrix& lambda_a) {
  const Index a = lambda_a.rows();
  auto inv = inverse<KScalar>(dual_pairing_matrix(lambda_a));
  if (!inv) throw Error(Errc::InvalidInput, "lambda_a is not a full lattice");
  return make_ck(inv->topRows(a), inv->bottomRows(a));
}

CKMatrix equivariance_defect(const Mpl& m) {
  return conj(m.phi_t_lift) - m.phi_t_lift * to_ck(to_q(m.tau_t));
}

ValidationReport validate_mpl(const Mpl& x, const SearchParams& p) {
  const Index a = x.a_dim, v = x.v_dim, t = x.t_rank;
  need(x.lambda_a.rows() == a && x.lambda_a.cols() == 2 * a, "lambda_a must be a_dim x 2 a_dim");
  need(x.tau_t.rows() == t && x.tau_t.cols() == t, "tau_t must be t_rank x t_rank");
  need(x.phi_v.rows() == a && x.phi_v.cols() == v, "phi_v must be a_dim x v_dim");
  need(x.phi_t_lift.rows() == a && x.phi_t_lift.cols() == t, "phi_t must be a_dim x t_rank");
  const FieldPtr K = resolve_field(x.field, {field_of(x.lambda_a), field_of(x.phi_v), field_of(x.phi_t_lift)});
  ValidationReport r;
  const Index kr = rank<KScalar>(real_expansion(x.lambda_a));
  add(r, "lambda_a is a full lattice", kr == 2 * a, "real rank " + std::to_string(kr) + " < " + std::to_string(2 * a));
  auto T = sigma_matrix(x.lambda_a, K);
  bool integral = T.has_value();
  if (T)
    for (Index i = 0; i < T->rows(); ++i)
      for (Index j = 0; j < T->cols(); ++j)
        if (!is_integral((*T)(i, j))) integral = false;
  add(r, "lambda_a sigma-stable over Z", integral, "conjugate of a basis vector is not an integer combination");
  add(r, "tau_t involution", x.tau_t * x.tau_t == ZMatrix::Identity(t, t), "tau_t^2 != 1");
  if (!r.valid()) return r;
  CKMatrix D = equivariance_defect(x);
  KMatrix coords = dual_coordinates(x.lambda_a, D);
  std::vector<std::string> bad;
  for (Index j = 0; j < t; ++j)
    if (!is_integral(KMatrix(coords.col(j)))) bad.push_back("column " + std::to_string(j + 1));
  add(r, "phi_t equivariant modulo the dual lattice", bad.empty(), join(bad));
  if (!r.valid()) return r;
  Mpl y = x;
  y.field = K;
  polarization_axiom(r, polarization_target(y), x.witness, p);
  return r;
}

ValidationReport validate_triple(const TripleD& t, const SearchParams& p) {
  need(t.gamma.rows() == t.space.n, "gamma must have n rows");
  ValidationReport r = validate_fprs(t.space, p);
  const Index g = rank<KScalar>(t.gamma);
  add(r, "gamma discrete", g == t.gamma.cols(), "gamma columns are dependent over the reals");
  return r;
}

bool congruent(const Mpl& a, const Mpl& b) {
  if (a.a_dim != b.a_dim || a.v_dim != b.v_dim || a.t_rank != b.t_rank) return false;
  if (a.lambda_a != b.lambda_a || a.tau_t != b.tau_t || a.phi_v != b.phi_v) return false;
  return in_dual_lattice(a.lambda_a, a.phi_t_lift - b.phi_t_lift);
}

}  // namespace lnash
