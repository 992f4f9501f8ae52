#include "lnash/equivalence.hpp"

namespace lnash {

namespace {

FieldPtr field_or_q(const FieldPtr& f) { return f ? f : rational_field(); }

Case1D tag_1d(const SplitDimensions& s) {
  if (s == SplitDimensions{1, 0, 0}) return Case1D::Additive;
  if (s == SplitDimensions{0, 1, 0}) return Case1D::Multiplicative;
  if (s == SplitDimensions{0, 0, 1}) return Case1D::Twisted;
  if (s.total() == 0) return Case1D::Elliptic;
  throw Error(Errc::InvalidInput, "split dimensions exceed the dimension");
}

KScalar normalize_ray(const KScalar& x) {
  for (const auto& c : x.coeffs())
    if (c != 0) return x * KScalar(Rational(1) / c);
  return x;
}

std::optional<ExtensionType> subtype_of(const UInvariants& u) {
  if (u.u_v) return ExtensionType::Additive;
  if (u.u_t_plus) return ExtensionType::Multiplicative;
  if (u.u_t_minus) return ExtensionType::Twisted;
  return std::nullopt;
}

Case2D tag_2d(const ClassReport& c) {
  switch (c.split.total()) {
    case 2: return Case2D::SplitSum;
    case 1: return Case2D::BlockPlusElliptic;
    case 0: return c.u.trivial() ? Case2D::AbelianSurface : Case2D::NonsplitExtension;
  }
  throw Error(Errc::InvalidInput, "split dimensions exceed the dimension");
}

ExtensionClass descriptor(const TripleD& t, ExtensionType type, const SearchParams& p) {
  if (type == ExtensionType::Additive) return {true, QVector()};
  const Fprs& x = t.space;
  const FieldPtr K = field_or_q(x.field);
  Mpl m = fpl_to_mpl(integral_model(x, p), p);
  KMatrix Q = quotient_coordinates(x.fil_a, x.n);
  CKMatrix basis = rational_span_basis(to_ck(Q) * x.lambda_r, K);
  // Im(w^T conj(lambda)) for each basis vector, first lift column
  KMatrix L = dual_pairing_matrix(basis);
  KMatrix W(2 * m.a_dim, 1);
  W << real_part(m.phi_t_lift.col(0)), imag_part(m.phi_t_lift.col(0));
  KMatrix vals = L * W;
  const Index d = K->degree();
  QMatrix R = restrict_scalars(vals, K);
  QVector coords(vals.rows() * (d - 1));
  for (Index i = 0; i < vals.rows(); ++i)
    for (Index k = 1; k < d; ++k) coords(i * (d - 1) + k - 1) = R(i * d + k, 0);
  for (Index i = 0; i < coords.size(); ++i)
    if (coords(i) != 0) {
      coords /= coords(i);
      break;
    }
  return {false, coords};
}

}  // namespace

MorphismCheck check_morphism(const KMatrix& phi, const TripleD& src, const TripleD& dst) {
  if (phi.rows() != dst.space.n || phi.cols() != src.space.n)
    throw Error(Errc::DimensionMismatch, "morphism matrix must be " + std::to_string(dst.space.n) + "x" +
                                             std::to_string(src.space.n));
  const FieldPtr K = field_or_q(common_field(src.space.field, dst.space.field));
  MorphismCheck r;
  auto fail = [&](std::string what) {
    r.ok = false;
    r.violations.push_back(std::move(what));
  };
  if (!in_rational_span(dst.space.lambda_r, to_ck(phi) * src.space.lambda_r, K))
    fail("phi(Lambda_r) not inside Lambda_r of the target");
  if (!contains(dst.space.fil_v, phi * src.space.fil_v)) fail("phi(Fil^v) not inside Fil^v of the target");
  if (!contains(dst.space.fil_a, phi * src.space.fil_a)) fail("phi(Fil^a) not inside Fil^a of the target");
  KMatrix img = phi * src.gamma;
  bool gamma_ok = img.cols() == 0 || integer_coordinates(restrict_scalars(dst.gamma, K), restrict_scalars(img, K));
  if (!gamma_ok) fail("phi(Gamma) not inside Gamma of the target");
  return r;
}

TripleMorphism compose(const TripleMorphism& f, const TripleMorphism& g) {
  if (f.dst.space.n != g.src.space.n || g.phi.cols() != f.phi.rows())
    throw Error(Errc::DimensionMismatch, "morphisms are not composable");
  TripleMorphism h{g.phi * f.phi, f.src, g.dst};
  MorphismCheck c = check_morphism(h.phi, h.src, h.dst);
  if (!c) throw Error(Errc::InvalidInput, "composite fails: " + c.violations.front());
  return h;
}

CaseLabel1D classify_1d(const TripleD& t, const SearchParams& p) {
  if (t.space.n != 1) throw Error(Errc::WrongDimension, "classify_1d needs n = 1");
  ClassReport c = classify(t, p);
  CaseLabel1D label;
  label.tag = tag_1d(c.split);
  if (t.gamma.cols() > 0) label.gamma_class = normalize_ray(t.gamma(0, 0));
  return label;
}

CaseLabel2D classify_2d(const TripleD& t, const SearchParams& p) {
  if (t.space.n != 2) throw Error(Errc::WrongDimension, "classify_2d needs n = 2");
  ClassReport c = classify(t, p);
  CaseLabel2D label;
  label.tag = tag_2d(c);
  if (label.tag == Case2D::NonsplitExtension) {
    label.subtype = subtype_of(c.u);
    label.param = descriptor(t, *label.subtype, p);
  }
  return label;
}

ExtensionClass extension_class_2d(const TripleD& t, const SearchParams& p) {
  if (t.space.n != 2) throw Error(Errc::WrongDimension, "extension_class_2d needs n = 2");
  ClassReport c = classify(t, p);
  if (tag_2d(c) != Case2D::NonsplitExtension) throw Error(Errc::NotAnExtension, "triple is not a non-split extension");
  return descriptor(t, *subtype_of(c.u), p);
}

std::string to_string(Case1D c) {
  switch (c) {
    case Case1D::Additive: return "additive";
    case Case1D::Multiplicative: return "multiplicative";
    case Case1D::Twisted: return "twisted";
    case Case1D::Elliptic: return "elliptic";
  }
  return "";
}

std::string to_string(Case2D c) {
  switch (c) {
    case Case2D::SplitSum: return "split-sum";
    case Case2D::BlockPlusElliptic: return "block-plus-elliptic";
    case Case2D::AbelianSurface: return "abelian-surface";
    case Case2D::NonsplitExtension: return "nonsplit-extension";
  }
  return "";
}

std::string to_string(ExtensionType c) {
  switch (c) {
    case ExtensionType::Additive: return "additive";
    case ExtensionType::Multiplicative: return "multiplicative";
    case ExtensionType::Twisted: return "twisted";
  }
  return "";
}

std::string to_string(const ExtensionClass& e) {
  if (e.unique) return "unique";
  std::string out = "[";
  for (Index i = 0; i < e.coords.size(); ++i) out += (i ? " " : "") + e.coords(i).str();
  return out + "]";
}

}  // namespace lnash
