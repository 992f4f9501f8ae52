#include "doctest.h"

#include "lnash/equivalence.hpp"
#include "fixtures.hpp"

using namespace lnash;
using namespace fx;

namespace {

TripleD from_mpl(const Mpl& m, KMatrix gamma) { return {fpl_to_fprs(mpl_to_fpl(m)), std::move(gamma)}; }

TripleD elliptic_z() { return triple(elliptic(), unit_gamma()); }

KMatrix scalar(const KScalar& x) { return kmat(1, 1, {x}); }

// same Q-span, different basis
TripleD rebase(TripleD t) {
  const Index r = t.space.lambda_r.cols();
  QMatrix P = QMatrix::Identity(r, r);
  for (Index j = 1; j < r; ++j) P(j - 1, j) = Rational(1, 2);
  if (r) P(0, 0) = -3;
  t.space.lambda_r = t.space.lambda_r * to_ck(P);
  return t;
}

TripleD ext_mult(const CKScalar& w) { return from_mpl(elliptic_torus_mpl(w, 1), no_gamma(2)); }

}  // namespace

TEST_CASE("morphism checks") {
  for (const TripleD& t : {triple(additive(), no_gamma()), triple(multiplicative(), no_gamma()),
                           triple(twisted(), unit_gamma()), elliptic_z()}) {
    MorphismCheck c = check_morphism(KMatrix::Identity(1, 1), t, t);
    CHECK(c.ok);
    CHECK(c.violations.empty());
  }
  for (long N : {-2L, 0L, 1L, 5L}) CHECK(check_morphism(scalar(KScalar(N)), elliptic_z(), elliptic_z()));
  MorphismCheck half = check_morphism(scalar(KScalar(Rational(1, 2))), elliptic_z(), elliptic_z());
  CHECK_FALSE(half.ok);
  REQUIRE(half.violations.size() == 1);
  CHECK(half.violations[0].find("Gamma") != std::string::npos);
  // sqrt2 does not preserve Lambda_r's Q-span
  CHECK_FALSE(check_morphism(scalar(s2()), elliptic_z(), elliptic_z()));

  MorphismCheck at = check_morphism(KMatrix::Identity(1, 1), triple(additive(), no_gamma()), triple(twisted(), no_gamma()));
  CHECK_FALSE(at.ok);
  REQUIRE(at.violations.size() == 1);
  CHECK(at.violations[0].find("Fil^v") != std::string::npos);

  // twisted -> multiplicative: Lambda_r = Q vs iQ
  CHECK_FALSE(check_morphism(KMatrix::Identity(1, 1), triple(twisted(), no_gamma()), triple(multiplicative(), no_gamma())));
  // zero map is always a morphism
  CHECK(check_morphism(KMatrix::Zero(1, 1), triple(multiplicative(), no_gamma()), elliptic_z()));

  CHECK_THROWS_AS(check_morphism(KMatrix::Identity(2, 2), elliptic_z(), elliptic_z()), Error);
  try {
    check_morphism(KMatrix::Identity(2, 1), elliptic_z(), elliptic_z());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("composition") {
  TripleD e = elliptic_z();
  TripleMorphism two{scalar(KScalar(2)), e, e}, three{scalar(KScalar(3)), e, e}, id{KMatrix::Identity(1, 1), e, e};
  CHECK(compose(three, two).phi == scalar(KScalar(6)));
  CHECK(compose(id, two).phi == two.phi);
  CHECK(compose(two, id).phi == two.phi);

  // additive -> additive (x) multiplicative -> additive, via inclusion and projection
  TripleD add = triple(additive(), no_gamma());
  TripleD sum = from_mpl(mpl_sum(additive_mpl(), multiplicative_mpl()), no_gamma(2));
  KMatrix inc = kmat(2, 1, {KScalar(1), KScalar(0)}), proj = kmat(1, 2, {KScalar(1), KScalar(0)});
  REQUIRE(check_morphism(inc, add, sum));
  REQUIRE(check_morphism(proj, sum, add));
  TripleMorphism h = compose({inc, add, sum}, {proj, sum, add});
  CHECK(h.phi == KMatrix::Identity(1, 1));
  CHECK(check_morphism(h.phi, h.src, h.dst));

  CHECK_THROWS_AS(compose({inc, add, sum}, two), Error);
}

TEST_CASE("classify_1d") {
  CaseLabel1D a = classify_1d(triple(additive(), no_gamma()));
  CHECK(a.tag == Case1D::Additive);
  CHECK_FALSE(a.gamma_class);
  CHECK(classify_1d(triple(multiplicative(), no_gamma())).tag == Case1D::Multiplicative);
  CHECK(classify_1d(triple(twisted(), unit_gamma())).tag == Case1D::Twisted);
  CaseLabel1D e = classify_1d(elliptic_z());
  CHECK(e.tag == Case1D::Elliptic);
  REQUIRE(e.gamma_class);
  CHECK(*e.gamma_class == KScalar(1));

  // Gamma -> a Gamma
  KScalar g = KScalar(Rational(3, 7)) + KScalar(Rational(2)) * s2();
  CaseLabel1D base = classify_1d(triple(elliptic(), scalar(g)));
  for (Rational q : {Rational(2), Rational(-1, 3), Rational(5, 4)}) {
    CaseLabel1D s = classify_1d(triple(elliptic(), scalar(g * KScalar(q))));
    CHECK(s.tag == base.tag);
    REQUIRE(s.gamma_class);
    CHECK(*s.gamma_class == *base.gamma_class);
  }
  CHECK(base.gamma_class->coeff(0) == 1);
  CHECK(base.gamma_class->coeff(1) == Rational(14, 3));

  for (const TripleD& t : {triple(additive(), no_gamma()), triple(multiplicative(), no_gamma()),
                           triple(twisted(), unit_gamma()), elliptic_z()})
    CHECK(classify_1d(rebase(t)).tag == classify_1d(t).tag);

  TripleD two = from_mpl(mpl_sum(additive_mpl(), multiplicative_mpl()), no_gamma(2));
  try {
    classify_1d(two);
    FAIL("expected WrongDimension");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::WrongDimension);
  }
}

TEST_CASE("classify_2d tags") {
  CHECK(classify_2d(from_mpl(mpl_sum(additive_mpl(), multiplicative_mpl()), no_gamma(2))).tag == Case2D::SplitSum);
  CHECK(classify_2d(from_mpl(mpl_sum(multiplicative_mpl(), elliptic_mpl()), no_gamma(2))).tag ==
        Case2D::BlockPlusElliptic);
  CHECK(classify_2d(from_mpl(mpl_sum(elliptic_mpl(), elliptic_mpl()), no_gamma(2))).tag == Case2D::AbelianSurface);

  CaseLabel2D ea = classify_2d(from_mpl(elliptic_additive_mpl(), no_gamma(2)));
  CHECK(ea.tag == Case2D::NonsplitExtension);
  REQUIRE(ea.subtype);
  CHECK(*ea.subtype == ExtensionType::Additive);
  REQUIRE(ea.param);
  CHECK(ea.param->unique);
  CHECK(to_string(*ea.param) == "unique");

  CaseLabel2D em = classify_2d(ext_mult(CKScalar(1)));
  CHECK(em.tag == Case2D::NonsplitExtension);
  CHECK(em.subtype == ExtensionType::Multiplicative);
  CaseLabel2D et = classify_2d(from_mpl(elliptic_torus_mpl(I(s2()), -1), no_gamma(2)));
  CHECK(et.tag == Case2D::NonsplitExtension);
  CHECK(et.subtype == ExtensionType::Twisted);
  // a lift in the dual lattice splits
  CHECK(classify_2d(from_mpl(elliptic_torus_mpl(CKScalar(KScalar(Rational(1, 2)) * s2()), 1), no_gamma(2))).tag ==
        Case2D::BlockPlusElliptic);

  CHECK_THROWS_AS(classify_2d(elliptic_z()), Error);
}

TEST_CASE("classify_2d agrees with summed split dimensions") {
  std::vector<Mpl> lines = {additive_mpl(), multiplicative_mpl(), twisted_mpl(), elliptic_mpl()};
  for (const Mpl& x : lines)
    for (const Mpl& y : lines) {
      Mpl s = mpl_sum(x, y);
      Index d = split_dimensions(x).total() + split_dimensions(y).total();
      Case2D expected = d == 2 ? Case2D::SplitSum : d == 1 ? Case2D::BlockPlusElliptic : Case2D::AbelianSurface;
      TripleD t = from_mpl(s, no_gamma(2));
      CHECK(classify_2d(t).tag == expected);
      CHECK(classify_2d(rebase(t)).tag == expected);
    }
  TripleD ext = from_mpl(elliptic_additive_mpl(), no_gamma(2));
  CHECK(classify_2d(rebase(ext)).tag == Case2D::NonsplitExtension);
}

TEST_CASE("extension class descriptors") {
  ExtensionClass w = extension_class_2d(ext_mult(CKScalar(1)));
  CHECK_FALSE(w.unique);
  CHECK(w == extension_class_2d(ext_mult(CKScalar(3))));
  CHECK(w == extension_class_2d(ext_mult(CKScalar(KScalar(Rational(-5, 2))))));
  // sqrt2/2 pairs rationally with Lambda_r
  CHECK(w == extension_class_2d(ext_mult(CKScalar(KScalar(1) + KScalar(Rational(1, 2)) * s2()))));
  CHECK(w == extension_class_2d(rebase(ext_mult(CKScalar(1)))));
  CHECK(to_string(w) == "[0 1]");

  ExtensionClass t1 = extension_class_2d(from_mpl(elliptic_torus_mpl(I(s2()), -1), no_gamma(2)));
  ExtensionClass t3 = extension_class_2d(from_mpl(elliptic_torus_mpl(I(KScalar(3) * s2() + KScalar(7)), -1), no_gamma(2)));
  CHECK(t1 == t3);
  CHECK_FALSE(t1 == w);

  CHECK(extension_class_2d(from_mpl(elliptic_additive_mpl(), no_gamma(2))).unique);
  try {
    extension_class_2d(from_mpl(mpl_sum(elliptic_mpl(), elliptic_mpl()), no_gamma(2)));
    FAIL("expected NotAnExtension");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAnExtension);
  }
}
