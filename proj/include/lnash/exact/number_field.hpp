#pragma once

#include "lnash/errors.hpp"
#include "lnash/exact/poly.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lnash {

// Q(alpha) with alpha the unique real root of a monic squarefree integer
// polynomial inside an isolating interval.
class NumberField {
 public:
  NumberField(std::vector<Integer> min_poly, Rational lo, Rational hi);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Integer>& min_poly() const { return min_poly_; }
  const QPoly& modulus() const { return p_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  QPoly reduce(const QPoly& q) const;
  QPoly mul(const QPoly& a, const QPoly& b) const;
  QPoly inverse(const QPoly& q) const;

  // q must already be reduced
  bool vanishes(const QPoly& q) const;
  int sign(const QPoly& q) const;
  double approx(const QPoly& q) const;
  // bracket of the root of width at most `width`
  std::pair<Rational, Rational> bracket(const Rational& width) const;

  bool same_as(const NumberField& other) const;
  std::string to_string() const;

 private:
  std::vector<Integer> min_poly_;
  QPoly p_;
  Rational lo_, hi_;
  bool irreducible_known_ = false;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Integer> min_poly, Rational lo, Rational hi);
FieldPtr rational_field();
std::string poly_to_string(const QPoly& q, const char* var = "t");

// Element of K; a null field means a plain rational, which lets the value
// mix with any field (needed for Eigen's Scalar(0), Scalar(1)).
class KScalar {
 public:
  KScalar() = default;
  KScalar(int v) : KScalar(Rational(v)) {}
  KScalar(long v) : KScalar(Rational(v)) {}
  KScalar(const Integer& v) : KScalar(Rational(v)) {}
  KScalar(const Rational& v) {
    if (v != 0) c_.push_back(v);
  }
  KScalar(FieldPtr field, QPoly coeffs);

  static KScalar generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

  bool is_zero() const;
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const { return coeff(0); }
  int sign() const;
  double to_double() const;

  KScalar operator-() const;
  KScalar& operator+=(const KScalar& o);
  KScalar& operator-=(const KScalar& o);
  KScalar& operator*=(const KScalar& o);
  KScalar& operator/=(const KScalar& o);
  KScalar inverse() const;

  friend KScalar operator+(KScalar a, const KScalar& b) { return a += b; }
  friend KScalar operator-(KScalar a, const KScalar& b) { return a -= b; }
  friend KScalar operator*(KScalar a, const KScalar& b) { return a *= b; }
  friend KScalar operator/(KScalar a, const KScalar& b) { return a /= b; }
  friend bool operator==(const KScalar& a, const KScalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const KScalar& a, const KScalar& b) { return !(a == b); }
  friend bool operator<(const KScalar& a, const KScalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const KScalar& a, const KScalar& b) { return b < a; }
  friend bool operator<=(const KScalar& a, const KScalar& b) { return !(b < a); }
  friend bool operator>=(const KScalar& a, const KScalar& b) { return !(a < b); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  QPoly c_;
};

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// re + i*im
class CKScalar {
 public:
  CKScalar() = default;
  CKScalar(int v) : re_(v) {}
  CKScalar(const Rational& v) : re_(v) {}
  CKScalar(const KScalar& re) : re_(re) {}
  CKScalar(KScalar re, KScalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CKScalar i() { return CKScalar(KScalar(0), KScalar(1)); }

  const KScalar& re() const { return re_; }
  const KScalar& im() const { return im_; }
  CKScalar conj() const { return CKScalar(re_, -im_); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  FieldPtr field() const { return common_field(re_.field(), im_.field()); }

  CKScalar operator-() const { return CKScalar(-re_, -im_); }
  CKScalar& operator+=(const CKScalar& o);
  CKScalar& operator-=(const CKScalar& o);
  CKScalar& operator*=(const CKScalar& o);
  CKScalar& operator/=(const CKScalar& o);

  friend CKScalar operator+(CKScalar a, const CKScalar& b) { return a += b; }
  friend CKScalar operator-(CKScalar a, const CKScalar& b) { return a -= b; }
  friend CKScalar operator*(CKScalar a, const CKScalar& b) { return a *= b; }
  friend CKScalar operator/(CKScalar a, const CKScalar& b) { return a /= b; }
  friend bool operator==(const CKScalar& a, const CKScalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CKScalar& a, const CKScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  KScalar re_, im_;
};

std::ostream& operator<<(std::ostream& os, const KScalar& x);
std::ostream& operator<<(std::ostream& os, const CKScalar& x);

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const KScalar& x) { return x.is_zero(); }
inline bool is_zero(const CKScalar& x) { return x.is_zero(); }

inline KScalar conj(const KScalar& x) { return x; }
inline CKScalar conj(const CKScalar& x) { return x.conj(); }
inline Rational conj(const Rational& x) { return x; }

}  // namespace lnash

namespace Eigen {

template <>
struct NumTraits<lnash::KScalar> : GenericNumTraits<lnash::KScalar> {
  typedef lnash::KScalar Real;
  typedef lnash::KScalar NonInteger;
  typedef lnash::KScalar Literal;
  typedef lnash::KScalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lnash::CKScalar> : GenericNumTraits<lnash::CKScalar> {
  typedef lnash::CKScalar Real;
  typedef lnash::CKScalar NonInteger;
  typedef lnash::CKScalar Literal;
  typedef lnash::CKScalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 320
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
