#include "lnash/exact/number_field.hpp"

#include <ostream>
#include <sstream>

namespace lnash {

namespace {

bool is_square(const Rational& q) {
  if (q < 0) return false;
  Integer n = num(q), d = den(q);
  Integer rn = mp::sqrt(n), rd = mp::sqrt(d);
  return rn * rn == n && rd * rd == d;
}

bool has_integer_root(const QPoly& p) {
  // p monic with integer coefficients: rational roots are divisors of p(0)
  Integer c = num(p.empty() ? Rational(0) : p[0]);
  if (c == 0) return true;
  c = mp::abs(c);
  for (Integer k = 1; k * k <= c; ++k) {
    if (c % k != 0) continue;
    for (const Integer& r : {k, Integer(c / k)}) {
      if (poly::eval(p, Rational(r)) == 0 || poly::eval(p, Rational(-r)) == 0) return true;
    }
  }
  return false;
}

}  // namespace

NumberField::NumberField(std::vector<Integer> min_poly, Rational lo, Rational hi)
    : min_poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  while (!min_poly_.empty() && min_poly_.back() == 0) min_poly_.pop_back();
  if (min_poly_.size() < 2) throw Error(Errc::InvalidInput, "minimal polynomial must have positive degree");
  if (min_poly_.back() != 1) throw Error(Errc::InvalidInput, "minimal polynomial must be monic");
  if (!(lo_ < hi_)) throw Error(Errc::InvalidInput, "root interval must satisfy lo < hi");
  for (const auto& c : min_poly_) p_.push_back(Rational(c));
  if (poly::degree(poly::gcd(p_, poly::derivative(p_))) > 0)
    throw Error(Errc::InvalidInput, "minimal polynomial is not squarefree");
  if (poly::sign_at(p_, lo_) * poly::sign_at(p_, hi_) >= 0)
    throw Error(Errc::InvalidInput, "root interval does not bracket a sign change");
  if (poly::count_roots(p_, lo_, hi_) != 1)
    throw Error(Errc::InvalidInput, "root interval contains more than one root");
  int d = degree();
  if (d == 1) {
    irreducible_known_ = true;
  } else if (d == 2) {
    irreducible_known_ = !is_square(p_[1] * p_[1] - 4 * p_[0]);
  } else if (d == 3) {
    irreducible_known_ = !has_integer_root(p_);
  }
}

FieldPtr make_field(std::vector<Integer> min_poly, Rational lo, Rational hi) {
  return std::make_shared<const NumberField>(std::move(min_poly), std::move(lo), std::move(hi));
}

FieldPtr rational_field() { return make_field({Integer(0), Integer(1)}, Rational(-1), Rational(1)); }

QPoly NumberField::reduce(const QPoly& q) const {
  if (poly::degree(q) < degree()) {
    QPoly r(q);
    poly::trim(r);
    return r;
  }
  return poly::mod(q, p_);
}

QPoly NumberField::mul(const QPoly& a, const QPoly& b) const { return reduce(poly::mul(a, b)); }

bool NumberField::vanishes(const QPoly& q) const {
  if (q.empty()) return true;
  if (irreducible_known_ || q.size() == 1) return false;
  QPoly g = poly::gcd(p_, q);
  if (poly::degree(g) == 0) return false;
  return poly::count_roots(g, lo_, hi_) > 0;
}

QPoly NumberField::inverse(const QPoly& q) const {
  if (vanishes(q)) throw std::domain_error("division by zero in number field");
  QPoly m = p_;
  if (!irreducible_known_) {
    QPoly g = poly::gcd(p_, q);
    // alpha is a root of p/g since q(alpha) != 0
    if (poly::degree(g) > 0) m = poly::divmod(p_, g).first;
  }
  auto [g, s] = poly::gcd_cofactor(q, m);
  return reduce(s);
}

std::pair<Rational, Rational> NumberField::bracket(const Rational& width) const {
  Rational lo = lo_, hi = hi_;
  int slo = poly::sign_at(p_, lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = poly::sign_at(p_, mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

int NumberField::sign(const QPoly& q) const {
  if (vanishes(q)) return 0;
  if (q.size() == 1) return q[0] > 0 ? 1 : -1;
  Rational lo = lo_, hi = hi_;
  int slo = poly::sign_at(p_, lo);
  for (;;) {
    auto [l, h] = poly::eval_interval(q, lo, hi);
    if (l > 0) return 1;
    if (h < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int sm = poly::sign_at(p_, mid);
    if (sm == 0) return poly::sign_at(q, mid);
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

double NumberField::approx(const QPoly& q) const {
  auto [lo, hi] = bracket(Rational(1, static_cast<unsigned long>(1) << 60));
  Rational mid = (lo + hi) / 2;
  return static_cast<double>(poly::eval(q, mid));
}

bool NumberField::same_as(const NumberField& o) const {
  if (this == &o) return true;
  if (min_poly_ != o.min_poly_) return false;
  Rational lo = lo_ > o.lo_ ? lo_ : o.lo_;
  Rational hi = hi_ < o.hi_ ? hi_ : o.hi_;
  if (!(lo < hi)) return false;
  // both intervals isolate a root of the same p; they agree iff the overlap keeps it
  return poly::sign_at(p_, lo) * poly::sign_at(p_, hi) < 0;
}

std::string poly_to_string(const QPoly& q, const char* var) {
  if (q.empty()) return "0";
  std::string out;
  for (int k = poly::degree(q); k >= 0; --k) {
    const Rational& c = q[k];
    if (c == 0) continue;
    Rational a = mp::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    if (k == 0) {
      out += a.str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

std::string NumberField::to_string() const {
  return poly_to_string(p_) + " in (" + lo_.str() + ", " + hi_.str() + ")";
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->same_as(*b)) return a;
  // Q sits inside every field
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  throw Error(Errc::MixedFields, "values from different number fields");
}

KScalar::KScalar(FieldPtr field, QPoly coeffs) : field_(std::move(field)) {
  c_ = field_ ? field_->reduce(coeffs) : coeffs;
  poly::trim(c_);
  if (!field_ && c_.size() > 1) throw Error(Errc::MixedFields, "polynomial scalar without a field");
}

KScalar KScalar::generator(const FieldPtr& field) { return KScalar(field, QPoly{Rational(0), Rational(1)}); }

bool KScalar::is_zero() const {
  if (c_.empty()) return true;
  if (c_.size() == 1 || !field_) return false;
  return field_->vanishes(c_);
}

int KScalar::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return c_[0] > 0 ? 1 : -1;
  return field_->sign(c_);
}

double KScalar::to_double() const {
  if (c_.size() <= 1) return c_.empty() ? 0.0 : static_cast<double>(c_[0]);
  return field_->approx(c_);
}

KScalar KScalar::operator-() const {
  KScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

KScalar& KScalar::operator+=(const KScalar& o) {
  field_ = common_field(field_, o.field_);
  c_ = poly::add(c_, o.c_);
  return *this;
}

KScalar& KScalar::operator-=(const KScalar& o) {
  field_ = common_field(field_, o.field_);
  c_ = poly::sub(c_, o.c_);
  return *this;
}

KScalar& KScalar::operator*=(const KScalar& o) {
  field_ = common_field(field_, o.field_);
  if (c_.size() <= 1 || o.c_.size() <= 1) {
    c_ = poly::mul(c_, o.c_);
  } else {
    c_ = field_->mul(c_, o.c_);
  }
  return *this;
}

KScalar KScalar::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero");
  if (c_.size() == 1) return KScalar(Rational(1) / c_[0]);
  KScalar r;
  r.field_ = field_;
  r.c_ = field_->inverse(c_);
  return r;
}

KScalar& KScalar::operator/=(const KScalar& o) { return *this *= o.inverse(); }

std::string KScalar::to_string() const { return poly_to_string(c_); }

CKScalar& CKScalar::operator+=(const CKScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CKScalar& CKScalar::operator-=(const CKScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CKScalar& CKScalar::operator*=(const CKScalar& o) {
  if (o.im_.coeffs().empty()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  KScalar re = re_ * o.re_ - im_ * o.im_;
  KScalar im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CKScalar& CKScalar::operator/=(const CKScalar& o) {
  KScalar n = o.re_ * o.re_ + o.im_ * o.im_;
  KScalar inv = n.inverse();
  return *this *= CKScalar(o.re_ * inv, -o.im_ * inv);
}

std::string CKScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  return "(" + re_.to_string() + ", " + im_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const KScalar& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const CKScalar& x) { return os << x.to_string(); }

}  // namespace lnash
