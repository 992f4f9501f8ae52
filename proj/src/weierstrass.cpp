#include "lnash/weierstrass.hpp"

#include "lnash/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lnash::weierstrass {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

void check_params(const RectLattice& L, const TruncationParams& p) {
  if (!(L.a > 0)) throw Error(Errc::InvalidInput, "lattice parameter a must be positive");
  if (p.lattice_shells < 2) throw Error(Errc::InvalidInput, "lattice_shells must be at least 2");
  if (p.series_terms < 4) throw Error(Errc::InvalidInput, "series_terms must be at least 4");
  if (!(p.target_tol > 0)) throw Error(Errc::InvalidInput, "target_tol must be positive");
}

double distance_to_lattice(const RectLattice& L, cplx z) {
  double m = std::round(z.real()), n = std::round(z.imag() / L.a);
  return std::abs(z - cplx(m, n * L.a));
}

// theta_1(v | q) and its first three v-derivatives
struct Theta {
  cplx t0, t1, t2, t3;
};

Theta theta1(cplx v, double q, int terms) {
  Theta th{};
  for (int n = 0; n < terms; ++n) {
    double k = 2 * n + 1;
    double c = 2 * std::pow(q, (n + 0.5) * (n + 0.5)) * (n % 2 ? -1 : 1);
    cplx s = std::sin(k * v), co = std::cos(k * v);
    th.t0 += c * s;
    th.t1 += c * k * co;
    th.t2 -= c * k * k * s;
    th.t3 -= c * k * k * k * co;
  }
  return th;
}

// eta(1) = -pi^2 theta1'''(0) / (3 theta1'(0))
double eta1_series(double a, int terms) {
  Theta th = theta1(0.0, std::exp(-pi * a), terms);
  return (-pi * pi * th.t3 / (3.0 * th.t1)).real();
}

// direct q-series on Z + a i Z, a >= 1 or as given
cplx eval_series(Fn fn, double a, cplx z, int terms) {
  const double q = std::exp(-pi * a);
  const double e1 = eta1_series(a, terms);
  Theta th = theta1(pi * z, q, terms);
  Theta t0 = theta1(0.0, q, terms);
  cplx r1 = th.t1 / th.t0, r2 = th.t2 / th.t0, r3 = th.t3 / th.t0;
  switch (fn) {
    case Fn::Sigma: return std::exp(e1 * z * z / 2.0) * th.t0 / (pi * t0.t1);
    case Fn::Zeta: return e1 * z + pi * r1;
    case Fn::Wp: return -e1 - pi * pi * (r2 - r1 * r1);
    case Fn::WpPrime: return -pi * pi * pi * (r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1);
  }
  return 0.0;
}

// moves Im z into [-a, a] by multiples of a i and undoes the shift
cplx eval_reduced(Fn fn, double a, cplx z, int terms) {
  int n = 0;
  if (std::abs(z.imag()) > 1.5 * a) n = static_cast<int>(std::round(z.imag() / a));
  if (n == 0) return eval_series(fn, a, z, terms);
  cplx z0 = z - cplx(0.0, n * a);
  cplx v = eval_series(fn, a, z0, terms);
  if (fn == Fn::Wp || fn == Fn::WpPrime) return v;
  double e1 = eta1_series(a, terms);
  cplx tau(0.0, a), e2 = e1 * tau - 2.0 * pi * I;
  if (fn == Fn::Zeta) return v + double(n) * e2;
  cplx w = double(n) * tau;
  return (n % 2 ? -1.0 : 1.0) * std::exp(double(n) * e2 * (z0 + w / 2.0)) * v;
}

}  // namespace

cplx eval(Fn fn, const RectLattice& L, cplx z, const TruncationParams& p) {
  check_params(L, p);
  if (fn != Fn::Sigma && distance_to_lattice(L, z) < p.pole_eps)
    throw Error(Errc::PoleAt, "argument lies on the period lattice");
  if (L.a >= 1) return eval_reduced(fn, L.a, z, p.series_terms);
  // Z + a i Z = lambda (Z + (1/a) i Z) with lambda = a i
  cplx lambda(0.0, L.a);
  cplx v = eval_reduced(fn, 1.0 / L.a, z / lambda, p.series_terms);
  switch (fn) {
    case Fn::Sigma: return lambda * v;
    case Fn::Zeta: return v / lambda;
    case Fn::Wp: return v / (lambda * lambda);
    case Fn::WpPrime: return v / (lambda * lambda * lambda);
  }
  return 0.0;
}

QuasiPeriods quasi_periods(const RectLattice& L, const TruncationParams& p) {
  return {2.0 * zeta(L, 0.5, p), 2.0 * zeta(L, L.tau() / 2.0, p)};
}

double legendre_defect(const RectLattice& L, const TruncationParams& p) {
  QuasiPeriods e = quasi_periods(L, p);
  return std::abs(L.a * e.eta1 * I - e.eta_ai - 2.0 * pi * I);
}

cplx sigma_shift_factor(const RectLattice& L, int m, int n, cplx z, const TruncationParams& p) {
  QuasiPeriods e = quasi_periods(L, p);
  cplx w = double(m) + double(n) * L.tau();
  double sign = (m + n + m * n) % 2 ? -1.0 : 1.0;
  return sign * std::exp((double(m) * e.eta1 + double(n) * e.eta_ai) * (z + w / 2.0));
}

cplx sigma_tilde(const RectLattice& L, cplx xi, cplx z, const TruncationParams& p) {
  if (distance_to_lattice(L, z) < p.pole_eps) throw Error(Errc::PoleAt, "argument lies on the period lattice");
  return sigma(L, z + xi, p) / sigma(L, z, p);
}

namespace {

cplx shift_of(const CocycleCase& c) { return c.kind == CocycleKind::Twisted ? c.xi * I : c.xi; }

cplx f_of(const CocycleCase& c, const RectLattice& L, cplx z, const TruncationParams& p) {
  if (c.kind == CocycleKind::Additive) return zeta(L, z, p);
  return sigma_tilde(L, shift_of(c), z, p);
}

}  // namespace

cplx cocycle_combine(const CocycleCase& c, cplx u, cplx v) {
  return c.kind == CocycleKind::Additive ? u + v : u * v;
}

cplx cocycle(const CocycleCase& c, const RectLattice& L, cplx x, cplx y, const TruncationParams& p) {
  cplx fx = f_of(c, L, x, p), fy = f_of(c, L, y, p), fxy = f_of(c, L, x + y, p);
  if (c.kind == CocycleKind::Additive) return fxy - fx - fy;
  return fxy / (fx * fy);
}

cplx extension_class_numeric(const CocycleCase& c, const RectLattice& L, const TruncationParams& p) {
  if (c.kind != CocycleKind::Additive) return shift_of(c);
  QuasiPeriods e = quasi_periods(L, p);
  cplx ai = L.tau();
  return (ai * e.eta1 - e.eta_ai) / (2.0 * ai);
}

Invariants invariants(const RectLattice& L, const TruncationParams& p) {
  cplx e1 = wp(L, 0.5, p), e2 = wp(L, L.tau() / 2.0, p), e3 = wp(L, (1.0 + L.tau()) / 2.0, p);
  return {2.0 * (e1 * e1 + e2 * e2 + e3 * e3), 4.0 * e1 * e2 * e3};
}

cplx wp_lattice_sum(const RectLattice& L, cplx z, int shells) {
  cplx s = 1.0 / (z * z);
  for (int m = -shells; m <= shells; ++m)
    for (int n = -shells; n <= shells; ++n) {
      if (!m && !n) continue;
      cplx w(m, n * L.a), d = z - w;
      s += 1.0 / (d * d) - 1.0 / (w * w);
    }
  return s;
}

cplx zeta_lattice_sum(const RectLattice& L, cplx z, int shells) {
  cplx s = 1.0 / z;
  for (int m = -shells; m <= shells; ++m)
    for (int n = -shells; n <= shells; ++n) {
      if (!m && !n) continue;
      cplx w(m, n * L.a);
      s += 1.0 / (z - w) + 1.0 / w + z / (w * w);
    }
  return s;
}

bool IdentityReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

IdentityReport identity_suite(const RectLattice& L, cplx xi, const TruncationParams& p) {
  check_params(L, p);
  IdentityReport r;
  // tolerances scale with target_tol (1e-9 by default)
  const double t = p.target_tol;
  auto add = [&](std::string name, double defect, double tol) { r.checks.push_back({std::move(name), defect, tol}); };
  const cplx tau = L.tau();
  std::vector<cplx> grid;
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) grid.emplace_back(0.07 + 0.19 * j, L.a * (0.06 + 0.185 * k));

  add("legendre", legendre_defect(L, p), t);
  QuasiPeriods e = quasi_periods(L, p);
  add("eta(1) real", std::abs(e.eta1.imag()), t);
  add("eta(ai) imaginary", std::abs(e.eta_ai.real()), t);

  double per = 0, quasi = 0, parity = 0, ode = 0, sig = 0;
  Invariants g = invariants(L, p);
  for (cplx z : grid) {
    cplx w = wp(L, z, p);
    per = std::max({per, std::abs(wp(L, z + 1.0, p) - w), std::abs(wp(L, z + tau, p) - w)});
    parity = std::max({parity, std::abs(wp(L, -z, p) - w), std::abs(zeta(L, -z, p) + zeta(L, z, p))});
    cplx d = wp_prime(L, z, p);
    ode = std::max(ode, std::abs(d * d - (4.0 * w * w * w - g.g2 * w - g.g3)) / std::max(1.0, std::abs(d * d)));
    for (int m = -1; m <= 1; ++m)
      for (int n = -1; n <= 1; ++n) {
        cplx s = double(m) + double(n) * tau;
        quasi = std::max(quasi, std::abs(zeta(L, z + s, p) - zeta(L, z, p) - double(m) * e.eta1 - double(n) * e.eta_ai));
        cplx predicted = sigma_shift_factor(L, m, n, z, p);
        sig = std::max(sig, std::abs(sigma(L, z + s, p) / sigma(L, z, p) - predicted) / std::abs(predicted));
      }
  }
  add("wp periodicity", per, t);
  add("wp even, zeta odd", parity, t / 10);
  add("zeta quasi-periodicity", quasi, 10 * t);
  add("sigma sign rule", sig, 10 * t);
  add("differential equation", ode, 100 * t);
  if (L.a == 1.0) add("g3 of the square lattice", std::abs(g.g3), 10 * t);

  const cplx x(0.21, 0.17 * L.a), y(0.33, 0.29 * L.a), u(0.13, 0.41 * L.a);
  double st = 0;
  for (cplx s : {cplx(1.0), tau}) {
    cplx eta = s == cplx(1.0) ? e.eta1 : e.eta_ai;
    st = std::max(st, std::abs(sigma_tilde(L, xi, x + s, p) / sigma_tilde(L, xi, x, p) - std::exp(eta * xi)));
  }
  add("sigma-tilde quasi-periodicity", st, 10 * t);
  double sym = 0, cper = 0, two = 0;
  for (CocycleKind k : {CocycleKind::Additive, CocycleKind::Multiplicative, CocycleKind::Twisted}) {
    CocycleCase c{k, xi};
    cplx cxy = cocycle(c, L, x, y, p);
    sym = std::max(sym, std::abs(cxy - cocycle(c, L, y, x, p)));
    cper = std::max({cper, std::abs(cocycle(c, L, x + 1.0, y, p) - cxy), std::abs(cocycle(c, L, x + tau, y, p) - cxy)});
    cplx lhs = cocycle_combine(c, cxy, cocycle(c, L, x + y, u, p));
    cplx rhs = cocycle_combine(c, cocycle(c, L, y, u, p), cocycle(c, L, x, y + u, p));
    two = std::max(two, std::abs(lhs - rhs));
  }
  add("cocycle symmetry", sym, t / 10);
  add("cocycle periodicity", cper, 10 * t);
  add("cocycle identity", two, 10 * t);
  add("additive extension class pi/a",
      std::abs(extension_class_numeric({CocycleKind::Additive, 0.0}, L, p) - pi / L.a), 10 * t);
  add("q-series vs lattice sum", std::abs(wp(L, 0.5, p) - wp_lattice_sum(L, 0.5, p.lattice_shells)), 1e-3);
  return r;
}

}  // namespace lnash::weierstrass
