#include "doctest.h"

#include "lnash/errors.hpp"
#include "lnash/weierstrass.hpp"

#include <cmath>
#include <numbers>

using namespace lnash;
using namespace lnash::weierstrass;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

// literal lattice series, summed over square shells
cplx oracle_wp(double a, cplx z, int N) {
  cplx s = 1.0 / (z * z);
  for (int m = -N; m <= N; ++m)
    for (int n = -N; n <= N; ++n)
      if (m || n) {
        cplx w(m, n * a);
        s += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
      }
  return s;
}

cplx oracle_zeta(double a, cplx z, int N) {
  cplx s = 1.0 / z;
  for (int m = -N; m <= N; ++m)
    for (int n = -N; n <= N; ++n)
      if (m || n) {
        cplx w(m, n * a);
        s += 1.0 / (z - w) + 1.0 / w + z / (w * w);
      }
  return s;
}

const cplx z0(0.3, 0.2);

}  // namespace

TEST_CASE("parity") {
  RectLattice L{1.0};
  CHECK(std::abs(wp(L, -z0) - wp(L, z0)) < 1e-10);
  CHECK(std::abs(zeta(L, -z0) + zeta(L, z0)) < 1e-10);
  CHECK(std::abs(wp_prime(L, -z0) + wp_prime(L, z0)) < 1e-9);
  CHECK(std::abs(sigma(L, -z0) + sigma(L, z0)) < 1e-12);
}

TEST_CASE("q-series against the lattice sums") {
  for (double a : {1.0, 1.5, 0.5}) {
    RectLattice L{a};
    CHECK(std::abs(wp(L, 0.5) - oracle_wp(a, 0.5, 2000)) < 1e-3);
    CHECK(std::abs(wp(L, z0) - oracle_wp(a, z0, 400)) < 1e-3);
    CHECK(std::abs(zeta(L, z0) - oracle_zeta(a, z0, 400)) < 1e-3);
    CHECK(std::abs(wp_lattice_sum(L, z0, 50) - oracle_wp(a, z0, 50)) < 1e-12);
    CHECK(std::abs(zeta_lattice_sum(L, z0, 50) - oracle_zeta(a, z0, 50)) < 1e-12);
  }
  // sigma'/sigma = zeta and zeta' = -wp by central differences
  RectLattice L{1.5};
  const double h = 1e-5;
  cplx ds = (sigma(L, z0 + h) - sigma(L, z0 - h)) / (2 * h);
  CHECK(std::abs(ds / sigma(L, z0) - zeta(L, z0)) < 1e-7);
  cplx dz = (zeta(L, z0 + h) - zeta(L, z0 - h)) / (2 * h);
  CHECK(std::abs(dz + wp(L, z0)) < 1e-6);
  cplx dw = (wp(L, z0 + h) - wp(L, z0 - h)) / (2 * h);
  CHECK(std::abs(dw - wp_prime(L, z0)) / std::abs(wp_prime(L, z0)) < 1e-7);
}

TEST_CASE("quasi-periods") {
  QuasiPeriods sq = quasi_periods({1.0});
  CHECK(std::abs(sq.eta1 - pi) < 1e-9);
  CHECK(std::abs(sq.eta_ai + I * sq.eta1) < 1e-9);
  CHECK(std::abs(2.0 * oracle_zeta(1.0, 0.5, 1000) - pi) < 1e-3);
  for (double a : {1.0, 1.5, 2.0, 0.5, 0.3}) {
    QuasiPeriods e = quasi_periods({a});
    CHECK(std::abs(e.eta1.imag()) < 1e-9);
    CHECK(std::abs(e.eta_ai.real()) < 1e-9);
    CHECK(legendre_defect({a}) < 1e-9);
  }
  // Z + i/2 Z = (i/2)(Z + 2i Z)
  QuasiPeriods h = quasi_periods({0.5}), d = quasi_periods({2.0});
  CHECK(std::abs(h.eta1 - 2.0 * I * d.eta_ai) < 1e-8);
  CHECK(std::abs(h.eta_ai + 2.0 * I * d.eta1) < 1e-8);
}

TEST_CASE("periodicity and the differential equation") {
  for (double a : {1.0, 1.5, 2.0}) {
    RectLattice L{a};
    QuasiPeriods e = quasi_periods(L);
    Invariants g = invariants(L);
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        cplx z(0.05 + 0.2 * j, a * (0.04 + 0.2 * k));
        CHECK(std::abs(wp(L, z + 1.0) - wp(L, z)) < 1e-9);
        CHECK(std::abs(wp(L, z + L.tau()) - wp(L, z)) < 1e-9);
        for (int m = -1; m <= 1; ++m)
          for (int n = -1; n <= 1; ++n) {
            cplx s = double(m) + double(n) * L.tau();
            CHECK(std::abs(zeta(L, z + s) - zeta(L, z) - double(m) * e.eta1 - double(n) * e.eta_ai) < 1e-8);
          }
        cplx w = wp(L, z), d = wp_prime(L, z);
        CHECK(std::abs(d * d - (4.0 * w * w * w - g.g2 * w - g.g3)) / std::max(1.0, std::abs(d * d)) < 1e-7);
      }
  }
  CHECK(std::abs(invariants({1.0}).g3) < 1e-8);
  // g2 of the square lattice from its lattice sum 60 G4
  double G4 = 0;
  for (int m = -300; m <= 300; ++m)
    for (int n = -300; n <= 300; ++n)
      if (m || n) G4 += std::real(1.0 / std::pow(cplx(m, n), 4));
  CHECK(std::abs(invariants({1.0}).g2 - 60 * G4) < 1e-3);
}

TEST_CASE("sigma sign rule") {
  RectLattice L{1.5};
  cplx z(0.21, 0.17);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      cplx s = double(m) + double(n) * L.tau();
      cplx measured = sigma(L, z + s) / sigma(L, z), predicted = sigma_shift_factor(L, m, n, z);
      CHECK(std::abs(measured - predicted) / std::abs(predicted) < 1e-8);
    }
  // the sign really alternates: m = n = 1 carries (-1)^3
  QuasiPeriods e = quasi_periods(L);
  cplx w = 1.0 + L.tau();
  cplx unsigned_factor = std::exp((e.eta1 + e.eta_ai) * (z + w / 2.0));
  CHECK(std::abs(sigma(L, z + w) / sigma(L, z) + unsigned_factor) < 1e-8 * std::abs(unsigned_factor));
}

TEST_CASE("sigma tilde") {
  RectLattice L{1.0};
  cplx z(0.21, 0.17);
  CHECK(std::abs(sigma_tilde(L, 0.0, z) - 1.0) < 1e-14);
  QuasiPeriods e = quasi_periods(L);
  CHECK(std::abs(sigma_tilde(L, 0.3, z + 1.0) / sigma_tilde(L, 0.3, z) - std::exp(e.eta1 * 0.3)) < 1e-8);
  CHECK(std::abs(sigma_tilde(L, 0.3, z + I) / sigma_tilde(L, 0.3, z) - std::exp(e.eta_ai * 0.3)) < 1e-8);
}

TEST_CASE("cocycles") {
  RectLattice L{1.5};
  cplx x(0.21, 0.3), y(0.4, 0.12), u(0.17, 0.55);
  for (CocycleKind k : {CocycleKind::Additive, CocycleKind::Multiplicative, CocycleKind::Twisted}) {
    CocycleCase c{k, cplx(0.3, 0.1)};
    cplx cxy = cocycle(c, L, x, y);
    CHECK(std::abs(cxy - cocycle(c, L, y, x)) < 1e-10);
    CHECK(std::abs(cocycle(c, L, x + 1.0, y) - cxy) < 1e-8);
    CHECK(std::abs(cocycle(c, L, x, y + L.tau()) - cxy) < 1e-8);
    cplx lhs = cocycle_combine(c, cxy, cocycle(c, L, x + y, u));
    cplx rhs = cocycle_combine(c, cocycle(c, L, y, u), cocycle(c, L, x, y + u));
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
  // the cocycle is not a coboundary of zeta itself
  CocycleCase add{CocycleKind::Additive, 0.0};
  CHECK(std::abs(cocycle(add, L, x, y)) > 1e-3);
}

TEST_CASE("numeric extension classes") {
  CHECK(std::abs(extension_class_numeric({CocycleKind::Additive, 0.0}, {1.0}) - pi) < 1e-8);
  CHECK(std::abs(extension_class_numeric({CocycleKind::Additive, 0.0}, {2.0}) - pi / 2) < 1e-8);
  CHECK(std::abs(extension_class_numeric({CocycleKind::Additive, 0.0}, {0.5}) - 2 * pi) < 1e-8);
  CHECK(extension_class_numeric({CocycleKind::Multiplicative, 0.3}, {1.0}) == cplx(0.3));
  CHECK(extension_class_numeric({CocycleKind::Twisted, 0.3}, {1.0}) == cplx(0.0, 0.3));
}

TEST_CASE("identity suite and errors") {
  for (double a : {1.0, 1.5, 2.0, 0.5}) {
    IdentityReport r = identity_suite({a}, 0.3);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass(), c.name << " " << c.defect);
  }
  RectLattice L{1.0};
  CHECK_THROWS_AS(wp(L, cplx(1.0, 1.0)), Error);
  try {
    zeta(L, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleAt);
  }
  CHECK(std::abs(sigma(L, 0.0)) < 1e-15);
  CHECK_THROWS_AS(wp({-1.0}, z0), Error);
  TruncationParams bad;
  bad.series_terms = 3;
  CHECK_THROWS_AS(wp(L, z0, bad), Error);
}
