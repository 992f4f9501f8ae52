#pragma once

#include <complex>
#include <string>
#include <vector>

namespace lnash::weierstrass {

using cplx = std::complex<double>;

// Z + a i Z
struct RectLattice {
  double a = 1.0;
  cplx tau() const { return {0.0, a}; }
};

struct TruncationParams {
  int lattice_shells = 2000;
  int series_terms = 24;
  double target_tol = 1e-9;
  double pole_eps = 1e-12;
};

enum class Fn { Wp, WpPrime, Zeta, Sigma };
enum class CocycleKind { Additive, Multiplicative, Twisted };

struct CocycleCase {
  CocycleKind kind = CocycleKind::Additive;
  cplx xi = 0.0;  // the twisted case shifts by xi * i
};

struct QuasiPeriods {
  cplx eta1;    // eta(1)
  cplx eta_ai;  // eta(a i)
};

cplx eval(Fn fn, const RectLattice& L, cplx z, const TruncationParams& p = {});
inline cplx wp(const RectLattice& L, cplx z, const TruncationParams& p = {}) { return eval(Fn::Wp, L, z, p); }
inline cplx wp_prime(const RectLattice& L, cplx z, const TruncationParams& p = {}) { return eval(Fn::WpPrime, L, z, p); }
inline cplx zeta(const RectLattice& L, cplx z, const TruncationParams& p = {}) { return eval(Fn::Zeta, L, z, p); }
inline cplx sigma(const RectLattice& L, cplx z, const TruncationParams& p = {}) { return eval(Fn::Sigma, L, z, p); }

QuasiPeriods quasi_periods(const RectLattice& L, const TruncationParams& p = {});
double legendre_defect(const RectLattice& L, const TruncationParams& p = {});
// (-1)^(m+n+mn) exp((m eta1 + n eta2)(z + (m + n a i)/2))
cplx sigma_shift_factor(const RectLattice& L, int m, int n, cplx z, const TruncationParams& p = {});
cplx sigma_tilde(const RectLattice& L, cplx xi, cplx z, const TruncationParams& p = {});
cplx cocycle(const CocycleCase& c, const RectLattice& L, cplx x, cplx y, const TruncationParams& p = {});
// the group law on H: + for the additive case, * otherwise
cplx cocycle_combine(const CocycleCase& c, cplx u, cplx v);
cplx extension_class_numeric(const CocycleCase& c, const RectLattice& L, const TruncationParams& p = {});

struct Invariants {
  cplx g2, g3;
};
Invariants invariants(const RectLattice& L, const TruncationParams& p = {});

// truncated lattice sums over max(|m|,|n|) <= shells
cplx wp_lattice_sum(const RectLattice& L, cplx z, int shells);
cplx zeta_lattice_sum(const RectLattice& L, cplx z, int shells);

struct IdentityCheck {
  std::string name;
  double defect;
  double tol;
  bool pass() const { return defect < tol; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

IdentityReport identity_suite(const RectLattice& L, cplx xi, const TruncationParams& p = {});

}  // namespace lnash::weierstrass
