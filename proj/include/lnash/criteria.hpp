#pragma once

#include "lnash/functors.hpp"

#include <string>

namespace lnash {

struct SplitDimensions {
  Index d_v = 0;
  Index d_t_plus = 0;
  Index d_t_minus = 0;
  Index total() const { return d_v + d_t_plus + d_t_minus; }
  bool operator==(const SplitDimensions&) const = default;
};

struct UInvariants {
  Index u_v = 0;
  Index u_t_plus = 0;
  Index u_t_minus = 0;
  bool trivial() const { return u_v == 0 && u_t_plus == 0 && u_t_minus == 0; }
  bool operator==(const UInvariants&) const = default;
};

// U_t is measured modulo the rational span of the dual lattice
inline constexpr const char* kUtConvention = "U_t measured modulo the Q-span of the dual lattice of Lambda_a";

struct ClassReport {
  bool is_nash = false;
  bool is_affine = false;
  bool is_toroidal_affine = false;
  SplitDimensions split;
  UInvariants u;
  KMatrix enca_basis;
  std::string u_t_convention = kUtConvention;
};

KMatrix enca(const Fprs& x, const SearchParams& p = {});
bool is_nash(const TripleD& t, const SearchParams& p = {});
bool is_affine(const TripleD& t, const SearchParams& p = {});
bool is_toroidal_affine(const TripleD& t, const SearchParams& p = {});

// Z-basis of {lambda in Lambda_t : phi_t(lambda) in the dual lattice}
ZMatrix phi_t_kernel(const Mpl& m);
SplitDimensions split_dimensions(const Mpl& m, const SearchParams& p = {});
UInvariants u_invariants(const Mpl& m, const SearchParams& p = {});
Mpl ant_quotient(const Mpl& m, const SearchParams& p = {});

// sigma-stable Z-lattice spanned by Lambda_r's basis and its conjugates
Fpl integral_model(const Fprs& x, const SearchParams& p = {});
ClassReport classify(const TripleD& t, const SearchParams& p = {});

}  // namespace lnash
