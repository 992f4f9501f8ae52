#pragma once

#include "lnash/criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lnash {

struct MorphismCheck {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

struct TripleMorphism {
  KMatrix phi;
  TripleD src;
  TripleD dst;
};

MorphismCheck check_morphism(const KMatrix& phi, const TripleD& src, const TripleD& dst);
// g after f
TripleMorphism compose(const TripleMorphism& f, const TripleMorphism& g);

enum class Case1D { Additive, Multiplicative, Twisted, Elliptic };

struct CaseLabel1D {
  Case1D tag = Case1D::Elliptic;
  std::optional<KScalar> gamma_class;  // none for Gamma = 0
};

enum class Case2D { SplitSum, BlockPlusElliptic, AbelianSurface, NonsplitExtension };
enum class ExtensionType { Additive, Multiplicative, Twisted };

struct ExtensionClass {
  bool unique = false;  // additive subtype
  QVector coords;       // otherwise: normalized irrational parts of the Im-pairings
  bool operator==(const ExtensionClass& o) const {
    return unique == o.unique && coords.size() == o.coords.size() && coords == o.coords;
  }
};

struct CaseLabel2D {
  Case2D tag = Case2D::SplitSum;
  std::optional<ExtensionType> subtype;
  std::optional<ExtensionClass> param;
};

CaseLabel1D classify_1d(const TripleD& t, const SearchParams& p = {});
CaseLabel2D classify_2d(const TripleD& t, const SearchParams& p = {});
ExtensionClass extension_class_2d(const TripleD& t, const SearchParams& p = {});

std::string to_string(Case1D c);
std::string to_string(Case2D c);
std::string to_string(ExtensionType c);
std::string to_string(const ExtensionClass& e);

}  // namespace lnash
