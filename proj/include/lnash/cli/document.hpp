#pragma once

#include "lnash/structures.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lnash::cli {

using ObjectValue = std::variant<Fprs, Fpl, Mpl, TripleD>;

struct Object {
  std::string name;
  ObjectValue value;
  int line = 0;
};

struct MorphismDecl {
  std::string name;
  std::string src;
  std::string dst;
  KMatrix matrix;
  int line = 0;
};

struct Document {
  FieldPtr field;  // never null after parse
  std::vector<Object> objects;
  std::vector<MorphismDecl> morphisms;

  const Object* find(const std::string& name) const;
};

std::string kind_name(const ObjectValue& v);

Document parse(std::string_view text);
std::string emit(const Document& doc);
// echelon filtrations, canonical Q-basis of lambda_r, HNF of gamma;
// FPL and MPL lattice bases keep their order
Document normalize(const Document& doc);

// t denotes the field generator; null field allows rational expressions only
KScalar parse_scalar(std::string_view text, const FieldPtr& field);
CKScalar parse_complex(std::string_view text, const FieldPtr& field);
std::string format_scalar(const KScalar& x);
std::string format_scalar(const CKScalar& x);

}  // namespace lnash::cli
