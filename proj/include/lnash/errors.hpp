#pragma once

#include <stdexcept>
#include <string>

namespace lnash {

enum class Errc {
  MixedFields,
  DimensionMismatch,
  InvalidInput,
  SyntaxError,
  UnknownReference,
  PoleAt,
  WrongDimension,
  NotAnExtension,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::PoleAt: return "PoleAt";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NotAnExtension: return "NotAnExtension";
  }
  return "Error";
}

}  // namespace lnash
