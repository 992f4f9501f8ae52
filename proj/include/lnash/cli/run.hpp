#pragma once

#include "lnash/cli/document.hpp"
#include "lnash/weierstrass.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lnash::cli {

enum Exit { Ok = 0, CheckFailed = 1, BadInput = 2 };

struct Options {
  SearchParams search;
  weierstrass::TruncationParams trunc;
};

// conversions between the object kinds; fprs and triple go through the integral model
ObjectValue convert(const ObjectValue& v, const std::string& to, const SearchParams& p = {});

int validate(const Document& doc, const Options& o, std::ostream& out);
int classify(const Document& doc, const Options& o, std::ostream& out);
int convert(const Document& doc, const std::string& to, const Options& o, std::ostream& out);
int check_morphisms(const Document& doc, const Options& o, std::ostream& out);
int wp_check(double a, weierstrass::cplx xi, const Options& o, std::ostream& out);

// argv-style entry point; args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnash::cli
