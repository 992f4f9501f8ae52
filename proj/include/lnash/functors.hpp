#pragma once

#include "lnash/structures.hpp"

namespace lnash {

Fpl mpl_to_fpl(const Mpl& m, const SearchParams& p = {});
Mpl fpl_to_mpl(const Fpl& f, const SearchParams& p = {});
Fprs fpl_to_fprs(const Fpl& f, const SearchParams& p = {});

}  // namespace lnash
