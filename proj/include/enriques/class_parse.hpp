#pragma once

#include "enriques/lattice.hpp"
#include "enriques/limit_surface.hpp"

#include <string>

namespace enriques {

// Accepts either a bracketed coordinate list "[2,1,0,0,0,0,0,0,0,0]" or a
// symbolic combination of basis classes "2*E1+E2", "2*E9+2*E10+2*E910".
// Symbols: E1..E7, E9, E10, E910 (E9_10 also accepted). Throws
// ParseClassError on malformed input.
NumClass parse_num_class(const std::string& text);

// "c0,f"
RClass parse_r_class(const std::string& text);

// "v0,v1,...,v9" raw coordinates in the (l, e1..e9) basis
PClass parse_p_class(const std::string& text);

std::string format_num_class(const NumClass& v);

} // namespace enriques
