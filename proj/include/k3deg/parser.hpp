#pragma once

#include <string_view>

#include "k3deg/family.hpp"

namespace k3deg {

// Family file:
//   # comment
//   let g4(u) = 3*(u^4 + 2*u)
//   g8  = g4(s/t) * g4(1/(t*s)) * s^4
//   g12 = ...
// Statements end at a newline or ';'. Expressions use rationals, s, t,
// earlier macros, + - * / and ^ with an integer exponent; the bare variable
// t also takes a rational exponent t^(p/q).
// Errors: E_PARSE (with line/column), E_NOT_POLY, E_DEGREE.
FamilyPair parse_family(std::string_view text);

}  // namespace k3deg
