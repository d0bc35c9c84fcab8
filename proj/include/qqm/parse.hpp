// Hand-written recursive-descent parser for the series input grammar:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := rational | var ['^' exponent]
//   var    := 'X' (alias for t1, n = 1 only) | 't' digits
//
// Rationals are p or p/q; exponents are integers, or dyadic fractions
// p/2^k in char-2 mode.  Errors carry line/column positions.

#pragma once

#include <string>

#include "qqm/series.hpp"

namespace qqm {

Series parse_series(const std::string& text, std::size_t n, bool char2 = false);

// Render a series back to the input grammar (lex-ascending term order).
std::string format_series(const Series& s);

}  // namespace qqm
