#pragma once

#include <string>
#include <string_view>

#include "jacklaurent/ratkp.hpp"

namespace jl {

// Canonical strings: terms in descending graded lex order (p0 > k); the
// leading coefficient is printed explicitly unless it is 1; later terms are
// joined with " + " / " - " and omit unit magnitudes. A nontrivial denominator
// prints as "(num)/(den)".
std::string to_string(const UniPoly& p, const char* var = "k");
std::string to_string(const PolyKP& p);
std::string to_string(const RatK& f);
std::string to_string(const RatKP& f);

/// Parse the grammar: integers, `k`, `p0`, + - * / ^, parentheses.
/// Throws ParseError with position on bad syntax, Error on division by zero.
RatKP parse_ratkp(std::string_view s);

}  // namespace jl
