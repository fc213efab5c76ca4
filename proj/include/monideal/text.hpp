#pragma once

#include <string>
#include <string_view>

#include "monideal/ideal.hpp"

namespace monideal {

// Text forms.  Parsing accepts exactly the grammars below and reports
// failures as ParseError with a 1-based line/column.  Formatting always
// emits the canonical form, so format(parse(s)) is a fixed point.
//
//   ring     := ("ring")? ( names | range )
//   names    := var (',' var)*
//   range    := var ".." var          e.g. "x1..x6" (shared prefix, numbers)
//   monomial := "1" | factor ('*' factor)*
//   factor   := var ('^' uint)?
//   ideal    := '(' "0" ')' | '(' monomial (',' monomial)* ')'
//
// Whitespace is free between tokens.  Variables must belong to the ring.

RingContext parse_ring(std::string_view src);
Monomial parse_monomial(std::string_view src, const RingContext& ctx);
MonomialIdeal parse_ideal(std::string_view src, const RingContext& ctx);

/// Parses an ideal and requires it to be generated by distinct plain
/// variables, e.g. "(x, z)".
MonomialPrime parse_prime(std::string_view src, const RingContext& ctx);

std::string format(const Monomial& m);
std::string format(const MonomialIdeal& a);
std::string format(const MonomialPrime& p);

}  // namespace monideal
