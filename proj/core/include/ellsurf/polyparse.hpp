#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ellsurf/poly.hpp"
#include "ellsurf/ratfn.hpp"

namespace ellsurf {

enum class TokenKind { Integer, SlashRational, Variable, Operator, LParen, RParen };

struct ExprToken {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // byte offset into the input
};

/// Throws ParseError for characters outside the alphabet and for a '/' that
/// does not sit between two integers (outside parse_ratfn).
std::vector<ExprToken> tokenize(std::string_view text);

/// Grammar:
///   expr     := ['-'] term (('+' | '-') term)*     (leading '-' only at the
///   term     := factor ('*' factor)*                 head of an expression)
///   factor   := base ('^' integer)?
///   base     := rational | variable | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// No implicit multiplication. Throws ParseError with the offending position.
Poly parse_poly(std::string_view text, const std::string& var = "t");

/// A polynomial, or "(num)/(den)" as produced by render_ratfn.
RatFn parse_ratfn(std::string_view text, const std::string& var = "t");

/// Descending degree, e.g. "t^3 - 1/2", "-3/5*t^4 + t", "0".
std::string render_poly(const Poly& p);
/// render_poly for polynomials, otherwise "(num)/(den)".
std::string render_ratfn(const RatFn& r);

/// Largest exponent accepted by the parser.
inline constexpr long kMaxExponent = 4096;

}  // namespace ellsurf
