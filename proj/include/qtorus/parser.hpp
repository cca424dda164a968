#pragma once

#include <string>

#include "qtorus/algebra.hpp"
#include "qtorus/fock.hpp"

namespace qtorus {

/// Expression grammar shared by module vectors and algebra words:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := NUMBER | ('q'|'mu'|'b') power? | '(' expr ')'
///           | 'x' '[' int ',' int ']' power?
///           | ('E11'|'E12'|'E21'|'E22') '(' int ',' int ')' power?
///           | ('D1'|'D2') power?
///   power  := '^' nonzero-int
///
/// Parenthesized subexpressions and '/' divisors must be scalar-valued.
/// Symbols evaluate against the environment. Negative powers are accepted
/// on x[...] (checked against the space later) and on E21 (the localized
/// inverse); a zero exponent is a syntax error.
///
/// Throws ParseError with 1-based line/column on malformed input.
MVector parse_vector(const std::string& text, const ParamEnv& env);
AlgElement parse_word(const std::string& text, const ParamEnv& env);
Scalar parse_scalar(const std::string& text, const ParamEnv& env);

}  // namespace qtorus
