#pragma once

#include "lcalg/poly.hpp"

#include <map>
#include <string>
#include <string_view>

namespace lcalg {

/// Named polynomial constants, referenced in expressions as `$name`.
using ConstantTable = std::map<std::string, MultiPoly, std::less<>>;

/// Recursive-descent parser for the polynomial input language:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 'd' | 'l' | 'm' | rational | 'i' | '$' name | '(' expr ')'
///
/// `d`, `l`, `m` are ∂, λ, μ; rationals are `p` or `p/q`; juxtaposition is
/// rejected. Errors are ParseError with a 1-based column (and the supplied
/// line/column offset, for text embedded in a larger file).
MultiPoly parse_poly(std::string_view text, const ConstantTable* constants = nullptr, int line = 0,
                     int column_offset = 0);

/// Parses an expression that must be constant, e.g. `-1/2+3*i`.
Scalar parse_scalar(std::string_view text);

}  // namespace lcalg
