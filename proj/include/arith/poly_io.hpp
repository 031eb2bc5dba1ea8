#pragma once

#include "arith/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arith {

/// x1, x2, ..., xn
std::vector<std::string> default_var_names(std::size_t n);

/// Parses an integer polynomial such as "2*x1*x2 - 7*x1 - 10*x2 + 16".
///
/// Grammar (whitespace insignificant):
///   expr   ::= term (('+' | '-') term)*      a leading sign is allowed
///   term   ::= factor ('*' factor)*
///   factor ::= integer | var ('^' digits)?
/// `var_names` fixes the variable order and arity. Throws ParseError on
/// malformed text or an undeclared name.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names);

/// Same, with variables x1..xN where N is the largest index that occurs.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text: graded-lex descending, constant last, " + " / " - "
/// between terms, unit coefficients omitted. The zero polynomial prints "0".
std::string to_string(const Polynomial& f, std::span<const std::string> var_names = {});

/// Text of a single monomial without coefficient ("x1*x3", "1" for constants).
std::string monomial_to_string(const Monomial& m, std::span<const std::string> var_names = {});

}  // namespace arith
