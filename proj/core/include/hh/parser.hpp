#pragma once

#include <string>

#include "hh/expr.hpp"
#include "hh/symbol.hpp"

namespace hh {

// Plain-text expression grammar: `+ - * / ^`, integer and p/q rational
// literals, parenthesized subexpressions. Symbols follow the fixed naming
// scheme (q1.., p1.., Jp, Jm, J3, Ap, Am, M, delta, Omega, alpha, beta,
// lambda, nu, c, a1.., g1.., b1..); unknown identifiers are interned into
// the table with a kind inferred from the name.
//
// Division requires a single-monomial divisor. Exponents are integers or
// parenthesized rationals: q2^(-2/3).
Expr parse_expr(const std::string& text, SymbolTable& table);

// Deterministic printer; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);
std::string print_monomial(const Monomial& m);

} // namespace hh
