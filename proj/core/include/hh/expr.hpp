#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hh/rational.hpp"
#include "hh/symbol.hpp"

namespace hh {

// One term: coefficient times a product of symbol^exponent factors.
// Exponents are exact rationals (reduced by mpq); zero exponents are never
// stored and the factor list is kept sorted by symbol order.
struct Monomial {
    Rational coeff;
    std::vector<std::pair<Symbol, Rational>> factors;

    Rational degree() const;
    Rational exponent_of(Symbol s) const;
    bool is_constant() const { return factors.empty(); }
};

// Sparse multivariate expression in normal form: like terms merged, zero
// coefficients pruned, terms sorted descending by (total degree, exponents).
// Immutable by convention after construction; all operations return new
// values.
class Expr {
  public:
    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr constant(const Rational& c);
    static Expr symbol(Symbol s);
    static Expr monomial(const Rational& c, std::vector<std::pair<Symbol, Rational>> factors);
    // from an arbitrary term list (normalizes)
    static Expr from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // constant value; requires is_zero() or is_constant()
    Rational constant_value() const;

    std::set<Symbol> symbols() const;
    bool depends_on(Symbol s) const;
    // max (rational) total degree over the given symbol set, 0 for zero expr
    Rational degree_in(const std::set<Symbol>& syms) const;

  private:
    std::vector<Monomial> terms_;
    friend Expr normalized(std::vector<Monomial>&& raw);
};

// --- construction / arithmetic (exact, results in normal form) -------------

Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr neg(const Expr& a);
Expr mul(const Expr& a, const Expr& b);
Expr scale(const Expr& a, const Rational& r);
// pow with n < 0 requires a single-monomial base (NegativePowerOfSum otherwise)
Expr pow(const Expr& a, long n);
// single-monomial base raised to an exact rational exponent
Expr monomial_pow(const Expr& a, const Rational& e);

inline Expr operator+(const Expr& a, const Expr& b) { return add(a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return sub(a, b); }
inline Expr operator-(const Expr& a) { return neg(a); }
inline Expr operator*(const Expr& a, const Expr& b) { return mul(a, b); }

bool is_zero(const Expr& a);
bool equal(const Expr& a, const Expr& b);

// --- auxiliary inverse symbols ---------------------------------------------

// Side relation inv * denom == 1 introduced when a negative power of a
// multi-term expression is realized (e.g. 1/(q1^2+...+q_{N-1}^2)).
// `denom` must not itself contain `inv`.
struct SideRelation {
    Symbol inv;
    Expr denom;
};

// Eliminates `rel.inv` for zero-testing: with B = sum_k B_k inv^k and
// m = max k, returns sum_k B_k denom^(m-k). The result vanishes iff the
// value of B vanishes identically under inv = 1/denom.
Expr reduce_aux(const Expr& a, const SideRelation& rel);
bool is_zero_mod(const Expr& a, const std::optional<SideRelation>& rel);
bool equal_mod(const Expr& a, const Expr& b, const std::optional<SideRelation>& rel);

// --- calculus ----------------------------------------------------------------

// Exact partial derivative. If `rel` is given, the auxiliary symbol obeys
// d(inv)/ds = -inv^2 * d(denom)/ds.
Expr diff(const Expr& a, Symbol s, const SideRelation* rel = nullptr);

// --- substitution ------------------------------------------------------------

struct SubstOptions {
    // maps a symbol to the auxiliary inverse standing for 1/image when the
    // image of a negative power is a sum
    std::map<Symbol, Symbol> formal_inverse;
};

Expr substitute(const Expr& a, const std::map<Symbol, Expr>& map,
                const SubstOptions& opts = {});

// --- numeric evaluation --------------------------------------------------------

using Point = std::map<Symbol, double>;
double eval(const Expr& a, const Point& point);
double eval(const Monomial& m, const Point& point);

} // namespace hh
