#include "hh/expr.hpp"

#include <algorithm>
#include <cmath>

namespace hh {

Rational Monomial::degree() const {
    Rational d(0);
    for (const auto& [_, e] : factors) d += e;
    return d;
}

Rational Monomial::exponent_of(Symbol s) const {
    for (const auto& [sym, e] : factors)
        if (sym == s) return e;
    return Rational(0);
}

namespace {

// exponent maps compared symbol-by-symbol in symbol order
int cmp_factors(const std::vector<std::pair<Symbol, Rational>>& a,
                const std::vector<std::pair<Symbol, Rational>>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            // a has a factor on an earlier symbol; exponent vs implicit 0
            return a[i].second > 0 ? 1 : -1;
        } else {
            return b[j].second > 0 ? -1 : 1;
        }
    }
    while (i < a.size()) return a[i].second > 0 ? 1 : -1;
    while (j < b.size()) return b[j].second > 0 ? -1 : 1;
    return 0;
}

// graded lexicographic, descending in the term list
bool term_before(const Monomial& x, const Monomial& y) {
    Rational dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx > dy;
    return cmp_factors(x.factors, y.factors) > 0;
}

void sort_factors(Monomial& m) {
    std::sort(m.factors.begin(), m.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates, drop zero exponents
    std::vector<std::pair<Symbol, Rational>> out;
    out.reserve(m.factors.size());
    for (auto& f : m.factors) {
        if (!out.empty() && out.back().first == f.first)
            out.back().second += f.second;
        else
            out.push_back(std::move(f));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& f) { return f.second == 0; }),
              out.end());
    m.factors = std::move(out);
}

} // namespace

Expr normalized(std::vector<Monomial>&& raw) {
    for (auto& m : raw) sort_factors(m);
    std::sort(raw.begin(), raw.end(), term_before);
    Expr out;
    auto& terms = out.terms_;
    for (auto& m : raw) {
        if (m.coeff == 0) continue;
        if (!terms.empty() && cmp_factors(terms.back().factors, m.factors) == 0) {
            terms.back().coeff += m.coeff;
            if (terms.back().coeff == 0) terms.pop_back();
        } else {
            terms.push_back(std::move(m));
        }
    }
    return out;
}

Expr Expr::constant(const Rational& c) {
    Expr e;
    if (c != 0) e.terms_.push_back(Monomial{c, {}});
    return e;
}

Expr Expr::symbol(Symbol s) {
    Expr e;
    e.terms_.push_back(Monomial{Rational(1), {{s, Rational(1)}}});
    return e;
}

Expr Expr::monomial(const Rational& c, std::vector<std::pair<Symbol, Rational>> factors) {
    std::vector<Monomial> raw;
    raw.push_back(Monomial{c, std::move(factors)});
    return normalized(std::move(raw));
}

Expr Expr::from_terms(std::vector<Monomial> terms) { return normalized(std::move(terms)); }

bool Expr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].factors.empty());
}

Rational Expr::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("expression is not constant");
    return terms_[0].coeff;
}

std::set<Symbol> Expr::symbols() const {
    std::set<Symbol> out;
    for (const auto& m : terms_)
        for (const auto& [s, _] : m.factors) out.insert(s);
    return out;
}

bool Expr::depends_on(Symbol s) const {
    for (const auto& m : terms_)
        for (const auto& [sym, _] : m.factors)
            if (sym == s) return true;
    return false;
}

Rational Expr::degree_in(const std::set<Symbol>& syms) const {
    Rational best(0);
    for (const auto& m : terms_) {
        Rational d(0);
        for (const auto& [s, e] : m.factors)
            if (syms.count(s)) d += e;
        if (d > best) best = d;
    }
    return best;
}

Expr add(const Expr& a, const Expr& b) {
    std::vector<Monomial> raw;
    raw.reserve(a.terms().size() + b.terms().size());
    raw.insert(raw.end(), a.terms().begin(), a.terms().end());
    raw.insert(raw.end(), b.terms().begin(), b.terms().end());
    return normalized(std::move(raw));
}

Expr neg(const Expr& a) { return scale(a, Rational(-1)); }

Expr sub(const Expr& a, const Expr& b) { return add(a, neg(b)); }

Expr scale(const Expr& a, const Rational& r) {
    if (r == 0) return Expr::zero();
    std::vector<Monomial> raw = a.terms();
    for (auto& m : raw) m.coeff *= r;
    return normalized(std::move(raw));
}

Expr mul(const Expr& a, const Expr& b) {
    std::vector<Monomial> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            Monomial m;
            m.coeff = x.coeff * y.coeff;
            m.factors.reserve(x.factors.size() + y.factors.size());
            m.factors.insert(m.factors.end(), x.factors.begin(), x.factors.end());
            m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
            raw.push_back(std::move(m));
        }
    }
    return normalized(std::move(raw));
}

Expr monomial_pow(const Expr& a, const Rational& e) {
    if (e == 0) return Expr::constant(Rational(1));
    if (a.is_zero()) {
        if (e < 0) throw DivisionByZero("negative power of zero expression");
        return Expr::zero();
    }
    if (!a.is_monomial())
        throw NegativePowerOfSum("monomial_pow requires a single-term base");
    const Monomial& m = a.terms()[0];
    Monomial out;
    if (is_integer(e)) {
        out.coeff = rat_pow(m.coeff, to_long(e));
    } else if (m.coeff == 1) {
        out.coeff = Rational(1);
    } else if (m.coeff == -1) {
        throw DomainError("fractional power of a negative coefficient");
    } else {
        throw DomainError("fractional power of a monomial with coefficient " +
                          rat_str(m.coeff));
    }
    out.factors = m.factors;
    for (auto& [_, ex] : out.factors) ex *= e;
    std::vector<Monomial> raw{std::move(out)};
    return normalized(std::move(raw));
}

Expr pow(const Expr& a, long n) {
    if (n == 0) return Expr::constant(Rational(1));
    if (n < 0) {
        if (!a.is_monomial())
            throw NegativePowerOfSum("negative power of a sum (" +
                                     std::to_string(a.terms().size()) + " terms)");
        return monomial_pow(a, Rational(n));
    }
    // binary exponentiation
    Expr base = a;
    Expr acc = Expr::constant(Rational(1));
    long k = n;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

bool is_zero(const Expr& a) { return a.is_zero(); }

bool equal(const Expr& a, const Expr& b) { return sub(a, b).is_zero(); }

Expr reduce_aux(const Expr& a, const SideRelation& rel) {
    if (!a.depends_on(rel.inv)) return a;
    // collect strata by power of the auxiliary symbol
    std::map<long, std::vector<Monomial>> strata;
    long maxk = 0;
    for (const auto& m : a.terms()) {
        Rational e = m.exponent_of(rel.inv);
        if (!is_integer(e) || e < 0)
            throw DomainError("auxiliary inverse symbol with non-positive-integer power");
        long k = to_long(e);
        maxk = std::max(maxk, k);
        Monomial stripped = m;
        stripped.factors.erase(
            std::remove_if(stripped.factors.begin(), stripped.factors.end(),
                           [&](const auto& f) { return f.first == rel.inv; }),
            stripped.factors.end());
        strata[k].push_back(std::move(stripped));
    }
    Expr out = Expr::zero();
    for (auto& [k, terms] : strata) {
        Expr part = normalized(std::move(terms));
        out = add(out, mul(part, pow(rel.denom, maxk - k)));
    }
    return out;
}

bool is_zero_mod(const Expr& a, const std::optional<SideRelation>& rel) {
    if (!rel) return a.is_zero();
    return reduce_aux(a, *rel).is_zero();
}

bool equal_mod(const Expr& a, const Expr& b, const std::optional<SideRelation>& rel) {
    return is_zero_mod(sub(a, b), rel);
}

Expr diff(const Expr& a, Symbol s, const SideRelation* rel) {
    std::vector<Monomial> raw;
    Expr chain; // d(inv)/ds, built lazily
    bool chain_ready = false;
    for (const auto& m : a.terms()) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const auto& [sym, e] = m.factors[i];
            if (sym == s) {
                Monomial d = m;
                d.coeff *= e;
                d.factors[i].second -= 1;
                raw.push_back(std::move(d));
            } else if (rel && sym == rel->inv) {
                if (!chain_ready) {
                    // d(inv)/ds = -inv^2 * d(denom)/ds
                    chain = scale(mul(Expr::monomial(Rational(1), {{rel->inv, Rational(2)}}),
                                      diff(rel->denom, s)),
                                  Rational(-1));
                    chain_ready = true;
                }
                if (chain.is_zero()) continue;
                Monomial d = m;
                d.coeff *= e;
                d.factors[i].second -= 1;
                Expr piece = mul(normalized({std::move(d)}), chain);
                for (const auto& t : piece.terms()) raw.push_back(t);
            }
        }
    }
    return normalized(std::move(raw));
}

Expr substitute(const Expr& a, const std::map<Symbol, Expr>& map, const SubstOptions& opts) {
    std::vector<Monomial> out_terms;
    for (const auto& m : a.terms()) {
        Expr acc = Expr::constant(m.coeff);
        Monomial passthrough{Rational(1), {}};
        for (const auto& [sym, e] : m.factors) {
            auto it = map.find(sym);
            if (it == map.end()) {
                passthrough.factors.push_back({sym, e});
                continue;
            }
            const Expr& image = it->second;
            if (is_integer(e) && e > 0) {
                acc = mul(acc, pow(image, to_long(e)));
            } else if (image.is_monomial()) {
                acc = mul(acc, monomial_pow(image, e));
            } else if (is_integer(e) && e < 0) {
                auto inv = opts.formal_inverse.find(sym);
                if (inv == opts.formal_inverse.end())
                    throw NonMonomialNegativePower(
                        "negative power of '" + sym.name() +
                        "' maps to a multi-term expression and no formal inverse was requested");
                acc = mul(acc, Expr::monomial(Rational(1), {{inv->second, -e}}));
            } else if (image.is_zero()) {
                throw DivisionByZero("negative/fractional power of zero image for '" +
                                     sym.name() + "'");
            } else {
                throw NonMonomialNegativePower("fractional power of '" + sym.name() +
                                               "' maps to a multi-term expression");
            }
        }
        acc = mul(acc, normalized({std::move(passthrough)}));
        for (const auto& t : acc.terms()) out_terms.push_back(t);
    }
    return normalized(std::move(out_terms));
}

double eval(const Monomial& m, const Point& point) {
    double v = to_double(m.coeff);
    for (const auto& [s, e] : m.factors) {
        auto it = point.find(s);
        if (it == point.end())
            throw DomainError("unbound symbol '" + s.name() + "' in eval");
        double base = it->second;
        if (is_integer(e)) {
            long k = to_long(e);
            if (base == 0.0 && k < 0)
                throw DivisionByZero("negative power of zero at symbol '" + s.name() + "'");
            v *= std::pow(base, static_cast<double>(k));
        } else {
            if (base <= 0.0)
                throw DomainError("fractional power of non-positive base at '" + s.name() +
                                  "'");
            v *= std::pow(base, to_double(e));
        }
    }
    return v;
}

double eval(const Expr& a, const Point& point) {
    double sum = 0.0;
    for (const auto& m : a.terms()) sum += eval(m, point);
    return sum;
}

} // namespace hh
