#include "hh/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hh {

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    // plain integer or n/d handled by gmp directly
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        try {
            Rational r(s);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal '" + text + "'");
        }
    }

    // decimal / scientific: sign? digits ('.' digits)? ([eE] sign? digits)?
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits.push_back(s[i++]);
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i++]);
            ++frac_digits;
            any = true;
        }
    }
    long expo = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) throw ParseError("bad exponent in '" + text + "'");
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
        if (ed.empty()) throw ParseError("bad exponent in '" + text + "'");
        expo = std::strtol(ed.c_str(), nullptr, 10);
        if (eneg) expo = -expo;
    }
    if (!any || i != s.size()) throw ParseError("bad numeric literal '" + text + "'");
    if (digits.empty()) digits = "0";

    mpz_class num(digits);
    mpz_class den(1);
    long net = expo - frac_digits;
    mpz_class ten(10);
    if (net >= 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(net));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-net));
    }
    Rational r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

long to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("rational " + rat_str(r) + " is not an integer");
    if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range: " + rat_str(r));
    return r.get_num().get_si();
}

Rational rat_pow(const Rational& r, long n) {
    if (n == 0) return Rational(1);
    if (r == 0) {
        if (n < 0) throw DivisionByZero("0 raised to negative power");
        return Rational(0);
    }
    Rational base = r;
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational out(num, den);
    out.canonicalize();
    if (invert) out = 1 / out;
    return out;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

} // namespace hh
