#include "hh/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace hh {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= src.size()) throw ParseError("unexpected end of expression");
        return src[pos++];
    }
    void expect(char c) {
        char g = get();
        if (g != c)
            throw ParseError(std::string("expected '") + c + "' but found '" + g + "'");
    }
    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            out.push_back(src[pos++]);
        }
        return out;
    }
    std::string digits() {
        skip_ws();
        std::string out;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            out.push_back(src[pos++]);
        return out;
    }
};

// kind inference from the naming scheme
std::pair<SymbolKind, int> classify(const std::string& name) {
    auto tail_index = [&](std::size_t prefix) -> int {
        if (name.size() <= prefix) return -1;
        for (std::size_t i = prefix; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        return std::atoi(name.c_str() + prefix);
    };
    if (name[0] == 'q') {
        int idx = tail_index(1);
        if (idx >= 1) return {SymbolKind::position, idx};
    }
    if (name[0] == 'p') {
        int idx = tail_index(1);
        if (idx >= 1) return {SymbolKind::momentum, idx};
    }
    if (name == "Jp" || name == "Jm" || name == "J3" || name == "Ap" || name == "Am" ||
        name == "M")
        return {SymbolKind::generator, -1};
    if (name[0] == 'a' || name[0] == 'g' || name[0] == 'b' || name[0] == 'x') {
        int idx = tail_index(1);
        if (idx >= 0) return {SymbolKind::parameter, idx};
    }
    return {SymbolKind::parameter, -1};
}

struct Parser {
    Lexer lex;
    SymbolTable& table;

    Expr parse_sum() {
        Expr acc = parse_product();
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '+') {
                lex.get();
                acc = add(acc, parse_product());
            } else if (c == '-') {
                lex.get();
                acc = sub(acc, parse_product());
            } else {
                break;
            }
        }
        return acc;
    }

    Expr parse_product() {
        Expr acc = parse_factor();
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                acc = mul(acc, parse_factor());
            } else if (c == '/') {
                lex.get();
                Expr d = parse_factor();
                if (d.is_zero()) throw DivisionByZero("division by zero expression");
                if (!d.is_monomial())
                    throw NonMonomialNegativePower("division by a multi-term expression");
                acc = mul(acc, monomial_pow(d, Rational(-1)));
            } else {
                break;
            }
        }
        return acc;
    }

    Expr parse_factor() {
        char c = lex.peek();
        if (c == '-') {
            lex.get();
            return neg(parse_factor());
        }
        if (c == '+') {
            lex.get();
            return parse_factor();
        }
        Expr base = parse_atom();
        if (!lex.eof() && lex.peek() == '^') {
            lex.get();
            Rational e = parse_exponent();
            if (is_integer(e)) {
                long n = to_long(e);
                if (n >= 0 || base.is_monomial()) return pow(base, n);
                throw NegativePowerOfSum("negative power of a sum");
            }
            return monomial_pow(base, e);
        }
        return base;
    }

    Rational parse_exponent() {
        char c = lex.peek();
        bool paren = false;
        if (c == '(') {
            lex.get();
            paren = true;
        }
        bool negv = false;
        c = lex.peek();
        if (c == '-') {
            lex.get();
            negv = true;
        }
        std::string num = lex.digits();
        if (num.empty()) throw ParseError("expected exponent");
        std::string text = num;
        if (!lex.eof() && lex.peek() == '/') {
            lex.get();
            std::string den = lex.digits();
            if (den.empty()) throw ParseError("expected exponent denominator");
            text += "/" + den;
        }
        if (paren) lex.expect(')');
        Rational r = rat_parse(text);
        return negv ? Rational(-r) : r;
    }

    Expr parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            Expr e = parse_sum();
            lex.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string d = lex.digits();
            return Expr::constant(rat_parse(d));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex.ident();
            if (name.empty()) throw ParseError("expected identifier");
            Symbol s;
            if (table.has(name)) {
                s = table.find(name);
            } else {
                auto [kind, idx] = classify(name);
                s = table.declare(name, kind, idx);
            }
            return Expr::symbol(s);
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Expr parse_expr(const std::string& text, SymbolTable& table) {
    Parser p{Lexer{text}, table};
    Expr e = p.parse_sum();
    if (!p.lex.eof())
        throw ParseError("trailing input at position " + std::to_string(p.lex.pos));
    return e;
}

std::string print_monomial(const Monomial& m) {
    std::string out;
    bool lead = true;
    if (m.factors.empty()) return rat_str(m.coeff);
    if (m.coeff == -1) {
        out = "-";
    } else if (m.coeff != 1) {
        out = rat_str(m.coeff) + "*";
    }
    for (const auto& [s, e] : m.factors) {
        if (!lead || (m.coeff != 1 && m.coeff != -1)) {
            if (!lead) out += "*";
        }
        lead = false;
        out += s.name();
        if (e != 1) {
            if (is_integer(e) && e > 0)
                out += "^" + rat_str(e);
            else
                out += "^(" + rat_str(e) + ")";
        }
    }
    return out;
}

std::string print_expr(const Expr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : e.terms()) {
        std::string piece = print_monomial(m);
        if (first) {
            out = piece;
            first = false;
            continue;
        }
        if (!piece.empty() && piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

} // namespace hh
