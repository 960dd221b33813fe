#include "hh/catalog.hpp"

#include <sstream>

namespace hh {

std::string family_name(Family f) {
    switch (f) {
        case Family::sk: return "sk";
        case Family::kk: return "kk";
        case Family::kdv: return "kdv";
        case Family::kdv_mr: return "kdv-mr";
        case Family::holt: return "holt";
        case Family::generic_hh: return "generic";
    }
    return "?";
}

namespace {

Rational binom(long n, long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(out);
}

Rational pow2(long e) {
    mpz_class out;
    mpz_class two(2);
    mpz_pow_ui(out.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(out);
}

std::map<Symbol, Expr> resolve_bindings(SymbolTable& table, const ParamBindings& params) {
    std::map<Symbol, Expr> out;
    for (const auto& [name, text] : params) {
        Symbol s = table.has(name) ? table.find(name)
                                   : table.intern(name, SymbolKind::parameter);
        if (s.kind() != SymbolKind::parameter)
            throw ConfigError("cannot bind non-parameter symbol '" + name + "'");
        out[s] = parse_expr(text, table);
    }
    // values may reference other bound parameters; iterate to a fixed point
    for (int round = 0; round < 16; ++round) {
        bool changed = false;
        for (auto& [s, e] : out) {
            Expr next = substitute(e, out);
            if (next.depends_on(s))
                throw ConfigError("cyclic parameter binding through '" + s.name() + "'");
            if (!equal(next, e)) {
                e = next;
                changed = true;
            }
        }
        if (!changed) return out;
    }
    throw ConfigError("parameter bindings do not reach a fixed point");
}

void apply_bindings(ModelInstance& m) {
    if (m.bindings.empty()) return;
    m.abstract_h = substitute(m.abstract_h, m.bindings);
    m.realized2d_h = substitute(m.realized2d_h, m.bindings);
    if (m.abstract_i) m.abstract_i = substitute(*m.abstract_i, m.bindings);
    if (m.realized2d_i) m.realized2d_i = substitute(*m.realized2d_i, m.bindings);
}

Expr P(SymbolTable& t, const std::string& text) { return parse_expr(text, t); }

} // namespace

RamaniTable ramani(int i, SymbolTable& t) {
    if (i < 0) throw BadDegrees("ramani degree must be non-negative");
    RamaniTable out;
    out.degree = i;
    std::vector<Monomial> realized, abstr;
    for (long k = 0; 2 * k <= i; ++k) {
        Rational c = pow2(i - 2 * k) * binom(i - k, k);
        Monomial r{c, {}};
        Monomial a{c, {}};
        if (k) {
            r.factors.push_back({t.q(1), Rational(2 * k)});
            a.factors.push_back({t.jm(), Rational(k)});
        }
        if (i - 2 * k) {
            r.factors.push_back({t.q(2), Rational(i - 2 * k)});
            a.factors.push_back({t.am(), Rational(i - 2 * k)});
        }
        realized.push_back(std::move(r));
        abstr.push_back(std::move(a));
    }
    out.realized = Expr::from_terms(std::move(realized));
    out.abstract_form = Expr::from_terms(std::move(abstr));
    return out;
}

ModelInstance make_sk(const ParamBindings& params) {
    ModelInstance m;
    m.family = Family::sk;
    m.id = "sk";
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;
    m.realized2d_h = P(t,
        "1/2*(p1^2 + p2^2) + delta*(q1^2 + q2^2) + alpha*(q1^2*q2 + 1/3*q2^3)"
        " + lambda/q1^2");
    m.realized2d_i = P(t,
        "1/2*p1^2*p2^2 + 2*delta*(delta*q1^2*q2^2 + p1*q1*p2*q2)"
        " + 2*alpha*delta*q1^2/3*(q1^2*q2 + 3*q2^3)"
        " + alpha*(alpha*q1^2*q2^2*(q2^2/2 + q1^2/3) + alpha/18*q1^6"
        "          + p1*q1*q2*(p2*q2 - 2*p1*q1/3) + q1^2/3*(2*p1^2*q2 + p1*q1*p2))"
        " + lambda*(p2^2/q1^2 + 4*alpha/3*q2)");
    m.abstract_h = P(t,
        "1/2*(Jp + Ap^2) + delta*(Jm + Am^2) + alpha*(Jm*Am + 1/3*Am^3) + lambda/Jm");
    m.abstract_i = P(t,
        "1/2*Jp*Ap^2 + 2*delta*Am*(delta*Am*Jm + Ap*J3) + 2*alpha*delta*Am*Jm*(Jm/3 + Am^2)"
        " + alpha*(alpha*Am^2*Jm*(Am^2/2 + Jm/3) + alpha/18*Jm^3"
        "          + Am*J3*(Ap*Am - 2*J3/3) + Jm/3*(2*Am*Jp + Ap*J3))"
        " + lambda*(Ap^2/Jm + 4*alpha/3*Am)");
    m.bindings = resolve_bindings(t, params);
    apply_bindings(m);
    return m;
}

ModelInstance make_kk(const ParamBindings& params) {
    ModelInstance m;
    m.family = Family::kk;
    m.id = "kk";
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;
    m.realized2d_h = P(t,
        "1/2*(p1^2 + p2^2) + delta*(q1^2 + 16*q2^2) + alpha*(q1^2*q2 + 16/3*q2^3)"
        " + lambda/q1^2 + nu/q1^6");
    m.realized2d_i = P(t,
        "3/4*p1^4 + delta*(q1^2*(3*delta*q1^2 + p1^2) + 2*p1^2*q1^2)"
        " + alpha*(q1^2*(q2*p1^2 - p2*p1*q1) - alpha*q1^4*(q1^2/6 + q2^2)"
        "          + 2*q2*(p1^2*q1^2 - delta*q1^4))"
        " + lambda*(3/q1^2*(p1^2 + lambda/q1^2) + 2*alpha*q2)"
        " + 3*nu/q1^4*(2*alpha*q2 + 2*delta + 1/q1^2*(p1^2 + 2*lambda/q1^2 + nu/q1^6))");
    m.abstract_h = P(t,
        "1/2*(Jp + Ap^2) + delta*(Jm + 16*Am^2) + alpha*(Jm*Am + 16/3*Am^3)"
        " + lambda/Jm + nu/Jm^3");
    m.abstract_i = P(t,
        "3/4*Jp^2 + delta*(Jm*(3*delta*Jm + Jp) + 2*J3^2)"
        " + alpha*(Jm*(Am*Jp - Ap*J3) - alpha*Jm^2*(Jm/6 + Am^2) + 2*Am*(J3^2 - delta*Jm^2))"
        " + lambda*(3/Jm*(Jp + lambda/Jm) + 2*alpha*Am)"
        " + 3*nu/Jm^2*(2*alpha*Am + 2*delta + 1/Jm*(Jp + 2*lambda/Jm + nu/Jm^3))");
    m.bindings = resolve_bindings(t, params);
    apply_bindings(m);
    return m;
}

ModelInstance make_kdv(const ParamBindings& params) {
    ModelInstance m;
    m.family = Family::kdv;
    m.id = "kdv";
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;
    m.realized2d_h = P(t,
        "1/2*(p1^2 + p2^2) + delta*q1^2 + (delta + Omega)*q2^2"
        " + alpha*(q1^2*q2 + 2*q2^3) + lambda/q1^2");
    m.realized2d_i = P(t,
        "delta*(3/2*p1^2 + (3*delta - Omega)*q1^2) - Omega/2*p1^2"
        " + alpha*(-q2*p1^2 + alpha*q1^2*(q1^2/4 + q2^2) + p2*p1*q1)"
        " + 2*alpha*delta*q2*q1^2 + lambda/q1^2*(3*delta - Omega - 2*alpha*q2)");
    m.abstract_h = P(t,
        "1/2*(Jp + Ap^2) + delta*(Jm + Am^2) + Omega*Am^2 + alpha*(Jm*Am + 2*Am^3)"
        " + lambda/Jm");
    m.abstract_i = P(t,
        "delta*(3/2*Jp + (3*delta - Omega)*Jm) - Omega/2*Jp"
        " + alpha*(-Am*Jp + alpha*Jm*(Jm/4 + Am^2) + Ap*J3)"
        " + 2*alpha*delta*Am*Jm + lambda/Jm*(3*delta - Omega - 2*alpha*Am)");
    m.bindings = resolve_bindings(t, params);
    apply_bindings(m);
    return m;
}

ModelInstance make_kdv_mr(int mdeg, int rdeg, const ParamBindings& params) {
    if (!(mdeg > rdeg && rdeg >= 0))
        throw BadDegrees("kdv-mr requires M > R >= 0 (got M=" + std::to_string(mdeg) +
                         ", R=" + std::to_string(rdeg) + ")");
    ModelInstance m;
    m.family = Family::kdv_mr;
    m.id = "kdv-mr:M=" + std::to_string(mdeg) + ",R=" + std::to_string(rdeg);
    m.m_deg = mdeg;
    m.r_deg = rdeg;
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;

    Expr lam = Expr::symbol(t.parameter("lambda"));
    auto ai = [&](int i) { return Expr::symbol(t.parameter("a" + std::to_string(i), i)); };
    auto gi = [&](int i) { return Expr::symbol(t.parameter("g" + std::to_string(i), i)); };
    Expr q1 = Expr::symbol(t.q(1));
    Expr jm = Expr::symbol(t.jm());

    Expr h2 = P(t, "1/2*(p1^2 + p2^2) + lambda/q1^2");
    Expr i2 = P(t, "-q2*p1^2 + q1*p1*p2 - 2*lambda*q2/q1^2");
    Expr ha = P(t, "1/2*(Jp + Ap^2) + lambda/Jm");
    Expr ia = P(t, "-Am*Jp + J3*Ap - 2*lambda*Am/Jm");

    for (int i = 1; i <= mdeg; ++i) {
        RamaniTable v = ramani(i, t);
        RamaniTable vm1 = ramani(i - 1, t);
        h2 = add(h2, mul(ai(i), v.realized));
        ha = add(ha, mul(ai(i), v.abstract_form));
        i2 = add(i2, mul(ai(i), mul(pow(q1, 2), vm1.realized)));
        ia = add(ia, mul(ai(i), mul(jm, vm1.abstract_form)));
    }
    for (int i = 1; i <= rdeg; ++i) {
        RamaniTable v = ramani(i, t);
        RamaniTable vp1 = ramani(i + 1, t);
        h2 = add(h2, mul(gi(i), mul(v.realized, monomial_pow(q1, Rational(-2 * i - 2)))));
        ha = add(ha, mul(gi(i), mul(v.abstract_form, monomial_pow(jm, Rational(-i - 1)))));
        i2 = sub(i2, mul(gi(i), mul(vp1.realized, monomial_pow(q1, Rational(-2 * i - 2)))));
        ia = sub(ia, mul(gi(i), mul(vp1.abstract_form, monomial_pow(jm, Rational(-i - 1)))));
    }
    m.realized2d_h = h2;
    m.realized2d_i = i2;
    m.abstract_h = ha;
    m.abstract_i = ia;
    m.bindings = resolve_bindings(t, params);
    apply_bindings(m);
    return m;
}

ModelInstance make_holt() {
    ModelInstance m;
    m.family = Family::holt;
    m.id = "holt";
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;
    m.realized2d_h = P(t, "1/2*(p1^2 + p2^2) + q2^(-2/3)*(q1^2 + 9/2*q2^2)");
    m.realized2d_i = P(t,
        "p1^4 + 2*p1^2*p2^2 + 24*q2^(1/3)*p2*q1*p1 + 4*q2^(-2/3)*q1^2*p1^2"
        " + 72*q2^(2/3)*q1^2");
    m.abstract_h = P(t, "1/2*(Jp + Ap^2) + Am^(-2/3)*(Jm + 9/2*Am^2)");
    // the printed abstract integral has A-^2 on the second term; the
    // involutive form consistent with the 2D integral carries A+^2
    m.abstract_i = P(t,
        "Jp^2 + 2*Jp*Ap^2 + 24*Am^(1/3)*Ap*J3 + 4*Am^(-2/3)*Jp*Jm + 72*Am^(2/3)*Jm");
    return m;
}

ModelInstance make_generic_hh(const ParamBindings& params) {
    ModelInstance m;
    m.family = Family::generic_hh;
    m.id = "generic";
    m.table = std::make_shared<SymbolTable>();
    SymbolTable& t = *m.table;
    m.realized2d_h = P(t,
        "1/2*(p1^2 + p2^2) + delta*q1^2 + (delta + Omega)*q2^2"
        " + alpha*(q1^2*q2 + beta*q2^3)");
    m.abstract_h = P(t,
        "1/2*(Jp + Ap^2) + delta*(Jm + Am^2) + Omega*Am^2 + alpha*(Jm*Am + beta*Am^3)");
    m.bindings = resolve_bindings(t, params);
    apply_bindings(m);

    // integrable cases: (i) beta=1/3, Omega=0 (SK); (ii) beta=2 (KdV);
    // (iii) beta=16/3, Omega=15 delta (KK). Exact comparisons; the Omega tie
    // in (iii) is recognized symbolically.
    auto value_of = [&](const char* name) -> Expr {
        Symbol s = t.find(name);
        auto it = m.bindings.find(s);
        return it != m.bindings.end() ? it->second : Expr::symbol(s);
    };
    Expr beta = value_of("beta");
    Expr omega = value_of("Omega");
    Expr delta = value_of("delta");

    auto attach = [&](const char* i2_text, const char* ia_text) {
        Expr i2 = P(t, i2_text);
        Expr ia = P(t, ia_text);
        m.realized2d_i = substitute(i2, m.bindings);
        m.abstract_i = substitute(ia, m.bindings);
    };

    if (equal(beta, Expr::constant(rat(1, 3))) && is_zero(omega)) {
        attach(
            "1/2*p1^2*p2^2 + 2*delta*(delta*q1^2*q2^2 + p1*q1*p2*q2)"
            " + 2*alpha*delta*q1^2/3*(q1^2*q2 + 3*q2^3)"
            " + alpha*(alpha*q1^2*q2^2*(q2^2/2 + q1^2/3) + alpha/18*q1^6"
            "          + p1*q1*q2*(p2*q2 - 2*p1*q1/3) + q1^2/3*(2*p1^2*q2 + p1*q1*p2))",
            "1/2*Jp*Ap^2 + 2*delta*Am*(delta*Am*Jm + Ap*J3) + 2*alpha*delta*Am*Jm*(Jm/3 + Am^2)"
            " + alpha*(alpha*Am^2*Jm*(Am^2/2 + Jm/3) + alpha/18*Jm^3"
            "          + Am*J3*(Ap*Am - 2*J3/3) + Jm/3*(2*Am*Jp + Ap*J3))");
    } else if (equal(beta, Expr::constant(Rational(2)))) {
        attach(
            "delta*(3/2*p1^2 + (3*delta - Omega)*q1^2) - Omega/2*p1^2"
            " + alpha*(-q2*p1^2 + alpha*q1^2*(q1^2/4 + q2^2) + p2*p1*q1)"
            " + 2*alpha*delta*q2*q1^2",
            "delta*(3/2*Jp + (3*delta - Omega)*Jm) - Omega/2*Jp"
            " + alpha*(-Am*Jp + alpha*Jm*(Jm/4 + Am^2) + Ap*J3)"
            " + 2*alpha*delta*Am*Jm");
    } else if (equal(beta, Expr::constant(rat(16, 3))) &&
               equal(omega, scale(delta, Rational(15)))) {
        attach(
            "3/4*p1^4 + delta*(q1^2*(3*delta*q1^2 + p1^2) + 2*p1^2*q1^2)"
            " + alpha*(q1^2*(q2*p1^2 - p2*p1*q1) - alpha*q1^4*(q1^2/6 + q2^2)"
            "          + 2*q2*(p1^2*q1^2 - delta*q1^4))",
            "3/4*Jp^2 + delta*(Jm*(3*delta*Jm + Jp) + 2*J3^2)"
            " + alpha*(Jm*(Am*Jp - Ap*J3) - alpha*Jm^2*(Jm/6 + Am^2)"
            "          + 2*Am*(J3^2 - delta*Jm^2))");
    }
    return m;
}

ModelInstance make_rational_series(int r, const std::string& c,
                                   const std::vector<std::string>& xi) {
    if (static_cast<int>(xi.size()) != r + 1)
        throw BadDegrees("rational series needs xi_0..xi_R (" + std::to_string(r + 1) +
                         " values)");
    ParamBindings p;
    p["a1"] = c;
    p["a2"] = "0";
    p["a3"] = "1/8";
    p["lambda"] = "2*(" + xi[0] + ")";
    for (int j = 1; j <= r; ++j)
        p["g" + std::to_string(j)] = rat_str(pow2(2 * j + 1)) + "*(" + xi[j] + ")";
    int m = std::max(3, r + 1);
    for (int i = 4; i <= m; ++i) p["a" + std::to_string(i)] = "0";
    return make_kdv_mr(m, r, p);
}

ModelInstance make_model(const std::string& id, const ParamBindings& params) {
    std::string base = id;
    std::string args;
    auto colon = id.find(':');
    if (colon != std::string::npos) {
        base = id.substr(0, colon);
        args = id.substr(colon + 1);
    }
    ParamBindings merged = params;
    int mdeg = -1, rdeg = -1;
    // inline args: key=value pairs separated by commas
    std::istringstream as(args);
    std::string kv;
    while (std::getline(as, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("bad model argument '" + kv + "' in id '" + id + "'");
        std::string key = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        if (key == "M")
            mdeg = std::stoi(val);
        else if (key == "R")
            rdeg = std::stoi(val);
        else
            merged[key] = val;
    }
    if (base == "sk") return make_sk(merged);
    if (base == "kk") return make_kk(merged);
    if (base == "kdv") return make_kdv(merged);
    if (base == "holt") return make_holt();
    if (base == "generic") return make_generic_hh(merged);
    if (base == "kdv-mr") {
        if (mdeg < 0 || rdeg < 0)
            throw ConfigError("kdv-mr needs M and R, e.g. kdv-mr:M=4,R=3");
        return make_kdv_mr(mdeg, rdeg, merged);
    }
    throw ConfigError("unknown model '" + base + "'");
}

std::vector<FamilyInfo> catalog_listing() {
    return {
        {"sk", "Sawada-Kotera Henon-Heiles with centrifugal term",
         {"delta", "alpha", "lambda"}, true, ""},
        {"kk", "Kaup-Kupershmidt Henon-Heiles with q^-2 and q^-6 terms",
         {"delta", "alpha", "lambda", "nu"}, true, ""},
        {"kdv", "KdV Henon-Heiles with anisotropy and centrifugal term",
         {"delta", "Omega", "alpha", "lambda"}, true, ""},
        {"kdv-mr", "KdV with superposed Ramani and rational perturbations",
         {"lambda", "a1..aM", "g1..gR"}, true, "M > R"},
        {"holt", "2D Holt potential (fractional exponents)", {}, true, ""},
        {"generic", "multiparametric Henon-Heiles (non-integrable in general)",
         {"delta", "Omega", "alpha", "beta"}, false,
         "integrable iff beta=1/3,Omega=0 | beta=2 | beta=16/3,Omega=15*delta"},
    };
}

} // namespace hh
