#include "hh/realize.hpp"

#include <sstream>

namespace hh {

std::string RealizationSpec::describe() const {
    std::ostringstream os;
    os << "n=" << n << " b=";
    switch (b_kind) {
        case BKind::zero: os << "0"; break;
        case BKind::symbolic: os << "symbolic"; break;
        case BKind::numeric: {
            for (std::size_t i = 0; i < b_values.size(); ++i)
                os << (i ? "," : "") << rat_str(b_values[i]);
            break;
        }
    }
    return os.str();
}

Realization::Realization(SymbolTable& table, const RealizationSpec& spec)
    : table_(&table), spec_(spec) {
    if (spec.n < 2) throw BadDegrees("realization needs N >= 2");
    if (spec.b_kind == RealizationSpec::BKind::numeric &&
        static_cast<int>(spec.b_values.size()) != spec.n - 1)
        throw BadDegrees("need N-1 centrifugal constants");

    for (int i = 1; i < spec.n; ++i) {
        switch (spec.b_kind) {
            case RealizationSpec::BKind::zero:
                b_.push_back(Expr::zero());
                break;
            case RealizationSpec::BKind::symbolic:
                b_.push_back(Expr::symbol(
                    table.intern("b" + std::to_string(i), SymbolKind::parameter, i)));
                break;
            case RealizationSpec::BKind::numeric:
                b_.push_back(Expr::constant(spec.b_values[i - 1]));
                break;
        }
    }

    Expr jp = Expr::zero(), jm = Expr::zero(), j3 = Expr::zero();
    for (int i = 1; i < spec.n; ++i) {
        Expr qi = Expr::symbol(table.q(i));
        Expr pi = Expr::symbol(table.p(i));
        jp = add(jp, pow(pi, 2));
        if (!b_[i - 1].is_zero())
            jp = add(jp, mul(b_[i - 1], monomial_pow(qi, Rational(-2))));
        jm = add(jm, pow(qi, 2));
        j3 = add(j3, mul(qi, pi));
    }
    jp_ = jp;
    jm_ = jm;
    j3_ = j3;
    ap_ = Expr::symbol(table.p(spec.n));
    am_ = Expr::symbol(table.q(spec.n));

    if (spec.n >= 3) {
        Symbol u = table.intern("u", SymbolKind::parameter);
        rel_ = SideRelation{u, jm_};
    }
}

Expr Realization::apply(const Expr& e) const {
    SymbolTable& t = *table_;
    std::map<Symbol, Expr> map{{t.jp(), jp_}, {t.jm(), jm_}, {t.j3(), j3_},
                               {t.ap(), ap_}, {t.am(), am_},
                               {t.m(), Expr::constant(Rational(1))}};
    SubstOptions opts;
    if (rel_) opts.formal_inverse[t.jm()] = rel_->inv;
    return substitute(e, map, opts);
}

BracketContext Realization::canonical_context() const {
    return BracketContext::canonical(*table_, spec_.n, rel_);
}

std::vector<Expr> universal_integrals(const Realization& real) {
    SymbolTable& t = real.table();
    int n = real.spec().n;
    std::vector<Expr> out;
    for (int m = 2; m <= n - 1; ++m) {
        Expr c = Expr::zero();
        for (int i = 1; i <= m; ++i) {
            for (int j = i + 1; j <= m; ++j) {
                Expr qi = Expr::symbol(t.q(i)), qj = Expr::symbol(t.q(j));
                Expr pi = Expr::symbol(t.p(i)), pj = Expr::symbol(t.p(j));
                c = add(c, pow(sub(mul(qi, pj), mul(qj, pi)), 2));
                Expr bi = real.b_entry(i), bj = real.b_entry(j);
                if (!bi.is_zero())
                    c = add(c, mul(bi, mul(pow(qj, 2), monomial_pow(qi, Rational(-2)))));
                if (!bj.is_zero())
                    c = add(c, mul(bj, mul(pow(qi, 2), monomial_pow(qj, Rational(-2)))));
            }
        }
        out.push_back(c);
    }
    return out;
}

Certificate casimir_identity_check(const Realization& real) {
    SymbolTable& t = real.table();
    Expr lhs = real.apply(sl2_casimir(t));
    Expr rhs = Expr::zero();
    auto cs = universal_integrals(real);
    if (!cs.empty()) rhs = cs.back(); // C^(N-1); zero when N = 2
    for (int i = 1; i < real.spec().n; ++i) rhs = add(rhs, real.b_entry(i));
    Expr residual = sub(lhs, rhs);
    return Certificate{residual.is_zero(), residual,
                       "casimir identity " + real.spec().describe()};
}

NdSystem build_nd_model(const ModelInstance& model, const RealizationSpec& spec,
                        bool allow_quasi) {
    if (!model.has_integral() && !allow_quasi)
        throw NoIntegral("model '" + model.id + "' has no integral");
    Realization real(*model.table, spec);
    NdSystem out;
    out.n = spec.n;
    out.h = real.apply(model.abstract_h);
    if (model.has_integral())
        out.i = real.apply(*model.abstract_i);
    else
        out.quasi = true;
    out.universal = universal_integrals(real);
    out.rel = real.relation();
    return out;
}

} // namespace hh
