#include "hh/poisson.hpp"

#include "hh/parser.hpp"

namespace hh {

StructureTable StructureTable::standard(SymbolTable& t) {
    StructureTable st;
    Expr jp = Expr::symbol(t.jp());
    Expr jm = Expr::symbol(t.jm());
    Expr j3 = Expr::symbol(t.j3());
    Expr m = Expr::symbol(t.m());
    st.entries.push_back({t.j3(), t.jp(), scale(jp, Rational(2))});
    st.entries.push_back({t.j3(), t.jm(), scale(jm, Rational(-2))});
    st.entries.push_back({t.jm(), t.jp(), scale(j3, Rational(4))});
    st.entries.push_back({t.am(), t.ap(), m});
    return st;
}

BracketContext BracketContext::canonical(SymbolTable& table, int n,
                                         std::optional<SideRelation> rel) {
    BracketContext ctx;
    ctx.mode_ = BracketMode::canonical;
    ctx.n_ = n;
    ctx.table_ = &table;
    ctx.rel_ = std::move(rel);
    return ctx;
}

BracketContext BracketContext::abstract(SymbolTable& table) {
    BracketContext ctx;
    ctx.mode_ = BracketMode::abstract;
    ctx.table_ = &table;
    ctx.structure_ = StructureTable::standard(table);
    return ctx;
}

namespace {

void check_symbols(const Expr& e, const BracketContext& ctx) {
    for (Symbol s : e.symbols())
        if (!ctx.table().contains(s))
            throw UnknownSymbol("expression uses symbol '" + s.name() +
                                "' not present in the bracket context");
}

} // namespace

Expr bracket(const Expr& f, const Expr& g, const BracketContext& ctx) {
    check_symbols(f, ctx);
    check_symbols(g, ctx);
    Expr out = Expr::zero();
    if (ctx.mode() == BracketMode::canonical) {
        const SideRelation* rel = ctx.relation() ? &*ctx.relation() : nullptr;
        for (int i = 1; i <= ctx.n(); ++i) {
            Symbol qi = ctx.table().q(i);
            Symbol pi = ctx.table().p(i);
            Expr df_q = diff(f, qi, rel);
            Expr dg_p = diff(g, pi, rel);
            Expr df_p = diff(f, pi, rel);
            Expr dg_q = diff(g, qi, rel);
            out = add(out, sub(mul(df_q, dg_p), mul(df_p, dg_q)));
        }
    } else {
        // {f,g} = sum over structure pairs (x,y): {x,y} (df/dx dg/dy - df/dy dg/dx)
        for (const auto& ent : ctx.structure().entries) {
            Expr df_x = diff(f, ent.x);
            Expr dg_y = diff(g, ent.y);
            Expr df_y = diff(f, ent.y);
            Expr dg_x = diff(g, ent.x);
            out = add(out, mul(ent.bracket, sub(mul(df_x, dg_y), mul(df_y, dg_x))));
        }
    }
    return out;
}

Expr sl2_casimir(SymbolTable& t) {
    return sub(mul(Expr::symbol(t.jp()), Expr::symbol(t.jm())),
               pow(Expr::symbol(t.j3()), 2));
}

std::vector<Expr> casimirs(const BracketContext& ctx) {
    if (ctx.mode() != BracketMode::abstract)
        throw WrongMode("casimirs are defined for the abstract context only");
    SymbolTable& t = ctx.table();
    return {Expr::symbol(t.m()), sl2_casimir(t)};
}

Certificate certify_involution(const Expr& h, const Expr& i, const BracketContext& ctx,
                               const std::string& label) {
    Expr res = bracket(h, i, ctx);
    if (ctx.mode() == BracketMode::abstract) {
        // the realizations all sit on the M = 1 symplectic leaf
        std::map<Symbol, Expr> leaf{{ctx.table().m(), Expr::constant(Rational(1))}};
        res = substitute(res, leaf);
    } else if (ctx.relation()) {
        res = reduce_aux(res, *ctx.relation());
    }
    return Certificate{res.is_zero(), res, label};
}

} // namespace hh
