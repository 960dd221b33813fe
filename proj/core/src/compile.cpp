#include "hh/compile.hpp"

#include <cmath>
#include <set>

namespace hh {

namespace {

constexpr double k_eps_sing = 1e-8;

int slot_of(Symbol s, int n, SymbolTable& table) {
    if (s.kind() == SymbolKind::position && s.index() >= 1 && s.index() <= n)
        return s.index() - 1;
    if (s.kind() == SymbolKind::momentum && s.index() >= 1 && s.index() <= n)
        return n + s.index() - 1;
    (void)table;
    return -1;
}

double ipow(double b, long e) {
    if (e < 0) return 1.0 / ipow(b, -e);
    double acc = 1.0;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

CompiledScalar::CompiledScalar(const Expr& e, int n, SymbolTable& table,
                               const std::optional<SideRelation>& rel) {
    for (const Monomial& m : e.terms()) {
        Term t;
        t.coeff = to_double(m.coeff);
        for (const auto& [s, ex] : m.factors) {
            if (rel && s == rel->inv) {
                if (!is_integer(ex) || ex < 0)
                    throw UnboundParameter("auxiliary symbol with non-integer power");
                t.aux_pow = to_long(ex);
                uses_aux_ = true;
                pure_p_ = false; // aux depends on positions
                continue;
            }
            int slot = slot_of(s, n, table);
            if (slot < 0)
                throw UnboundParameter("unbound parameter '" + s.name() +
                                       "' in compiled expression");
            if (slot < n)
                pure_p_ = false;
            else
                pure_q_ = false;
            if (is_integer(ex))
                t.ipows.push_back({slot, to_long(ex)});
            else
                t.fpows.push_back({slot, to_double(ex)});
        }
        terms_.push_back(std::move(t));
    }
}

double CompiledScalar::eval(const double* x, double aux) const {
    double sum = 0.0;
    for (const Term& t : terms_) {
        double v = t.coeff;
        for (const auto& [slot, e] : t.ipows) v *= ipow(x[slot], e);
        for (const auto& [slot, e] : t.fpows) v *= std::pow(x[slot], e);
        if (t.aux_pow) v *= ipow(aux, t.aux_pow);
        sum += v;
    }
    return sum;
}

CompiledScalar compile_scalar(const Expr& e, int n, SymbolTable& table,
                              const std::optional<SideRelation>& rel) {
    return CompiledScalar(e, n, table, rel);
}

CompiledField::CompiledField(const Expr& h, int n, SymbolTable& table,
                             std::optional<SideRelation> rel)
    : n_(n) {
    // drop an unused relation so pure polynomial models skip the aux machinery
    if (rel && !h.depends_on(rel->inv)) rel.reset();
    rel_ = rel;

    const SideRelation* relp = rel_ ? &*rel_ : nullptr;
    h_ = CompiledScalar(h, n, table, rel_);
    if (rel_) denom_ = CompiledScalar(rel_->denom, n, table, std::nullopt);
    for (int i = 1; i <= n; ++i) {
        dq_.push_back(CompiledScalar(diff(h, table.q(i), relp), n, table, rel_));
        dp_.push_back(CompiledScalar(diff(h, table.p(i), relp), n, table, rel_));
    }

    // separability: every term of H pure in q (potential, incl. aux) or pure in p
    separable_ = true;
    for (const Monomial& m : h.terms()) {
        bool has_q = false, has_p = false;
        for (const auto& [s, ex] : m.factors) {
            if (rel_ && s == rel_->inv) has_q = true;
            else if (s.kind() == SymbolKind::position) has_q = true;
            else if (s.kind() == SymbolKind::momentum) has_p = true;
        }
        if (has_q && has_p) separable_ = false;
    }

    // singularity guards from exponent signs across H and its gradient
    std::set<std::pair<int, int>> seen; // (slot, kind)
    auto scan = [&](const CompiledScalar& cs) {
        for (const auto& t : cs.terms()) {
            for (const auto& [slot, e] : t.ipows)
                if (e < 0 && seen.insert({slot, 0}).second)
                    guards_.push_back(Guard{Guard::Kind::abs_min, slot,
                                            "negative power of state slot " +
                                                std::to_string(slot)});
            for (const auto& [slot, e] : t.fpows)
                if (seen.insert({slot, 1}).second)
                    guards_.push_back(Guard{Guard::Kind::positive, slot,
                                            "fractional power of state slot " +
                                                std::to_string(slot)});
        }
    };
    scan(h_);
    for (const auto& g : dq_) scan(g);
    for (const auto& g : dp_) scan(g);
    if (rel_)
        guards_.push_back(Guard{Guard::Kind::denom_abs_min, -1, "auxiliary denominator"});
}

double CompiledField::aux_value(const double* x) const {
    if (!rel_) return 0.0;
    double d = denom_.eval(x, 0.0);
    return 1.0 / d;
}

double CompiledField::hamiltonian(const double* x) const {
    return h_.eval(x, aux_value(x));
}

void CompiledField::rhs(const double* x, double* dxdt) const {
    double aux = aux_value(x);
    for (int i = 0; i < n_; ++i) {
        dxdt[i] = dp_[i].eval(x, aux);        // dq/dt = dH/dp
        dxdt[n_ + i] = -dq_[i].eval(x, aux);  // dp/dt = -dH/dq
    }
}

void CompiledField::grad_q(const double* x, double* out) const {
    double aux = aux_value(x);
    for (int i = 0; i < n_; ++i) out[i] = dq_[i].eval(x, aux);
}

void CompiledField::grad_p(const double* x, double* out) const {
    double aux = aux_value(x);
    for (int i = 0; i < n_; ++i) out[i] = dp_[i].eval(x, aux);
}

double CompiledField::guard_margin(const double* x) const {
    double margin = 1.0;
    for (const Guard& g : guards_) {
        double v;
        switch (g.kind) {
            case Guard::Kind::abs_min: v = std::fabs(x[g.slot]) - k_eps_sing; break;
            case Guard::Kind::positive: v = x[g.slot] - k_eps_sing; break;
            case Guard::Kind::denom_abs_min:
                v = std::fabs(denom_.eval(x, 0.0)) - k_eps_sing;
                break;
            default: v = 1.0;
        }
        margin = std::min(margin, v);
    }
    return margin;
}

} // namespace hh
