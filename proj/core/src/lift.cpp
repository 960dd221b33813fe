#include "hh/lift.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hh/parser.hpp"

namespace hh {

namespace {

struct SL2Word {
    long x, y, z; // Jp^x Jm^y J3^z
};

std::vector<SL2Word> sl2_words(long a, long b) {
    std::vector<SL2Word> out;
    if (b < 0) return out;
    if (((a - b) % 2) != 0) return out;
    for (long x = 0; 2 * x <= b; ++x) {
        long z = b - 2 * x;
        long y = (a - z) / 2;
        if (a >= 0 && y < 0) continue;
        out.push_back({x, y, z});
    }
    return out;
}

// the decomposed shape of one canonical monomial
struct BlockKey {
    long a = 0, b = 0;           // q1/p1 exponents
    Rational t{0};               // q2 exponent (may be fractional)
    long s = 0;                  // p2 exponent
    Monomial pi{Rational(1), {}}; // parameter part, coefficient 1

    bool operator<(const BlockKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (t != o.t) return t < o.t;
        if (s != o.s) return s < o.s;
        return print_monomial(pi) < print_monomial(o.pi);
    }
};

struct Decomposed {
    BlockKey key;
    Rational coeff;
};

Decomposed decompose(const Monomial& m, Symbol q1, Symbol p1, Symbol q2, Symbol p2) {
    Decomposed d;
    d.coeff = m.coeff;
    d.key.pi.coeff = Rational(1);
    for (const auto& [s, e] : m.factors) {
        if (s == q1) {
            if (!is_integer(e))
                throw NotLiftable("fractional power of q1 in '" + print_monomial(m) + "'");
            d.key.a = to_long(e);
        } else if (s == p1) {
            if (!is_integer(e) || e < 0)
                throw NotLiftable("p1 power must be a non-negative integer in '" +
                                  print_monomial(m) + "'");
            d.key.b = to_long(e);
        } else if (s == q2) {
            d.key.t = e;
        } else if (s == p2) {
            if (!is_integer(e) || e < 0)
                throw NotLiftable("p2 power must be a non-negative integer in '" +
                                  print_monomial(m) + "'");
            d.key.s = to_long(e);
        } else if (s.kind() == SymbolKind::parameter) {
            d.key.pi.factors.push_back({s, e});
        } else {
            throw NotLiftable("symbol '" + s.name() + "' is not q1,p1,q2,p2 or a parameter");
        }
    }
    return d;
}

Expr word_expr(const SL2Word& w, const BlockKey& k, SymbolTable& t) {
    std::vector<std::pair<Symbol, Rational>> f;
    if (w.x) f.push_back({t.jp(), Rational(w.x)});
    if (w.y) f.push_back({t.jm(), Rational(w.y)});
    if (w.z) f.push_back({t.j3(), Rational(w.z)});
    if (k.s) f.push_back({t.ap(), Rational(k.s)});
    if (k.t != 0) f.push_back({t.am(), k.t});
    for (const auto& pf : k.pi.factors) f.push_back(pf);
    return Expr::monomial(Rational(1), std::move(f));
}

// quasi-homogeneity weight system, solved exactly from h2 and i2; the
// filter accepts a candidate block iff its weight functional agrees with
// w(I) on the whole solution space of the system
class WeightFilter {
  public:
    WeightFilter(const Expr& h2, const Expr& i2, Symbol q1, Symbol p1, Symbol q2, Symbol p2) {
        std::set<Symbol> syms;
        for (const auto& e : {h2, i2})
            for (Symbol s : e.symbols()) syms.insert(s);
        int n = 0;
        for (Symbol s : syms) scratch_col_[s] = n++;
        wh_col_ = n++;
        wi_col_ = n++;
        ncols_ = n;

        std::vector<std::vector<Rational>> rows;
        auto add_rows = [&](const Expr& e, int wcol) {
            for (const Monomial& m : e.terms()) {
                std::vector<Rational> row(ncols_, Rational(0));
                for (const auto& [s, ex] : m.factors) row[scratch_col_[s]] += ex;
                row[wcol] -= 1;
                rows.push_back(std::move(row));
            }
        };
        add_rows(h2, wh_col_);
        add_rows(i2, wi_col_);

        // homogeneous Gauss elimination to a nullspace basis
        std::size_t rank = 0;
        std::vector<int> pivot_of_col(ncols_, -1);
        for (int c = 0; c < ncols_ && rank < rows.size(); ++c) {
            std::size_t sel = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r)
                if (rows[r][c] != 0) {
                    sel = r;
                    break;
                }
            if (sel == rows.size()) continue;
            std::swap(rows[rank], rows[sel]);
            Rational inv = 1 / rows[rank][c];
            for (auto& v : rows[rank]) v *= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][c] == 0) continue;
                Rational f = rows[r][c];
                for (int j = 0; j < ncols_; ++j) rows[r][j] -= f * rows[rank][j];
            }
            pivot_of_col[c] = static_cast<int>(rank);
            ++rank;
        }
        for (int fc = 0; fc < ncols_; ++fc) {
            if (pivot_of_col[fc] >= 0) continue;
            std::vector<Rational> vec(ncols_, Rational(0));
            vec[fc] = Rational(1);
            for (int c = 0; c < ncols_; ++c)
                if (pivot_of_col[c] >= 0) vec[c] = -rows[pivot_of_col[c]][fc];
            basis_.push_back(std::move(vec));
        }
        q1_ = q1;
        p1_ = p1;
        q2_ = q2;
        p2_ = p2;
    }

    bool admits(const BlockKey& k) const {
        for (const auto& v : basis_) {
            Rational w(0);
            w += Rational(k.a) * at(v, q1_);
            w += Rational(k.b) * at(v, p1_);
            w += k.t * at(v, q2_);
            w += Rational(k.s) * at(v, p2_);
            for (const auto& [s, e] : k.pi.factors) w += e * at(v, s);
            if (w != v[wi_col_]) return false;
        }
        return true;
    }

  private:
    Rational at(const std::vector<Rational>& v, Symbol s) const {
        auto it = scratch_col_.find(s);
        return it == scratch_col_.end() ? Rational(0) : v[it->second];
    }
    std::map<Symbol, int> scratch_col_;
    int wh_col_ = 0, wi_col_ = 0, ncols_ = 0;
    std::vector<std::vector<Rational>> basis_;
    Symbol q1_, p1_, q2_, p2_;
};

std::string canonical_text(const BlockKey& k, const Rational& coeff, Symbol q1, Symbol p1,
                           Symbol q2, Symbol p2) {
    Monomial m;
    m.coeff = coeff;
    if (k.a) m.factors.push_back({q1, Rational(k.a)});
    if (k.b) m.factors.push_back({p1, Rational(k.b)});
    if (k.t != 0) m.factors.push_back({q2, k.t});
    if (k.s) m.factors.push_back({p2, Rational(k.s)});
    for (const auto& f : k.pi.factors) m.factors.push_back(f);
    std::sort(m.factors.begin(), m.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return print_monomial(m);
}

} // namespace

LiftResult lift_to_abstract(const Expr& h2, const Expr& i2, SymbolTable& table) {
    Symbol q1 = table.q(1), p1 = table.p(1), q2 = table.q(2), p2 = table.p(2);

    // Hamiltonian: every block must be unambiguous
    Expr h_abs = Expr::zero();
    for (const Monomial& m : h2.terms()) {
        Decomposed d = decompose(m, q1, p1, q2, p2);
        auto words = sl2_words(d.key.a, d.key.b);
        if (words.empty())
            throw NotLiftable("hamiltonian monomial '" + print_monomial(m) +
                              "' admits no (p1^2, q1^2, q1 p1) block decomposition");
        if (words.size() > 1)
            throw NotLiftable("hamiltonian monomial '" + print_monomial(m) +
                              "' is ambiguous; expected kinetic + V(q1^2, q2) shape");
        h_abs = add(h_abs, scale(word_expr(words[0], d.key, table), d.coeff));
    }

    // integral: observed blocks
    struct Group {
        BlockKey key;
        Rational coeff;
        std::vector<SL2Word> words;
        std::vector<Symbol> unknowns; // empty when direct
        bool zero_sum = false;
    };
    std::vector<Group> groups;
    std::set<BlockKey> seen;
    long amin = 0, amax = 0, bmax = 0;
    std::set<std::pair<Rational, long>> at_patterns{{Rational(0), 0}};
    std::set<std::string> pi_seen;
    std::vector<Monomial> pis{Monomial{Rational(1), {}}};
    pi_seen.insert(print_monomial(pis[0]));

    for (const Monomial& m : i2.terms()) {
        Decomposed d = decompose(m, q1, p1, q2, p2);
        auto words = sl2_words(d.key.a, d.key.b);
        if (words.empty())
            throw NotLiftable("integral monomial '" + print_monomial(m) +
                              "' admits no (p1^2, q1^2, q1 p1) block decomposition");
        amin = std::min(amin, d.key.a);
        amax = std::max(amax, d.key.a);
        bmax = std::max(bmax, d.key.b);
        at_patterns.insert({d.key.t, d.key.s});
        if (!pi_seen.count(print_monomial(d.key.pi))) {
            pi_seen.insert(print_monomial(d.key.pi));
            pis.push_back(d.key.pi);
        }
        groups.push_back(Group{d.key, d.coeff, std::move(words), {}, false});
        seen.insert(d.key);
    }

    // zero-sum candidate blocks: the N=2 realization kills C_sl2 multiples,
    // so expanded integrals can be missing whole blocks; recover them from a
    // closure over the observed rectangle, pruned by the weight system
    WeightFilter wf(h2, i2, q1, p1, q2, p2);
    for (long b = 0; b <= bmax; ++b) {
        for (long a = amin; a <= amax; ++a) {
            auto words = sl2_words(a, b);
            if (words.size() < 2) continue;
            for (const auto& [t, s] : at_patterns) {
                for (const auto& pi : pis) {
                    BlockKey k;
                    k.a = a;
                    k.b = b;
                    k.t = t;
                    k.s = s;
                    k.pi = pi;
                    if (seen.count(k)) continue;
                    if (!wf.admits(k)) continue;
                    groups.push_back(Group{k, Rational(0), words, {}, true});
                    seen.insert(k);
                }
            }
        }
    }

    // unknowns + ansatz
    LinearSystem sys;
    Expr i_ansatz = Expr::zero();
    int next_id = 1;
    auto fresh_unknown = [&]() {
        while (table.has("k" + std::to_string(next_id))) ++next_id;
        return table.declare("k" + std::to_string(next_id++), SymbolKind::parameter);
    };

    for (auto& g : groups) {
        if (g.words.size() == 1 && !g.zero_sum) {
            i_ansatz = add(i_ansatz, scale(word_expr(g.words[0], g.key, table), g.coeff));
            continue;
        }
        Expr constraint = Expr::constant(-g.coeff);
        for (const auto& w : g.words) {
            Symbol k = fresh_unknown();
            g.unknowns.push_back(k);
            sys.unknowns.push_back(k);
            i_ansatz = add(i_ansatz, mul(Expr::symbol(k), word_expr(w, g.key, table)));
            constraint = add(constraint, Expr::symbol(k));
        }
        sys.equations.push_back(constraint);
    }

    // involution condition on the M = 1 leaf
    BracketContext actx = BracketContext::abstract(table);
    Expr residual = bracket(h_abs, i_ansatz, actx);
    residual = substitute(residual, {{table.m(), Expr::constant(Rational(1))}});
    if (!residual.is_zero()) sys.equations.push_back(residual);

    LinearSolution sol = solve_linear(sys);

    LiftResult out;
    out.h_abstract = h_abs;
    out.system = sys;
    out.solution = sol;

    if (sol.solved()) {
        std::map<Symbol, Expr> vals;
        for (const auto& [s, v] : sol.values) vals[s] = Expr::constant(v);
        out.i_abstract = substitute(i_ansatz, vals);
    } else {
        out.i_abstract = Expr::zero();
    }

    for (const auto& g : groups) {
        if (g.unknowns.empty()) continue;
        LiftBlock blk;
        blk.canonical = canonical_text(g.key, g.coeff, q1, p1, q2, p2);
        blk.zero_sum = g.zero_sum;
        bool any_nonzero = false;
        for (std::size_t j = 0; j < g.words.size(); ++j) {
            Rational v(0);
            if (sol.solved()) v = sol.values.at(g.unknowns[j]);
            if (v != 0) any_nonzero = true;
            Expr w = word_expr(g.words[j], g.key, table);
            blk.words.push_back({print_expr(w), v});
        }
        if (!g.zero_sum || any_nonzero) out.blocks.push_back(std::move(blk));
    }

    if (sol.solved()) {
        out.involution = certify_involution(out.h_abstract, out.i_abstract, actx, "lift");
        SymbolTable& t = table;
        std::map<Symbol, Expr> n2{{t.jp(), pow(Expr::symbol(p1), 2)},
                                  {t.jm(), pow(Expr::symbol(q1), 2)},
                                  {t.j3(), mul(Expr::symbol(q1), Expr::symbol(p1))},
                                  {t.ap(), Expr::symbol(p2)},
                                  {t.am(), Expr::symbol(q2)},
                                  {t.m(), Expr::constant(Rational(1))}};
        out.realization_matches = equal(substitute(out.i_abstract, n2), i2) &&
                                  equal(substitute(out.h_abstract, n2), h2);
    } else {
        out.involution = Certificate{false, residual, "lift"};
        out.realization_matches = false;
    }
    return out;
}

std::string lift_report(const LiftResult& r) {
    std::ostringstream os;
    os << "H = " << print_expr(r.h_abstract) << "\n";
    if (r.solution.solved()) {
        os << "I = " << print_expr(r.i_abstract) << "\n";
    } else {
        os << "I = <no lift: inconsistent coefficient system>\n";
    }
    os << "unknowns: " << r.system.unknowns.size();
    switch (r.solution.kind) {
        case LinearSolution::Kind::unique:
            os << " (fixed unambiguously)\n";
            break;
        case LinearSolution::Kind::underdetermined:
            os << " (solution manifold dimension " << r.solution.manifold_dim()
               << "; free coefficients set to zero)\n";
            break;
        case LinearSolution::Kind::inconsistent:
            os << " (inconsistent)\n";
            break;
    }
    for (const auto& b : r.blocks) {
        os << "block " << b.canonical << (b.zero_sum ? " [cancelled in 2D]" : "") << " ->";
        for (const auto& [w, v] : b.words) os << " " << rat_str(v) << "*(" << w << ")";
        os << "\n";
    }
    os << "involution: " << (r.involution.zero ? "zero" : print_expr(r.involution.residual))
       << "\n";
    os << "realization check: " << (r.realization_matches ? "matches" : "MISMATCH") << "\n";
    return os.str();
}

} // namespace hh
