#pragma once

#include <optional>
#include <vector>

#include "hh/catalog.hpp"
#include "hh/poisson.hpp"

namespace hh {

// N and the centrifugal constants b_1..b_{N-1}; all-zero b is the plain
// realization (ssl2/sh6), symbolic keeps the b_i as parameters, numeric
// binds them to exact rationals.
struct RealizationSpec {
    enum class BKind { zero, symbolic, numeric };
    int n = 2;
    BKind b_kind = BKind::zero;
    std::vector<Rational> b_values;

    static RealizationSpec plain(int n) { return {n, BKind::zero, {}}; }
    static RealizationSpec with_symbolic_b(int n) { return {n, BKind::symbolic, {}}; }
    static RealizationSpec with_b(int n, std::vector<Rational> b) {
        return {n, BKind::numeric, std::move(b)};
    }
    std::string describe() const;
};

// Generator images over a table:
//   Jp = sum_{i<N} (p_i^2 + b_i/q_i^2), Jm = sum_{i<N} q_i^2,
//   J3 = sum_{i<N} q_i p_i, Ap = p_N, Am = q_N, M = 1.
// Negative powers of Jm introduce the auxiliary inverse u with
// u * Jm_image = 1 (only needed for N >= 3; N = 2 inverts the monomial
// q_1^2 directly).
class Realization {
  public:
    Realization(SymbolTable& table, const RealizationSpec& spec);

    Expr apply(const Expr& abstract_expr) const;
    const std::optional<SideRelation>& relation() const { return rel_; }
    const RealizationSpec& spec() const { return spec_; }
    SymbolTable& table() const { return *table_; }
    Expr b_entry(int i) const { return b_[i - 1]; } // 1-based
    const Expr& jm_image() const { return jm_; }

    BracketContext canonical_context() const;

  private:
    SymbolTable* table_;
    RealizationSpec spec_;
    Expr jp_, jm_, j3_, ap_, am_;
    std::vector<Expr> b_;
    std::optional<SideRelation> rel_; // set when N >= 3 (used on demand)
};

// C^(m) = sum_{1<=i<j<=m} (q_i p_j - q_j p_i)^2
//         + sum_{1<=i<j<=m} (b_i q_j^2/q_i^2 + b_j q_i^2/q_j^2),  m = 2..N-1.
std::vector<Expr> universal_integrals(const Realization& real);

// realize(Jp Jm - J3^2) == C^(N-1) + sum_i b_i, with C^(1) == 0.
Certificate casimir_identity_check(const Realization& real);

struct NdSystem {
    int n = 2;
    Expr h;
    std::optional<Expr> i;
    std::vector<Expr> universal; // C^(2)..C^(N-1)
    std::optional<SideRelation> rel;
    bool quasi = false; // no additional integral, only the universal set
};

// Realizes a catalog model at the given spec. Models without an abstract
// integral throw NoIntegral unless allow_quasi is set, in which case the
// system carries only H and the universal chain and is flagged `quasi`.
NdSystem build_nd_model(const ModelInstance& model, const RealizationSpec& spec,
                        bool allow_quasi = false);

} // namespace hh
