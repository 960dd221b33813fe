#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hh/expr.hpp"
#include "hh/symbol.hpp"

namespace hh {

enum class BracketMode { canonical, abstract };

// Structure constants of sl(2,R) + h3: {J3,Jp}=2Jp, {J3,Jm}=-2Jm,
// {Jm,Jp}=4J3, {Am,Ap}=M; all cross-brackets vanish. Antisymmetry is
// encoded once (pairs are stored in one orientation).
struct StructureTable {
    struct Entry {
        Symbol x, y;
        Expr bracket; // {x, y}
    };
    std::vector<Entry> entries;

    static StructureTable standard(SymbolTable& table);
};

// Everything a bracket evaluation needs: the mode, the symbol table, the
// canonical dimension, and (canonical mode) any auxiliary-inverse side
// relation in force.
class BracketContext {
  public:
    static BracketContext canonical(SymbolTable& table, int n,
                                    std::optional<SideRelation> rel = std::nullopt);
    static BracketContext abstract(SymbolTable& table);

    BracketMode mode() const { return mode_; }
    int n() const { return n_; }
    SymbolTable& table() const { return *table_; }
    const std::optional<SideRelation>& relation() const { return rel_; }
    const StructureTable& structure() const { return structure_; }

  private:
    BracketMode mode_ = BracketMode::canonical;
    int n_ = 0;
    SymbolTable* table_ = nullptr;
    std::optional<SideRelation> rel_;
    StructureTable structure_;
};

// Exact Poisson bracket. Canonical: {f,g} = sum_i df/dq_i dg/dp_i -
// df/dp_i dg/dq_i. Abstract: Leibniz extension of the structure table.
Expr bracket(const Expr& f, const Expr& g, const BracketContext& ctx);

// [M, Jp*Jm - J3^2]; abstract mode only.
std::vector<Expr> casimirs(const BracketContext& ctx);
Expr sl2_casimir(SymbolTable& table);

struct Certificate {
    bool zero;
    Expr residual; // normalized residual (empty when zero)
    std::string label;
};

// Exact involution certificate. The residual is normalized to the leaf the
// realizations live on: abstract mode substitutes the central generator
// M -> 1; canonical mode reduces modulo the side relation when present.
Certificate certify_involution(const Expr& h, const Expr& i, const BracketContext& ctx,
                               const std::string& label = "");

} // namespace hh
