#pragma once

#include <map>
#include <string>
#include <vector>

#include "hh/expr.hpp"

namespace hh {

// Equations are expressions that must vanish identically in every symbol
// that is not an unknown; each is linear in the unknowns. solve_linear
// splits them by non-unknown monomial into scalar rows and runs exact
// Gauss-Jordan elimination over the rationals.
struct LinearSystem {
    std::vector<Symbol> unknowns;
    std::vector<Expr> equations;
};

struct LinearSolution {
    enum class Kind { unique, inconsistent, underdetermined };
    Kind kind = Kind::unique;
    // particular solution; for underdetermined systems the free unknowns
    // are set to zero
    std::map<Symbol, Rational> values;
    // basis of the homogeneous solution space (one map per basis vector)
    std::vector<std::map<Symbol, Rational>> nullspace;
    std::vector<Symbol> free_unknowns;
    std::size_t rows = 0;

    bool solved() const { return kind != Kind::inconsistent; }
    std::size_t manifold_dim() const { return nullspace.size(); }
};

LinearSolution solve_linear(const LinearSystem& sys);

// Scalar rows: sum_j coeff[j] * unknown[j] + rhs_const == 0.
struct ScalarRow {
    std::vector<Rational> coeff;
    Rational constant;
};
std::vector<ScalarRow> scalarize(const LinearSystem& sys);

} // namespace hh
