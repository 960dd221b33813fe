#pragma once

#include <string>
#include <vector>

#include "hh/linsolve.hpp"
#include "hh/poisson.hpp"

namespace hh {

// One (q1,p1)-block of the lift: the canonical monomial it reproduces and
// the generator words with their solved coefficients.
struct LiftBlock {
    std::string canonical; // printed canonical monomial (coefficient included)
    std::vector<std::pair<std::string, Rational>> words;
    bool zero_sum; // block absent from the 2D integral (kernel of the realization)
};

struct LiftResult {
    Expr h_abstract;
    Expr i_abstract;
    LinearSystem system;
    LinearSolution solution;
    std::vector<LiftBlock> blocks;
    Certificate involution;    // exact certificate for the lifted pair
    bool realization_matches;  // N=2 realization of i_abstract reproduces i2
};

// Rewrites a 2D canonical pair (h2, i2) over (q1,p1,q2,p2) as functions of
// the sl(2)+h3 generators: (q2,p2) -> (Am,Ap) directly; each monomial
// q1^a p1^b expands into all generator words Jp^x Jm^y J3^z with 2x+z=b,
// 2y+z=a (Laurent in Jm exactly when a<0). Ambiguous blocks get unknown
// coefficients fixed by imposing {H,I}=0; blocks lost to C_sl2-kernel
// cancellation are recovered from a weight-pruned candidate closure.
// Throws NotLiftable when a monomial admits no block decomposition.
LiftResult lift_to_abstract(const Expr& h2, const Expr& i2, SymbolTable& table);

std::string lift_report(const LiftResult& r);

} // namespace hh
