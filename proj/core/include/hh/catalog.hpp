#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hh/expr.hpp"
#include "hh/parser.hpp"

namespace hh {

enum class Family { sk, kk, kdv, kdv_mr, holt, generic_hh };

std::string family_name(Family f);

// Parameter bindings: name -> expression text in the symexpr grammar.
// Values may reference other parameters ("Omega" -> "15*delta"); bindings
// are resolved to a fixed point before substitution. Unbound parameters
// stay symbolic.
using ParamBindings = std::map<std::string, std::string>;

// A constructed Hamiltonian family member: abstract sl(2)+h3 form and the
// 2D canonical realization are built independently from their printed
// sources (their consistency is a test, not an assumption).
struct ModelInstance {
    Family family = Family::kdv;
    std::string id;
    std::shared_ptr<SymbolTable> table;
    std::map<Symbol, Expr> bindings;

    Expr abstract_h;
    Expr realized2d_h;
    std::optional<Expr> abstract_i;
    std::optional<Expr> realized2d_i;

    int m_deg = 0, r_deg = 0; // kdv_mr only

    bool has_integral() const { return abstract_i.has_value(); }
};

// Ramani homogeneous potential V_i of degree i, realized in (q1, q2) and
// abstract in (Jm, Am): V_i = sum_k 2^(i-2k) C(i-k, k) q1^(2k) q2^(i-2k).
struct RamaniTable {
    int degree = 0;
    Expr realized; // in q1, q2
    Expr abstract_form; // in Jm, Am
};
RamaniTable ramani(int i, SymbolTable& table);

ModelInstance make_sk(const ParamBindings& params = {});
ModelInstance make_kk(const ParamBindings& params = {});
ModelInstance make_kdv(const ParamBindings& params = {});
// requires m > r >= 0; coefficients a1..aM, g1..gR, lambda
ModelInstance make_kdv_mr(int m, int r, const ParamBindings& params = {});
ModelInstance make_holt();
// integral attached only for the three integrable (beta, Omega) cases
ModelInstance make_generic_hh(const ParamBindings& params = {});

// The rational series of perturbations in Hone's notation: lambda = 2 xi_0,
// gamma_j = 2^(2j+1) xi_j, c = alpha_1, cubic fixed by alpha_3 = 1/8,
// expressed through the combined family with M = max(3, R+1).
ModelInstance make_rational_series(int r, const std::string& c,
                                   const std::vector<std::string>& xi);

// "sk", "kk", "kdv", "kdv-mr:M=4,R=3", "holt", "generic" (+ params)
ModelInstance make_model(const std::string& id, const ParamBindings& params = {});

struct FamilyInfo {
    std::string id;
    std::string description;
    std::vector<std::string> parameters;
    bool has_integral;
    std::string constraint;
};
std::vector<FamilyInfo> catalog_listing();

} // namespace hh
