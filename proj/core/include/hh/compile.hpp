#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/expr.hpp"

namespace hh {

// Flattened numeric form of an expression over the state slots
// q1..qN -> 0..N-1, p1..pN -> N..2N-1, auxiliary inverse -> slot 2N.
// Built once from exact expressions; no numeric differentiation anywhere.
class CompiledScalar {
  public:
    CompiledScalar() = default;
    CompiledScalar(const Expr& e, int n, SymbolTable& table,
                   const std::optional<SideRelation>& rel);

    // x has 2n entries; aux (when present) is the precomputed inverse value
    double eval(const double* x, double aux) const;
    bool uses_aux() const { return uses_aux_; }
    bool pure_q() const { return pure_q_; }
    bool pure_p() const { return pure_p_; }

    struct Term {
        double coeff;
        std::vector<std::pair<int, long>> ipows;   // integer exponents
        std::vector<std::pair<int, double>> fpows; // fractional exponents
        long aux_pow = 0;
    };
    const std::vector<Term>& terms() const { return terms_; }

  private:
    std::vector<Term> terms_;
    bool uses_aux_ = false;
    bool pure_q_ = true;
    bool pure_p_ = true;
};

struct Guard {
    enum class Kind { abs_min, positive, denom_abs_min };
    Kind kind;
    int slot; // state slot for abs_min/positive
    std::string what;
};

// Hamiltonian compiled with its exact symbolic gradient and singularity
// guards. Separable (T(p) + V(q)) Hamiltonians additionally expose the
// split needed by the symplectic stepper.
class CompiledField {
  public:
    CompiledField(const Expr& h, int n, SymbolTable& table,
                  std::optional<SideRelation> rel = std::nullopt);

    int n() const { return n_; }
    bool separable() const { return separable_; }
    bool has_aux() const { return static_cast<bool>(rel_); }

    double aux_value(const double* x) const; // 1/denom(x), 0 when unused
    double hamiltonian(const double* x) const;
    // dq_i/dt = dH/dp_i, dp_i/dt = -dH/dq_i
    void rhs(const double* x, double* dxdt) const;
    void grad_q(const double* x, double* out) const; // dH/dq_i
    void grad_p(const double* x, double* out) const; // dH/dp_i

    // smallest guard margin at x (negative or tiny means near-singular)
    double guard_margin(const double* x) const;
    const std::vector<Guard>& guards() const { return guards_; }

  private:
    int n_;
    std::optional<SideRelation> rel_;
    CompiledScalar h_;
    CompiledScalar denom_;
    std::vector<CompiledScalar> dq_, dp_;
    std::vector<Guard> guards_;
    bool separable_ = false;
};

// compile a conserved-quantity monitor over the same slot layout
struct Monitor {
    std::string name;
    CompiledScalar scalar;
};

CompiledScalar compile_scalar(const Expr& e, int n, SymbolTable& table,
                              const std::optional<SideRelation>& rel);

} // namespace hh
