#pragma once

#include <string>
#include <vector>

#include "hh/compile.hpp"

namespace hh {

enum class Integrator { stormer_verlet, rk45 };

struct StepPolicy {
    Integrator method = Integrator::stormer_verlet;
    double dt = 1e-3;        // fixed step (stormer_verlet)
    double rel_tol = 1e-10;  // rk45
    double abs_tol = 1e-12;  // rk45
    int sample_stride = 1;   // keep every k-th step
};

enum class RunStatus { completed, singular, blowup };
std::string status_name(RunStatus s);

struct Trajectory {
    std::vector<double> times;               // strictly increasing
    std::vector<std::vector<double>> states; // 2N each
    std::vector<std::string> monitor_names;  // H, I, C2..
    // drift[j][k] = |F_j(t_k) - F_j(0)| / max(1, |F_j(0)|)
    std::vector<std::vector<double>> drift;
    RunStatus status = RunStatus::completed;
    int n = 0;

    double max_drift(std::size_t monitor) const;
};

// Integrates Hamilton's equations for `field` from x0 over [0, T].
// Duration may be negative (time-reversed run). Monitors are sampled on the
// stored states. Runs end early with `singular` when a guard margin drops
// below zero and `blowup` when the state norm exceeds 1e12.
Trajectory integrate(const CompiledField& field, const std::vector<double>& x0, double T,
                     const StepPolicy& policy, const std::vector<Monitor>& monitors = {});

// One Stormer-Verlet step (kick-drift-kick); exposed for reversibility tests.
void sv_step(const CompiledField& field, std::vector<double>& x, double dt,
             std::vector<double>& scratch);

} // namespace hh
