#include "hh/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace hh {

std::string status_name(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::singular: return "singular";
        case RunStatus::blowup: return "blowup";
    }
    return "?";
}

double Trajectory::max_drift(std::size_t monitor) const {
    double m = 0.0;
    for (double v : drift[monitor]) m = std::max(m, v);
    return m;
}

void sv_step(const CompiledField& field, std::vector<double>& x, double dt,
             std::vector<double>& scratch) {
    const int n = field.n();
    scratch.resize(n);
    // kick
    field.grad_q(x.data(), scratch.data());
    for (int i = 0; i < n; ++i) x[n + i] -= 0.5 * dt * scratch[i];
    // drift
    field.grad_p(x.data(), scratch.data());
    for (int i = 0; i < n; ++i) x[i] += dt * scratch[i];
    // kick
    field.grad_q(x.data(), scratch.data());
    for (int i = 0; i < n; ++i) x[n + i] -= 0.5 * dt * scratch[i];
}

namespace {

constexpr double k_blowup = 1e12;

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Recorder {
    const std::vector<Monitor>& monitors;
    const CompiledField& field;
    Trajectory& traj;
    std::vector<double> f0;

    void record(double t, const std::vector<double>& x) {
        double aux = field.aux_value(x.data());
        if (traj.times.empty()) {
            for (const auto& m : monitors) f0.push_back(m.scalar.eval(x.data(), aux));
            traj.drift.assign(monitors.size(), {});
        }
        traj.times.push_back(t);
        traj.states.push_back(x);
        for (std::size_t j = 0; j < monitors.size(); ++j) {
            double v = monitors[j].scalar.eval(x.data(), aux);
            traj.drift[j].push_back(std::fabs(v - f0[j]) / std::max(1.0, std::fabs(f0[j])));
        }
    }
};

bool state_ok(const std::vector<double>& x) {
    for (double v : x)
        if (!std::isfinite(v) || std::fabs(v) > k_blowup) return false;
    return true;
}

} // namespace

Trajectory integrate(const CompiledField& field, const std::vector<double>& x0, double T,
                     const StepPolicy& policy, const std::vector<Monitor>& monitors) {
    const int n = field.n();
    if (static_cast<int>(x0.size()) != 2 * n)
        throw ConfigError("x0 needs " + std::to_string(2 * n) + " components");

    Trajectory traj;
    traj.n = n;
    for (const auto& m : monitors) traj.monitor_names.push_back(m.name);
    Recorder rec{monitors, field, traj, {}};

    std::vector<double> x = x0;
    if (field.guard_margin(x.data()) <= 0.0) {
        traj.status = RunStatus::singular;
        rec.record(0.0, x);
        return traj;
    }
    rec.record(0.0, x);

    const double dir = T >= 0 ? 1.0 : -1.0;
    const double t_end = T;

    if (policy.method == Integrator::stormer_verlet) {
        if (!field.separable())
            throw ConfigError("stormer-verlet requires a separable Hamiltonian");
        const double dt = dir * std::fabs(policy.dt);
        const long nsteps = std::lround(std::fabs(T) / std::fabs(policy.dt));
        std::vector<double> scratch;
        for (long k = 1; k <= nsteps; ++k) {
            sv_step(field, x, dt, scratch);
            if (!state_ok(x)) {
                traj.status = RunStatus::blowup;
                break;
            }
            if (field.guard_margin(x.data()) <= 0.0) {
                traj.status = RunStatus::singular;
                rec.record(k * dt, x);
                break;
            }
            if (k % policy.sample_stride == 0 || k == nsteps) rec.record(k * dt, x);
        }
        return traj;
    }

    // adaptive Dormand-Prince 5(4)
    const std::size_t dim = x.size();
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim),
        xt(dim), xe(dim);
    double t = 0.0;
    double h = dir * std::fabs(policy.dt);
    field.rhs(x.data(), k1.data());
    long accepted = 0;
    while (dir * (t_end - t) > 1e-15 * std::max(1.0, std::fabs(t_end))) {
        if (dir * (t + h - t_end) > 0) h = t_end - t;
        auto stage = [&](std::vector<double>& out, std::initializer_list<std::pair<const std::vector<double>*, double>> terms) {
            for (std::size_t i = 0; i < dim; ++i) {
                double acc = x[i];
                for (const auto& [kv, cf] : terms) acc += h * cf * (*kv)[i];
                out[i] = acc;
            }
        };
        stage(xt, {{&k1, a21}});
        field.rhs(xt.data(), k2.data());
        stage(xt, {{&k1, a31}, {&k2, a32}});
        field.rhs(xt.data(), k3.data());
        stage(xt, {{&k1, a41}, {&k2, a42}, {&k3, a43}});
        field.rhs(xt.data(), k4.data());
        stage(xt, {{&k1, a51}, {&k2, a52}, {&k3, a53}, {&k4, a54}});
        field.rhs(xt.data(), k5.data());
        stage(xt, {{&k1, a61}, {&k2, a62}, {&k3, a63}, {&k4, a64}, {&k5, a65}});
        field.rhs(xt.data(), k6.data());
        stage(xe, {{&k1, b1}, {&k3, b3}, {&k4, b4}, {&k5, b5}, {&k6, b6}});
        field.rhs(xe.data(), k7.data());

        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double E = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
            double scale = policy.abs_tol +
                           policy.rel_tol * std::max(std::fabs(x[i]), std::fabs(xe[i]));
            err = std::max(err, std::fabs(E) / scale);
        }
        if (err <= 1.0) {
            t += h;
            x = xe;
            k1 = k7; // FSAL
            if (!state_ok(x)) {
                traj.status = RunStatus::blowup;
                break;
            }
            if (field.guard_margin(x.data()) <= 0.0) {
                traj.status = RunStatus::singular;
                rec.record(t, x);
                break;
            }
            ++accepted;
            if (accepted % policy.sample_stride == 0) rec.record(t, x);
        }
        double fac = 0.9 * std::pow(err > 0 ? 1.0 / err : 1e4, 0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::fabs(h) < 1e-14) {
            traj.status = RunStatus::singular;
            break;
        }
    }
    if (traj.status == RunStatus::completed && !traj.times.empty() &&
        traj.times.back() != t && state_ok(x))
        rec.record(t, x);
    return traj;
}

} // namespace hh
