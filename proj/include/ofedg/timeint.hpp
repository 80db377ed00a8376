#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofedg {

/// dt = h^e / 20 with e = 1, 4/3, 5/3, 2, 7/3 for p = 2..6.
double dt_rule(int p, double h);

/// Fixed-step plan that lands on T; the last step is shortened when needed.
struct TimePlan {
    double dt = 0.0;
    double final_time = 0.0;
    long steps = 0;
    std::string rule;

    double step_size(long n) const;
};

TimePlan make_time_plan(double final_time, double dt, std::string rule = "explicit");

struct EnergyTrace {
    std::vector<double> times;
    std::vector<double> energy;
    /// (1/2) int (v^2 + u_x^2) + int G(u); empty for linear runs.
    std::vector<double> nonlinear_energy;
};

class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, long step) : std::runtime_error(what), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

/// One SSP-RK3 step. State must support `a + b` and `double * a`.
template <class State, class Rhs>
State ssp_rk3_step(const State& u, Rhs&& rhs, double dt) {
    const State u1 = u + dt * rhs(u);
    const State u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
    return (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
}

inline double max_abs(double x) { return std::abs(x); }
inline bool all_finite(double x) { return std::isfinite(x); }

struct IntegrateOptions {
    /// Record energy every `sample_every` steps (the final state is always recorded).
    long sample_every = 1;
    double blowup_threshold = 1e12;
};

/// Advances `state` along `plan`. `energy` may return one value (linear) or
/// be paired with `nonlinear_energy`; pass empty functions to skip sampling.
template <class State, class Rhs>
State integrate(State state, Rhs&& rhs, const TimePlan& plan, EnergyTrace* trace,
                const std::function<double(const State&)>& energy = {},
                const std::function<double(const State&)>& nonlinear_energy = {},
                const IntegrateOptions& options = {}) {
    double t = 0.0;
    auto record = [&](const State& s) {
        if (!trace) return;
        trace->times.push_back(t);
        if (energy) trace->energy.push_back(energy(s));
        if (nonlinear_energy) trace->nonlinear_energy.push_back(nonlinear_energy(s));
    };
    record(state);
    for (long n = 0; n < plan.steps; ++n) {
        const double dt = plan.step_size(n);
        state = ssp_rk3_step(state, rhs, dt);
        t = (n + 1 == plan.steps) ? plan.final_time : t + dt;
        using ofedg::all_finite;
        using ofedg::max_abs;
        if (!all_finite(state)) throw SolverAbort("non-finite state at step " + std::to_string(n + 1), n + 1);
        if (max_abs(state) > options.blowup_threshold) {
            throw SolverAbort("blow-up detected at step " + std::to_string(n + 1), n + 1);
        }
        if ((n + 1) % options.sample_every == 0 || n + 1 == plan.steps) record(state);
    }
    return state;
}

}  // namespace ofedg
