#include "ofedg/timeint.hpp"

namespace ofedg {

double dt_rule(int p, double h) {
    static constexpr double exponents[] = {1.0, 4.0 / 3.0, 5.0 / 3.0, 2.0, 7.0 / 3.0};
    if (p < 2 || p > 6) {
        throw std::invalid_argument("dt_rule: no default time step for p = " + std::to_string(p) +
                                    "; set dt explicitly");
    }
    if (!(h > 0.0)) throw std::invalid_argument("dt_rule: h must be positive");
    return std::pow(h, exponents[p - 2]) / 20.0;
}

double TimePlan::step_size(long n) const {
    if (n + 1 < steps) return dt;
    return final_time - dt * static_cast<double>(steps - 1);
}

TimePlan make_time_plan(double final_time, double dt, std::string rule) {
    if (!(final_time > 0.0)) throw std::invalid_argument("final time must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    TimePlan plan;
    plan.dt = dt;
    plan.final_time = final_time;
    plan.rule = std::move(rule);
    plan.steps = static_cast<long>(std::ceil(final_time / dt - 1e-12));
    if (plan.steps < 1) plan.steps = 1;
    return plan;
}

}  // namespace ofedg
