#include <cmath>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ofedg/diagnostics.hpp"
#include "ofedg/timeint.hpp"

using namespace ofedg;

namespace osc {

struct State {
    double y = 0.0;
    double z = 0.0;
};

State operator+(const State& a, const State& b) { return {a.y + b.y, a.z + b.z}; }
State operator*(double s, const State& a) { return {s * a.y, s * a.z}; }
double max_abs(const State& s) { return std::max(std::abs(s.y), std::abs(s.z)); }
bool all_finite(const State& s) { return std::isfinite(s.y) && std::isfinite(s.z); }

}  // namespace osc

TEST(DtRule, SpecValues) {
    EXPECT_NEAR(dt_rule(2, 0.1), 0.005, 1e-17);
    EXPECT_NEAR(dt_rule(5, 0.1), 0.0005, 1e-17);
    EXPECT_NEAR(dt_rule(3, 1.0), 0.05, 1e-17);
    EXPECT_NEAR(dt_rule(4, 0.5), std::pow(0.5, 5.0 / 3.0) / 20, 1e-17);
    EXPECT_NEAR(dt_rule(6, 0.5), std::pow(0.5, 7.0 / 3.0) / 20, 1e-17);
    EXPECT_THROW(dt_rule(7, 0.1), std::invalid_argument);
    EXPECT_THROW(dt_rule(1, 0.1), std::invalid_argument);
    EXPECT_THROW(dt_rule(2, 0.0), std::invalid_argument);
}

TEST(TimePlan, LandsOnFinalTime) {
    const auto p = make_time_plan(0.25, 0.03);
    EXPECT_EQ(p.steps, 9);
    double t = 0.0;
    for (long n = 0; n < p.steps; ++n) {
        EXPECT_GT(p.step_size(n), 0.0);
        EXPECT_LE(p.step_size(n), 0.03 + 1e-15);
        t += p.step_size(n);
    }
    EXPECT_NEAR(t, 0.25, 1e-15);
    const auto exact = make_time_plan(0.25, 0.0125);
    EXPECT_EQ(exact.steps, 20);
    EXPECT_NEAR(exact.step_size(19), 0.0125, 1e-15);
    EXPECT_THROW(make_time_plan(0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(make_time_plan(1.0, -0.1), std::invalid_argument);
}

TEST(SspRk3, ZeroOperatorIsIdentity) {
    const double y = ssp_rk3_step(2.5, [](double) { return 0.0; }, 0.1);
    EXPECT_EQ(y, 2.5);
}

TEST(SspRk3, StabilityPolynomial) {
    const double y = ssp_rk3_step(1.0, [](double u) { return -u; }, 0.1);
    EXPECT_NEAR(y, 1.0 - 0.1 + 0.005 - 0.001 / 6.0, 1e-16);
}

TEST(SspRk3, ThirdOrderOnOscillator) {
    ConvergenceTable table;
    for (int k = 0; k < 4; ++k) {
        const double dt = 0.1 / (1 << k);
        const auto plan = make_time_plan(2.0, dt);
        const auto end = integrate(osc::State{1.0, 0.0}, [](const osc::State& s) { return osc::State{s.z, -s.y}; },
                                   plan, nullptr);
        table.rows.push_back({1 << k, dt, std::hypot(end.y - std::cos(2.0), end.z + std::sin(2.0))});
    }
    EXPECT_NEAR(fit_rates(table).least_squares, 3.0, 0.1);
}

TEST(Integrate, RecordsEnergySamples) {
    EnergyTrace trace;
    const auto plan = make_time_plan(1.0, 0.1);
    IntegrateOptions opts;
    opts.sample_every = 3;
    integrate(
        osc::State{1.0, 0.0}, [](const osc::State& s) { return osc::State{s.z, -s.y}; }, plan, &trace,
        std::function<double(const osc::State&)>([](const osc::State& s) { return s.y * s.y + s.z * s.z; }), {}, opts);
    // t = 0, steps 3, 6, 9 and the final step 10.
    ASSERT_EQ(trace.times.size(), 5u);
    EXPECT_EQ(trace.times.front(), 0.0);
    EXPECT_EQ(trace.times.back(), 1.0);
    EXPECT_EQ(trace.energy.size(), 5u);
    EXPECT_TRUE(trace.nonlinear_energy.empty());
    for (double e : trace.energy) EXPECT_NEAR(e, 1.0, 1e-3);
}

TEST(Integrate, AbortsOnBlowUpAndNaN) {
    const auto plan = make_time_plan(10.0, 0.5);
    try {
        integrate(1.0, [](double u) { return 50.0 * u; }, plan, nullptr);
        FAIL() << "expected SolverAbort";
    } catch (const SolverAbort& e) {
        EXPECT_GT(e.step(), 0);
        EXPECT_NE(std::string(e.what()).find("blow-up"), std::string::npos);
    }
    try {
        integrate(1.0, [](double) { return std::numeric_limits<double>::quiet_NaN(); }, plan, nullptr);
        FAIL() << "expected SolverAbort";
    } catch (const SolverAbort& e) {
        EXPECT_EQ(e.step(), 1);
        EXPECT_NE(std::string(e.what()).find("non-finite"), std::string::npos);
    }
}
