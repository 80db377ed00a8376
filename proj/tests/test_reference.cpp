#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ofedg/diagnostics.hpp"
#include "ofedg/reference.hpp"
#include "ofedg/timeint.hpp"

using namespace ofedg;

namespace {

constexpr double kPi = std::numbers::pi;

double ctcs_error_1d(int m) {
    const auto g = make_fd_grid_1d(-1.0, 1.0, m);
    const auto u = ctcs_solve_1d([](double x) { return std::sin(kPi * x); },
                                 [](double x) { return -kPi * std::cos(kPi * x); }, no_source(), g, 0.25);
    double e = 0.0;
    for (int i = 0; i < g.points(); ++i) e = std::max(e, std::abs(u[i] - std::sin(kPi * (g.x(i) - 0.25))));
    return e;
}

double ctcs_error_2d(int m) {
    const auto g = make_fd_grid_2d(-kPi, kPi, -kPi, kPi, m, m);
    const double w = std::sqrt(2.0);
    const auto u = ctcs_solve_2d([](double x, double y) { return std::sin(x + y); },
                                 [w](double x, double y) { return w * std::cos(x + y); }, no_source(), g, 0.25);
    double e = 0.0;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) e = std::max(e, std::abs(u[j * m + i] - std::sin(g.x(i) + g.y(j) + w * 0.25)));
    return e;
}

}  // namespace

TEST(Ctcs, GridGeometry) {
    const auto p = make_fd_grid_1d(0.0, 1.0, 1000);
    EXPECT_EQ(p.points(), 1000);
    EXPECT_NEAR(p.dt, 0.0005, 1e-18);
    const auto n = make_fd_grid_1d(0.0, 1.0, 1000, BoundaryKind::neumann);
    EXPECT_EQ(n.points(), 1001);
    EXPECT_EQ(n.x(1000), 1.0);
    const auto g = make_fd_grid_2d(0, 1, 0, 2, 10, 10);
    EXPECT_NEAR(g.dt, 0.05 / std::sqrt(2.0), 1e-16);
    EXPECT_THROW(make_fd_grid_1d(0.0, 1.0, 1), std::invalid_argument);
    EXPECT_THROW(make_fd_grid_2d(0, 1, 0, 1, 1, 5), std::invalid_argument);
}

TEST(Ctcs, RejectsCflViolation) {
    auto g = make_fd_grid_1d(0.0, 1.0, 10);
    g.dt = 2.0 * g.dx();
    EXPECT_THROW(ctcs_solve_1d([](double) { return 0.0; }, [](double) { return 0.0; }, no_source(), g, 1.0),
                 std::invalid_argument);
}

TEST(Ctcs, ConstantAndZeroData) {
    for (auto bc : {BoundaryKind::periodic, BoundaryKind::neumann}) {
        const auto g = make_fd_grid_1d(0.0, 1.0, 40, bc);
        const auto u = ctcs_solve_1d([](double) { return 0.7; }, [](double) { return 0.0; }, no_source(), g, 3.0);
        for (double x : u) EXPECT_NEAR(x, 0.7, 1e-14);
    }
    const auto g2 = make_fd_grid_2d(0, 1, 0, 1, 8, 8);
    const auto z = ctcs_solve_2d([](double, double) { return 0.0; }, [](double, double) { return 0.0; }, no_source(),
                                 g2, 1.0);
    for (double x : z) EXPECT_EQ(x, 0.0);
}

TEST(Ctcs, SecondOrder1D) {
    ConvergenceTable t;
    for (int m : {50, 100, 200, 400}) t.rows.push_back({m, 2.0 / m, ctcs_error_1d(m)});
    EXPECT_NEAR(fit_rates(t).least_squares, 2.0, 0.2);
}

TEST(Ctcs, SecondOrder2D) {
    ConvergenceTable t;
    for (int m : {25, 50, 100}) t.rows.push_back({m, 2 * kPi / m, ctcs_error_2d(m)});
    EXPECT_NEAR(fit_rates(t).least_squares, 2.0, 0.2);
}

TEST(Ctcs, NeumannStandingWave) {
    auto err = [](int m) {
        const auto g = make_fd_grid_1d(0.0, 1.0, m, BoundaryKind::neumann);
        const auto u = ctcs_solve_1d([](double x) { return std::cos(kPi * x); }, [](double) { return 0.0; },
                                     no_source(), g, 0.5);
        double e = 0.0;
        for (int i = 0; i < g.points(); ++i)
            e = std::max(e, std::abs(u[i] - std::cos(kPi * g.x(i)) * std::cos(kPi * 0.5)));
        return e;
    };
    EXPECT_LT(err(200), 1e-4);
    EXPECT_NEAR(std::log2(err(100) / err(200)), 2.0, 0.2);
}

TEST(Ctcs, SpatiallyUniformSourceFollowsOde) {
    // u'' = -sin(u) for constant data: compare with a fine Runge-Kutta solution.
    const auto g = make_fd_grid_1d(0.0, 1.0, 100);
    const auto u = ctcs_solve_1d([](double) { return 1.0; }, [](double) { return 0.0; }, sine_source(-1.0), g, 1.0);
    double y = 1.0, z = 0.0;
    const int steps = 20000;
    const double dt = 1.0 / steps;
    for (int n = 0; n < steps; ++n) {
        auto f = [](double a, double b) { return std::pair{b, -std::sin(a)}; };
        const auto k1 = f(y, z);
        const auto k2 = f(y + 0.5 * dt * k1.first, z + 0.5 * dt * k1.second);
        const auto k3 = f(y + 0.5 * dt * k2.first, z + 0.5 * dt * k2.second);
        const auto k4 = f(y + dt * k3.first, z + dt * k3.second);
        y += dt / 6 * (k1.first + 2 * k2.first + 2 * k3.first + k4.first);
        z += dt / 6 * (k1.second + 2 * k2.second + 2 * k3.second + k4.second);
    }
    for (double x : u) EXPECT_NEAR(x, y, 1e-4);
}
