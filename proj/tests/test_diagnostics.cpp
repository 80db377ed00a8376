#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ofedg/diagnostics.hpp"

using namespace ofedg;

TEST(L2Error, SpecValues) {
    auto mesh = std::make_shared<const Mesh1D>(uniform_mesh_1d(-1.0, 1.0, 3));
    auto poly = [](double x) { return 1.0 + x - 3.0 * x * x; };
    EXPECT_LE(l2_error(project_initial(poly, mesh, 2), poly), 1e-12);
    DGField1D zero(std::make_shared<const Mesh1D>(uniform_mesh_1d(-1.0, 1.0, 1)), 2);
    EXPECT_NEAR(l2_error(zero, [](double) { return 1.0; }), std::sqrt(2.0), 1e-15);
}

TEST(L2Error, TwoDimensional) {
    auto mesh = std::make_shared<const Mesh2D>(cartesian_mesh_2d(0, 2, 0, 1, 3, 2));
    auto poly = [](double x, double y) { return x * y - y * y; };
    EXPECT_LE(l2_error(project_initial_2d(poly, mesh, 2), poly), 1e-12);
    DGField2D zero(mesh, 1);
    EXPECT_NEAR(l2_error(zero, [](double, double) { return 1.0; }), std::sqrt(2.0), 1e-14);
}

TEST(L2Error, ProjectionRatesOfSine) {
    auto e = [](int n) {
        auto mesh = std::make_shared<const Mesh1D>(uniform_mesh_1d(-1.0, 1.0, n));
        auto f = [](double x) { return std::sin(std::numbers::pi * x); };
        return l2_error(project_initial(f, mesh, 2), f);
    };
    EXPECT_NEAR(e(20) / e(40), 8.0, 0.3);
}

TEST(H1Semi, ExactForPolynomials) {
    auto mesh = std::make_shared<const Mesh1D>(uniform_mesh_1d(0.0, 1.0, 4));
    const auto f = project_initial([](double x) { return x * x; }, mesh, 2);
    EXPECT_LE(h1_semi_error(f, [](double x) { return 2 * x; }), 1e-12);
}

TEST(FitRates, SpecValues) {
    ConvergenceTable two{{{10, 0.1, 1e-2}, {20, 0.05, 1.25e-3}}};
    EXPECT_NEAR(fit_rates(two).pairwise[0], 3.0, 1e-12);
    EXPECT_NEAR(fit_rates(two).least_squares, 3.0, 1e-12);
    ConvergenceTable flat{{{10, 0.1, 1e-3}, {20, 0.05, 1e-3}}};
    EXPECT_NEAR(fit_rates(flat).least_squares, 0.0, 1e-12);
    ConvergenceTable three;
    for (double h : {0.1, 0.05, 0.025}) three.rows.push_back({0, h, 7.0 * h * h * h});
    EXPECT_NEAR(fit_rates(three).least_squares, 3.0, 1e-12);
}

TEST(FitRates, SaturatedAndErrors) {
    ConvergenceTable z{{{10, 0.1, 1e-3}, {20, 0.05, 0.0}}};
    const auto f = fit_rates(z);
    EXPECT_TRUE(f.saturated);
    EXPECT_TRUE(std::isnan(f.pairwise[0]));
    EXPECT_TRUE(std::isnan(f.least_squares));
    EXPECT_THROW(fit_rates(ConvergenceTable{{{10, 0.1, 1.0}}}), std::invalid_argument);
}

TEST(ConvergenceCsv, Columns) {
    ConvergenceTable t{{{20, 0.1, 1e-2}, {40, 0.05, 1.25e-3}}};
    std::ostringstream os;
    write_convergence_csv(os, t);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "N,h,error,slope");
    std::getline(is, line);
    EXPECT_EQ(line.back(), ',');
    EXPECT_EQ(line.substr(0, 3), "20,");
    std::getline(is, line);
    EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), 3.0, 1e-12);
}

TEST(Oscillation, SpecValues) {
    const auto in = oscillation_metrics({0.5, 0.7, 1.0, 0.6}, 0.5, 1.0);
    EXPECT_EQ(in.overshoot, 0.0);
    EXPECT_EQ(in.undershoot, 0.0);
    EXPECT_NEAR(in.total_variation, 0.2 + 0.3 + 0.4, 1e-15);
    const auto over = oscillation_metrics({0.9, 1.05, 0.8}, 0.5, 1.0);
    EXPECT_NEAR(over.overshoot, 0.05, 1e-15);
    const auto under = oscillation_metrics({0.45, 0.8}, 0.5, 1.0);
    EXPECT_NEAR(under.undershoot, 0.05, 1e-15);
}

TEST(Fronts, LevelCrossings) {
    const std::vector<double> x{0, 1, 2, 3, 4};
    const std::vector<double> y{0, 0, 2, 2, 0};
    const auto c = level_crossings(x, y, 1.0);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_DOUBLE_EQ(c[0], 1.5);
    EXPECT_DOUBLE_EQ(c[1], 3.5);
    EXPECT_TRUE(level_crossings(x, y, 5.0).empty());
    EXPECT_THROW(level_crossings(x, {1.0}, 0.0), std::invalid_argument);
}

TEST(Fronts, Match) {
    EXPECT_TRUE(fronts_match({0.1, 0.5}, {0.12, 0.49}, 0.03));
    EXPECT_FALSE(fronts_match({0.1, 0.5}, {0.2, 0.5}, 0.03));
    EXPECT_FALSE(fronts_match({0.1}, {0.1, 0.5}, 0.03));
    EXPECT_TRUE(fronts_match({}, {}, 0.0));
}
