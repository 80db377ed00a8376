#include "ofedg/problems.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace ofedg {

namespace {

constexpr double pi = std::numbers::pi;

double wrap(double x, double a, double b) {
    const double len = b - a;
    double y = std::fmod(x - a, len);
    if (y < 0.0) y += len;
    return a + y;
}

double ex3_initial(double x) { return std::abs(x) < 0.5 ? 1.0 : 0.5; }

double ex4_initial(double x) {
    if (x >= 0.3 && x <= 0.425) return 5.0;
    if (x >= 0.575 && x <= 0.7) return 2.5;
    return 0.0;
}

double ex5_initial(double x) {
    if (x >= 0.3 && x <= 0.425) return 4.0;
    if (x >= 0.575 && x <= 0.7) return 2.0;
    return 0.0;
}

double ex7_initial(double x, double y) {
    return (x >= 0.375 && x <= 0.625 && y >= 0.375 && y <= 0.625) ? 0.5 : 0.0;
}

double ex8_initial(double x, double y) {
    if (x >= 0.3 && x <= 0.425 && y >= 0.3 && y <= 0.425) return 0.5;
    if (x >= 0.575 && x <= 0.7 && y >= 0.575 && y <= 0.7) return 0.25;
    return 0.0;
}

double breather(double x, double t) {
    const double k = std::sqrt(0.75);
    return 4.0 * std::atan(k * std::cos(0.5 * t) / (0.5 * std::cosh(k * x)));
}

// d/dz 4 atan(z) = 4 / (1 + z^2)
double breather_dx(double x, double t) {
    const double k = std::sqrt(0.75);
    const double z = k * std::cos(0.5 * t) / (0.5 * std::cosh(k * x));
    const double dz = -z * k * std::tanh(k * x);
    return 4.0 * dz / (1.0 + z * z);
}

double breather_dt(double x, double t) {
    const double k = std::sqrt(0.75);
    const double z = k * std::cos(0.5 * t) / (0.5 * std::cosh(k * x));
    const double dz = -k * 0.5 * std::sin(0.5 * t) / (0.5 * std::cosh(k * x));
    return 4.0 * dz / (1.0 + z * z);
}

std::map<std::string, Problem1D> build_1d() {
    std::map<std::string, Problem1D> out;

    Problem1D ex1;
    ex1.id = "ex1";
    ex1.title = "linear wave, u = sin(pi (x - t)) on (-1, 1)";
    ex1.a = -1.0;
    ex1.b = 1.0;
    ex1.u0 = [](double x) { return std::sin(pi * x); };
    ex1.u1 = [](double x) { return -pi * std::cos(pi * x); };
    ex1.exact = ExactSolution1D{[](double x, double t) { return std::sin(pi * (x - t)); },
                                [](double x, double t) { return pi * std::cos(pi * (x - t)); },
                                [](double x, double t) { return -pi * std::cos(pi * (x - t)); }};
    ex1.default_cells = {20, 40, 80, 160};
    ex1.lower = -1.0;
    ex1.upper = 1.0;
    out[ex1.id] = ex1;

    Problem1D ex2;
    ex2.id = "ex2";
    ex2.title = "sine-Gordon breather u_tt = u_xx - sin u on (-40, 40), Neumann";
    ex2.a = -40.0;
    ex2.b = 40.0;
    ex2.boundary = BoundaryKind::neumann;
    ex2.u0 = [](double x) { return breather(x, 0.0); };
    ex2.u1 = [](double) { return 0.0; };
    ex2.source = "sin:-1";
    ex2.exact = ExactSolution1D{breather, breather_dx, breather_dt};
    ex2.default_cells = {80, 160, 320};
    ex2.lower = 0.0;
    ex2.upper = breather(0.0, 0.0);
    out[ex2.id] = ex2;

    Problem1D ex3;
    ex3.id = "ex3";
    ex3.title = "linear wave, piecewise-constant data 1.0 | 0.5 on (-1, 1)";
    ex3.a = -1.0;
    ex3.b = 1.0;
    ex3.u0 = ex3_initial;
    ex3.u1 = [](double) { return 0.0; };
    ex3.exact = ExactSolution1D{[](double x, double t) { return dalembert(ex3_initial, -1.0, 1.0, x, t); },
                                [](double, double) { return 0.0; }, [](double, double) { return 0.0; }};
    ex3.default_cells = {160};
    ex3.lower = 0.5;
    ex3.upper = 1.0;
    out[ex3.id] = ex3;

    Problem1D ex4;
    ex4.id = "ex4";
    ex4.title = "sine-Gordon u_tt = u_xx + 160 sin u on (0, 1), piecewise data 5 | 2.5";
    ex4.a = 0.0;
    ex4.b = 1.0;
    ex4.u0 = ex4_initial;
    ex4.u1 = [](double) { return 0.0; };
    ex4.source = "sin:160";
    ex4.default_cells = {320};
    ex4.lower = 0.0;
    ex4.upper = 5.0;
    ex4.has_ctcs_comparator = true;
    out[ex4.id] = ex4;

    Problem1D ex5 = ex4;
    ex5.id = "ex5";
    ex5.title = "Klein-Gordon u_tt = u_xx + 4 u^3 on (0, 1), piecewise data 4 | 2";
    ex5.u0 = ex5_initial;
    ex5.source = "cubic:4";
    ex5.upper = 4.0;
    out[ex5.id] = ex5;
    return out;
}

std::map<std::string, Problem2D> build_2d() {
    std::map<std::string, Problem2D> out;

    Problem2D ex6;
    ex6.id = "ex6";
    ex6.title = "2D linear wave, u = sin(x + y + sqrt(2) t) on [-pi, pi]^2";
    ex6.ax = ex6.ay = -pi;
    ex6.bx = ex6.by = pi;
    ex6.u0 = [](double x, double y) { return std::sin(x + y); };
    ex6.u1 = [](double x, double y) { return std::sqrt(2.0) * std::cos(x + y); };
    ex6.exact = ExactSolution2D{[](double x, double y, double t) { return std::sin(x + y + std::sqrt(2.0) * t); }};
    ex6.default_cells = {10, 20, 40};
    ex6.lower = -1.0;
    ex6.upper = 1.0;
    out[ex6.id] = ex6;

    Problem2D ex7;
    ex7.id = "ex7";
    ex7.title = "2D sine-Gordon u_tt = Laplace(u) + 16 sin u on [-1, 1]^2";
    ex7.ax = ex7.ay = -1.0;
    ex7.bx = ex7.by = 1.0;
    ex7.u0 = ex7_initial;
    ex7.u1 = [](double, double) { return 0.0; };
    ex7.source = "sin:16";
    ex7.default_cells = {200};
    ex7.lower = 0.0;
    ex7.upper = 0.5;
    ex7.has_ctcs_comparator = true;
    ex7.line_x0 = -1.0;
    ex7.line_y0 = 0.5;
    ex7.line_dx = 1.0;
    ex7.line_dy = 0.0;
    out[ex7.id] = ex7;

    Problem2D ex8 = ex7;
    ex8.id = "ex8";
    ex8.title = "2D Klein-Gordon u_tt = Laplace(u) + 4 u^3 on [-1, 1]^2";
    ex8.u0 = ex8_initial;
    ex8.source = "cubic:4";
    ex8.default_cells = {320};
    ex8.upper = 0.5;
    // Diagonal through both squares.
    ex8.line_x0 = -1.0;
    ex8.line_y0 = -1.0;
    ex8.line_dx = 1.0;
    ex8.line_dy = 1.0;
    out[ex8.id] = ex8;
    return out;
}

const std::map<std::string, Problem1D>& catalog_1d() {
    static const auto c = build_1d();
    return c;
}

const std::map<std::string, Problem2D>& catalog_2d() {
    static const auto c = build_2d();
    return c;
}

}  // namespace

double dalembert(const ScalarFunction1D& u0, double a, double b, double x, double t) {
    return 0.5 * (u0(wrap(x - t, a, b)) + u0(wrap(x + t, a, b)));
}

const Problem1D& problem_1d(const std::string& id) {
    const auto it = catalog_1d().find(id);
    if (it == catalog_1d().end()) throw std::invalid_argument("unknown 1D problem '" + id + "'");
    return it->second;
}

const Problem2D& problem_2d(const std::string& id) {
    const auto it = catalog_2d().find(id);
    if (it == catalog_2d().end()) throw std::invalid_argument("unknown 2D problem '" + id + "'");
    return it->second;
}

int problem_dimension(const std::string& id) {
    if (catalog_1d().count(id)) return 1;
    if (catalog_2d().count(id)) return 2;
    throw std::invalid_argument("unknown problem '" + id + "'");
}

std::vector<std::string> problem_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, p] : catalog_1d()) ids.push_back(id);
    for (const auto& [id, p] : catalog_2d()) ids.push_back(id);
    return ids;
}

std::string problem_title(const std::string& id) {
    return problem_dimension(id) == 1 ? problem_1d(id).title : problem_2d(id).title;
}

}  // namespace ofedg
