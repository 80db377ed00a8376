#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ofedg/field.hpp"
#include "ofedg/mesh.hpp"
#include "ofedg/source.hpp"

namespace ofedg {

/// Exact solution u(x, t) with its x- and t-derivatives.
struct ExactSolution1D {
    std::function<double(double, double)> u;
    std::function<double(double, double)> u_x;
    std::function<double(double, double)> u_t;
};

struct ExactSolution2D {
    std::function<double(double, double, double)> u;
};

struct Problem1D {
    std::string id;
    std::string title;
    double a = 0.0;
    double b = 1.0;
    BoundaryKind boundary = BoundaryKind::periodic;
    ScalarFunction1D u0;
    ScalarFunction1D u1;
    std::string source = "none";
    std::optional<ExactSolution1D> exact;
    double final_time = 0.25;
    std::vector<int> default_cells;
    /// Range of the exact or limit solution, used by oscillation metrics.
    double lower = 0.0;
    double upper = 0.0;
    bool has_ctcs_comparator = false;
};

struct Problem2D {
    std::string id;
    std::string title;
    double ax = 0.0, bx = 1.0, ay = 0.0, by = 1.0;
    ScalarFunction2D u0;
    ScalarFunction2D u1;
    std::string source = "none";
    std::optional<ExactSolution2D> exact;
    double final_time = 0.25;
    std::vector<int> default_cells;
    double lower = 0.0;
    double upper = 0.0;
    bool has_ctcs_comparator = false;
    /// Line used to extract 1D fronts: points (x0, y0) + s (dx, dy).
    double line_x0 = 0.0, line_y0 = 0.0, line_dx = 1.0, line_dy = 0.0;
};

/// "ex1".."ex5".
const Problem1D& problem_1d(const std::string& id);
/// "ex6".."ex8".
const Problem2D& problem_2d(const std::string& id);
/// 1 or 2; throws std::invalid_argument for unknown ids.
int problem_dimension(const std::string& id);
std::vector<std::string> problem_ids();
std::string problem_title(const std::string& id);

/// Periodic d'Alembert solution (u0(x - t) + u0(x + t)) / 2 on (a, b) for u_t(x, 0) = 0.
double dalembert(const ScalarFunction1D& u0, double a, double b, double x, double t);

}  // namespace ofedg
