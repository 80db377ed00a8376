#pragma once

#include <vector>

#include "ofedg/field.hpp"
#include "ofedg/mesh.hpp"
#include "ofedg/source.hpp"

namespace ofedg {

/// Uniform finite-difference grid for the CTCS comparator.
/// Periodic grids hold M points x_i = a + i dx (i < M); Neumann grids hold
/// M + 1 points including both ends.
struct FDGrid1D {
    double a = 0.0;
    double b = 1.0;
    int intervals = 0;
    double dt = 0.0;
    BoundaryKind boundary = BoundaryKind::periodic;

    double dx() const { return (b - a) / intervals; }
    int points() const { return boundary == BoundaryKind::periodic ? intervals : intervals + 1; }
    double x(int i) const { return a + i * dx(); }
};

struct FDGrid2D {
    double ax = 0.0, bx = 1.0, ay = 0.0, by = 1.0;
    int nx = 0, ny = 0;
    double dt = 0.0;

    double dx() const { return (bx - ax) / nx; }
    double dy() const { return (by - ay) / ny; }
    double x(int i) const { return ax + i * dx(); }
    double y(int j) const { return ay + j * dy(); }
};

/// dt = 0.5 dx.
FDGrid1D make_fd_grid_1d(double a, double b, int intervals, BoundaryKind boundary = BoundaryKind::periodic);
/// dt = 0.5 min(dx, dy) / sqrt(2).
FDGrid2D make_fd_grid_2d(double ax, double bx, double ay, double by, int nx, int ny);

/// u^{n+1} = 2u^n - u^{n-1} + dt^2 (D_xx u^n + g(u^n)), started by a Taylor step.
/// The last step is not shortened: T must be reached with a whole number of
/// steps, so dt is reduced to T / ceil(T / dt) internally.
std::vector<double> ctcs_solve_1d(const ScalarFunction1D& u0, const ScalarFunction1D& u1, const SourceTerm& source,
                                  const FDGrid1D& grid, double final_time);

/// Row-major result values[j * nx + i].
std::vector<double> ctcs_solve_2d(const ScalarFunction2D& u0, const ScalarFunction2D& u1, const SourceTerm& source,
                                  const FDGrid2D& grid, double final_time);

}  // namespace ofedg
