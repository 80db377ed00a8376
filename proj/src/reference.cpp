#include "ofedg/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace ofedg {

FDGrid1D make_fd_grid_1d(double a, double b, int intervals, BoundaryKind boundary) {
    if (intervals < 2 || !(a < b)) throw std::invalid_argument("make_fd_grid_1d: bad grid");
    FDGrid1D g{a, b, intervals, 0.0, boundary};
    g.dt = 0.5 * g.dx();
    return g;
}

FDGrid2D make_fd_grid_2d(double ax, double bx, double ay, double by, int nx, int ny) {
    if (nx < 2 || ny < 2 || !(ax < bx) || !(ay < by)) throw std::invalid_argument("make_fd_grid_2d: bad grid");
    FDGrid2D g{ax, bx, ay, by, nx, ny, 0.0};
    g.dt = 0.5 * std::min(g.dx(), g.dy()) / std::sqrt(2.0);
    return g;
}

namespace {

long whole_steps(double final_time, double dt) {
    return std::max(1L, static_cast<long>(std::ceil(final_time / dt - 1e-12)));
}

}  // namespace

std::vector<double> ctcs_solve_1d(const ScalarFunction1D& u0, const ScalarFunction1D& u1, const SourceTerm& source,
                                  const FDGrid1D& grid, double final_time) {
    const double dx = grid.dx();
    if (!(grid.dt > 0.0) || grid.dt > dx * (1.0 + 1e-12)) {
        throw std::invalid_argument("ctcs_solve_1d: CFL condition dt <= dx violated");
    }
    const int n = grid.points();
    const long steps = whole_steps(final_time, grid.dt);
    const double dt = final_time / steps;
    const double lambda = dt * dt / (dx * dx);
    const bool periodic = grid.boundary == BoundaryKind::periodic;

    auto laplacian = [&](const std::vector<double>& u, int i) {
        int il = i - 1, ir = i + 1;
        if (periodic) {
            il = (il + n) % n;
            ir = ir % n;
        } else {
            if (il < 0) il = 1;          // mirror ghost: u_{-1} = u_1
            if (ir >= n) ir = n - 2;
        }
        return u[ir] - 2.0 * u[i] + u[il];
    };
    auto g = [&](double u) { return source.active() ? source.g(u) : 0.0; };

    std::vector<double> prev(n), cur(n), next(n);
    for (int i = 0; i < n; ++i) prev[i] = u0(grid.x(i));
    for (int i = 0; i < n; ++i) {
        cur[i] = prev[i] + dt * u1(grid.x(i)) + 0.5 * lambda * laplacian(prev, i) + 0.5 * dt * dt * g(prev[i]);
    }
    for (long s = 1; s < steps; ++s) {
        for (int i = 0; i < n; ++i) {
            next[i] = 2.0 * cur[i] - prev[i] + lambda * laplacian(cur, i) + dt * dt * g(cur[i]);
        }
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

std::vector<double> ctcs_solve_2d(const ScalarFunction2D& u0, const ScalarFunction2D& u1, const SourceTerm& source,
                                  const FDGrid2D& grid, double final_time) {
    const double dx = grid.dx();
    const double dy = grid.dy();
    if (!(grid.dt > 0.0) || grid.dt > std::min(dx, dy) / std::sqrt(2.0) * (1.0 + 1e-12)) {
        throw std::invalid_argument("ctcs_solve_2d: CFL condition dt <= h / sqrt(2) violated");
    }
    const int nx = grid.nx;
    const int ny = grid.ny;
    const long steps = whole_steps(final_time, grid.dt);
    const double dt = final_time / steps;
    const double lx = dt * dt / (dx * dx);
    const double ly = dt * dt / (dy * dy);
    auto idx = [nx](int i, int j) { return j * nx + i; };
    auto lap = [&](const std::vector<double>& u, int i, int j) {
        const int il = (i + nx - 1) % nx, ir = (i + 1) % nx;
        const int jl = (j + ny - 1) % ny, jr = (j + 1) % ny;
        const double c = u[idx(i, j)];
        return lx * (u[idx(ir, j)] - 2.0 * c + u[idx(il, j)]) + ly * (u[idx(i, jr)] - 2.0 * c + u[idx(i, jl)]);
    };
    auto g = [&](double u) { return source.active() ? source.g(u) : 0.0; };

    const std::size_t total = static_cast<std::size_t>(nx) * ny;
    std::vector<double> prev(total), cur(total), next(total);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) prev[idx(i, j)] = u0(grid.x(i), grid.y(j));
    }
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double p = prev[idx(i, j)];
            cur[idx(i, j)] = p + dt * u1(grid.x(i), grid.y(j)) + 0.5 * lap(prev, i, j) + 0.5 * dt * dt * g(p);
        }
    }
    for (long s = 1; s < steps; ++s) {
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const double c = cur[idx(i, j)];
                next[idx(i, j)] = 2.0 * c - prev[idx(i, j)] + lap(cur, i, j) + dt * dt * g(c);
            }
        }
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

}  // namespace ofedg
