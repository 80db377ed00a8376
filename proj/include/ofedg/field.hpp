#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ofedg/mesh.hpp"

namespace ofedg {

using ScalarFunction1D = std::function<double(double)>;
using ScalarFunction2D = std::function<double(double, double)>;

/// Piecewise polynomial of degree k on a 1D mesh in the modal Legendre basis.
/// Coefficient (j, m) multiplies P_m(xi) with xi = 2 (x - x_j) / h_j.
class DGField1D {
public:
    DGField1D() = default;
    DGField1D(std::shared_ptr<const Mesh1D> mesh, int degree);

    const Mesh1D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
    int degree() const { return degree_; }
    int modes() const { return degree_ + 1; }
    int cells() const { return mesh_->cells(); }

    std::span<double> cell(int j) { return {coeffs_.data() + j * modes(), static_cast<std::size_t>(modes())}; }
    std::span<const double> cell(int j) const {
        return {coeffs_.data() + j * modes(), static_cast<std::size_t>(modes())};
    }
    double& operator()(int j, int m) { return coeffs_[j * modes() + m]; }
    double operator()(int j, int m) const { return coeffs_[j * modes() + m]; }

    std::vector<double>& coeffs() { return coeffs_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Value of the r-th x-derivative restricted to cell j at reference point xi.
    double eval_local(int j, double xi, int r = 0) const;

private:
    std::shared_ptr<const Mesh1D> mesh_;
    int degree_ = 0;
    std::vector<double> coeffs_;
};

/// Left and right limits of d^l w / dx^l, l = 0..L, at node `index`.
struct Trace {
    int index = 0;
    std::vector<double> left;
    std::vector<double> right;

    double jump(int l) const { return right[l] - left[l]; }
};

/// Cellwise L2 projection by an n-point Gauss rule (n = 0 picks degree + 3).
DGField1D project_initial(const ScalarFunction1D& f, std::shared_ptr<const Mesh1D> mesh, int degree,
                          int quad_points = 0);

/// P^l restricted to cell j; l = -1 is treated as l = 0. Returns the first l+1 modes.
std::vector<double> project_down(const DGField1D& field, int j, int l);

/// Truncation of a local modal vector to total degree <= max(l, 0).
std::vector<double> truncate_modes(std::span<const double> local, int l);

/// d^r field / dx^r at a physical point. Points on an interior node use the right cell.
double eval(const DGField1D& field, double x, int r = 0);

/// Traces at all N + 1 nodes. Boundary nodes are closed by `boundary_closure`.
std::vector<Trace> interface_traces(const DGField1D& field, int max_order);

/// Fills the exterior side of the two boundary traces.
/// periodic: wrap to the opposite end. neumann: mirror with sign (-1)^l on the l-th derivative.
void boundary_closure(std::vector<Trace>& traces, BoundaryKind kind);

/// Cell-midpoint samples (x_j, w(x_j)).
std::vector<std::pair<double, double>> midpoint_values(const DGField1D& field);

void write_snapshot_csv(std::ostream& os, const DGField1D& field);

// ---------------------------------------------------------------------------
// 2D

/// Total-degree modes (a, b), a + b <= k, ordered by total degree then descending a.
std::vector<std::pair<int, int>> modes_2d(int k);
inline int mode_count_2d(int k) { return (k + 1) * (k + 2) / 2; }

/// Piecewise polynomial in P^k (total degree) on a Cartesian mesh using the
/// orthogonal tensor-Legendre products P_a(xi) P_b(eta), a + b <= k.
class DGField2D {
public:
    DGField2D() = default;
    DGField2D(std::shared_ptr<const Mesh2D> mesh, int degree);

    const Mesh2D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh2D>& mesh_ptr() const { return mesh_; }
    int degree() const { return degree_; }
    int modes() const { return static_cast<int>(modes_.size()); }
    const std::vector<std::pair<int, int>>& mode_list() const { return modes_; }
    int cells() const { return mesh_->cells(); }

    std::span<double> cell(int c) { return {coeffs_.data() + c * modes(), static_cast<std::size_t>(modes())}; }
    std::span<const double> cell(int c) const {
        return {coeffs_.data() + c * modes(), static_cast<std::size_t>(modes())};
    }
    double& operator()(int c, int m) { return coeffs_[c * modes() + m]; }
    double operator()(int c, int m) const { return coeffs_[c * modes() + m]; }

    std::vector<double>& coeffs() { return coeffs_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// d^{rx+ry} / dx^rx dy^ry in cell c at reference point (xi, eta).
    double eval_local(int c, double xi, double eta, int rx = 0, int ry = 0) const;

private:
    std::shared_ptr<const Mesh2D> mesh_;
    int degree_ = 0;
    std::vector<std::pair<int, int>> modes_;
    std::vector<double> coeffs_;
};

DGField2D project_initial_2d(const ScalarFunction2D& f, std::shared_ptr<const Mesh2D> mesh, int degree,
                             int quad_points = 0);

/// P^l on cell c (total degree truncation); l = -1 is treated as l = 0.
std::vector<double> project_down_2d(const DGField2D& field, int c, int l);

double eval_2d(const DGField2D& field, double x, double y, int rx = 0, int ry = 0);

/// Cell-centre grid, row-major in y: values[j][i].
std::vector<std::vector<double>> center_values(const DGField2D& field);

void write_snapshot_csv(std::ostream& os, const DGField2D& field);

}  // namespace ofedg
