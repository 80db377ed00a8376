#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ofedg {

enum class BoundaryKind { periodic, neumann };

std::string to_string(BoundaryKind kind);
BoundaryKind boundary_from_string(const std::string& name);

/// Partition a = x_{1/2} < ... < x_{N+1/2} = b.
class Mesh1D {
public:
    Mesh1D(std::vector<double> nodes, BoundaryKind boundary, std::uint64_t seed = 0,
           double perturbation = 0.0);

    int cells() const { return static_cast<int>(nodes_.size()) - 1; }
    const std::vector<double>& nodes() const { return nodes_; }
    double left(int j) const { return nodes_[j]; }
    double right(int j) const { return nodes_[j + 1]; }
    double center(int j) const { return 0.5 * (nodes_[j] + nodes_[j + 1]); }
    double size(int j) const { return sizes_[j]; }
    const std::vector<double>& sizes() const { return sizes_; }
    double h() const { return h_max_; }
    double h_min() const { return h_min_; }
    double a() const { return nodes_.front(); }
    double b() const { return nodes_.back(); }
    double quasi_uniformity() const { return h_min_ / h_max_; }
    BoundaryKind boundary() const { return boundary_; }
    std::uint64_t seed() const { return seed_; }
    double perturbation() const { return perturbation_; }

    /// Periodic neighbours; for Neumann meshes the boundary cells return -1.
    int left_neighbor(int j) const;
    int right_neighbor(int j) const;

    /// Index of the cell containing x (right-closed on the last cell).
    int locate(double x) const;

private:
    std::vector<double> nodes_;
    std::vector<double> sizes_;
    double h_max_ = 0.0;
    double h_min_ = 0.0;
    BoundaryKind boundary_;
    std::uint64_t seed_;
    double perturbation_;
};

Mesh1D uniform_mesh_1d(double a, double b, int n, BoundaryKind boundary = BoundaryKind::periodic);

/// Moves every interior node by an independent uniform offset in
/// [-fraction * h, fraction * h]. Offsets come from a splitmix64 counter
/// stream: offset i uses splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15).
Mesh1D perturb_mesh_1d(const Mesh1D& mesh, double fraction, std::uint64_t seed);

/// splitmix64 finalizer; exposed so the perturbation stream is reproducible elsewhere.
std::uint64_t splitmix64(std::uint64_t x);

/// Tensor-product Cartesian mesh, periodic in both directions.
/// Cell (i, j) has flat index i + nx * j.
class Mesh2D {
public:
    Mesh2D(std::vector<double> x_nodes, std::vector<double> y_nodes);

    int nx() const { return static_cast<int>(xn_.size()) - 1; }
    int ny() const { return static_cast<int>(yn_.size()) - 1; }
    int cells() const { return nx() * ny(); }
    int index(int i, int j) const { return i + nx() * j; }
    int wrap_x(int i) const { return (i % nx() + nx()) % nx(); }
    int wrap_y(int j) const { return (j % ny() + ny()) % ny(); }

    const std::vector<double>& x_nodes() const { return xn_; }
    const std::vector<double>& y_nodes() const { return yn_; }
    double hx(int i) const { return xn_[i + 1] - xn_[i]; }
    double hy(int j) const { return yn_[j + 1] - yn_[j]; }
    double diag(int i, int j) const;
    double h() const { return h_max_; }
    double center_x(int i) const { return 0.5 * (xn_[i] + xn_[i + 1]); }
    double center_y(int j) const { return 0.5 * (yn_[j] + yn_[j + 1]); }
    BoundaryKind boundary() const { return BoundaryKind::periodic; }

    int locate_x(double x) const;
    int locate_y(double y) const;

private:
    std::vector<double> xn_;
    std::vector<double> yn_;
    double h_max_ = 0.0;
};

Mesh2D cartesian_mesh_2d(double ax, double bx, double ay, double by, int nx, int ny);

}  // namespace ofedg
