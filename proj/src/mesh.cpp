#include "ofedg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofedg {

std::string to_string(BoundaryKind kind) {
    return kind == BoundaryKind::periodic ? "periodic" : "neumann";
}

BoundaryKind boundary_from_string(const std::string& name) {
    if (name == "periodic") return BoundaryKind::periodic;
    if (name == "neumann") return BoundaryKind::neumann;
    throw std::invalid_argument("unsupported boundary kind '" + name + "'");
}

namespace {

void check_increasing(const std::vector<double>& nodes, const char* what) {
    if (nodes.size() < 2) throw std::invalid_argument(std::string(what) + ": need at least one cell");
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i] > nodes[i - 1])) {
            throw std::invalid_argument(std::string(what) + ": nodes must be strictly increasing");
        }
    }
}

std::vector<double> uniform_nodes(double a, double b, int n) {
    std::vector<double> nodes(n + 1);
    for (int i = 0; i <= n; ++i) nodes[i] = a + (b - a) * static_cast<double>(i) / n;
    nodes.back() = b;
    return nodes;
}

}  // namespace

Mesh1D::Mesh1D(std::vector<double> nodes, BoundaryKind boundary, std::uint64_t seed, double perturbation)
    : nodes_(std::move(nodes)), boundary_(boundary), seed_(seed), perturbation_(perturbation) {
    check_increasing(nodes_, "Mesh1D");
    sizes_.resize(nodes_.size() - 1);
    for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) sizes_[j] = nodes_[j + 1] - nodes_[j];
    h_max_ = *std::max_element(sizes_.begin(), sizes_.end());
    h_min_ = *std::min_element(sizes_.begin(), sizes_.end());
}

int Mesh1D::left_neighbor(int j) const {
    if (j > 0) return j - 1;
    return boundary_ == BoundaryKind::periodic ? cells() - 1 : -1;
}

int Mesh1D::right_neighbor(int j) const {
    if (j + 1 < cells()) return j + 1;
    return boundary_ == BoundaryKind::periodic ? 0 : -1;
}

int Mesh1D::locate(double x) const {
    if (x < nodes_.front() || x > nodes_.back()) {
        throw std::out_of_range("Mesh1D::locate: point outside the domain");
    }
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    int j = static_cast<int>(it - nodes_.begin()) - 1;
    return std::clamp(j, 0, cells() - 1);
}

Mesh1D uniform_mesh_1d(double a, double b, int n, BoundaryKind boundary) {
    if (n < 1) throw std::invalid_argument("uniform_mesh_1d: cell count must be positive");
    if (!(a < b)) throw std::invalid_argument("uniform_mesh_1d: require a < b");
    return Mesh1D(uniform_nodes(a, b, n), boundary);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Mesh1D perturb_mesh_1d(const Mesh1D& mesh, double fraction, std::uint64_t seed) {
    if (fraction < 0.0 || fraction >= 0.5) {
        throw std::invalid_argument("perturb_mesh_1d: fraction must lie in [0, 0.5)");
    }
    const double h = mesh.h();
    std::vector<double> nodes = mesh.nodes();
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        const std::uint64_t bits = splitmix64(seed + i * 0x9E3779B97F4A7C15ULL);
        const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
        nodes[i] += fraction * h * (2.0 * unit - 1.0);
    }
    return Mesh1D(std::move(nodes), mesh.boundary(), seed, fraction);
}

Mesh2D::Mesh2D(std::vector<double> x_nodes, std::vector<double> y_nodes)
    : xn_(std::move(x_nodes)), yn_(std::move(y_nodes)) {
    check_increasing(xn_, "Mesh2D x");
    check_increasing(yn_, "Mesh2D y");
    for (int i = 0; i < nx(); ++i) {
        for (int j = 0; j < ny(); ++j) h_max_ = std::max(h_max_, diag(i, j));
    }
}

double Mesh2D::diag(int i, int j) const { return std::hypot(hx(i), hy(j)); }

int Mesh2D::locate_x(double x) const {
    auto it = std::upper_bound(xn_.begin(), xn_.end(), x);
    return std::clamp(static_cast<int>(it - xn_.begin()) - 1, 0, nx() - 1);
}

int Mesh2D::locate_y(double y) const {
    auto it = std::upper_bound(yn_.begin(), yn_.end(), y);
    return std::clamp(static_cast<int>(it - yn_.begin()) - 1, 0, ny() - 1);
}

Mesh2D cartesian_mesh_2d(double ax, double bx, double ay, double by, int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("cartesian_mesh_2d: cell counts must be positive");
    if (!(ax < bx) || !(ay < by)) throw std::invalid_argument("cartesian_mesh_2d: degenerate extent");
    return Mesh2D(uniform_nodes(ax, bx, nx), uniform_nodes(ay, by, ny));
}

}  // namespace ofedg
