#include "ofedg/field.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "ofedg/basis.hpp"

namespace ofedg {

DGField1D::DGField1D(std::shared_ptr<const Mesh1D> mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
    if (!mesh_) throw std::invalid_argument("DGField1D: null mesh");
    if (degree < 0) throw std::invalid_argument("DGField1D: negative degree");
    coeffs_.assign(static_cast<std::size_t>(mesh_->cells() * modes()), 0.0);
}

double DGField1D::eval_local(int j, double xi, int r) const {
    if (r > degree_) return 0.0;
    const auto t = legendre_table(degree_, xi, r);
    const auto c = cell(j);
    double s = 0.0;
    for (int m = r; m <= degree_; ++m) s += c[m] * t[r][m];
    return s * std::pow(2.0 / mesh_->size(j), r);
}

DGField1D project_initial(const ScalarFunction1D& f, std::shared_ptr<const Mesh1D> mesh, int degree,
                          int quad_points) {
    DGField1D field(std::move(mesh), degree);
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(quad_points > 0 ? quad_points : degree + 3));
    std::vector<std::vector<double>> phi(q.size());
    for (std::size_t iq = 0; iq < q.size(); ++iq) phi[iq] = legendre_table(degree, q.nodes[iq], 0)[0];
    const Mesh1D& m = field.mesh();
    for (int j = 0; j < m.cells(); ++j) {
        auto c = field.cell(j);
        for (std::size_t iq = 0; iq < q.size(); ++iq) {
            const double fx = f(m.center(j) + 0.5 * m.size(j) * q.nodes[iq]);
            for (int k = 0; k <= degree; ++k) c[k] += q.weights[iq] * fx * phi[iq][k];
        }
        for (int k = 0; k <= degree; ++k) c[k] *= (2 * k + 1) / 2.0;
    }
    return field;
}

std::vector<double> truncate_modes(std::span<const double> local, int l) {
    if (l < -1) throw std::invalid_argument("projection degree must be >= -1");
    const std::size_t keep = static_cast<std::size_t>(std::max(l, 0) + 1);
    return {local.begin(), local.begin() + std::min(keep, local.size())};
}

std::vector<double> project_down(const DGField1D& field, int j, int l) {
    if (l > field.degree()) throw std::invalid_argument("project_down: target degree exceeds field degree");
    return truncate_modes(field.cell(j), l);
}

double eval(const DGField1D& field, double x, int r) {
    const Mesh1D& m = field.mesh();
    const int j = m.locate(x);
    const double xi = std::clamp(2.0 * (x - m.center(j)) / m.size(j), -1.0, 1.0);
    return field.eval_local(j, xi, r);
}

void boundary_closure(std::vector<Trace>& traces, BoundaryKind kind) {
    if (traces.size() < 2) return;
    Trace& first = traces.front();
    Trace& last = traces.back();
    switch (kind) {
        case BoundaryKind::periodic:
            first.left = last.left;
            last.right = first.right;
            break;
        case BoundaryKind::neumann:
            first.left = first.right;
            last.right = last.left;
            for (std::size_t l = 1; l < first.left.size(); l += 2) first.left[l] = -first.left[l];
            for (std::size_t l = 1; l < last.right.size(); l += 2) last.right[l] = -last.right[l];
            break;
        default:
            throw std::invalid_argument("boundary_closure: unsupported boundary kind");
    }
}

std::vector<Trace> interface_traces(const DGField1D& field, int max_order) {
    if (max_order > field.degree()) max_order = field.degree();
    const Mesh1D& m = field.mesh();
    const int n = m.cells();
    const int k = field.degree();
    const auto lo = legendre_table(k, -1.0, max_order);
    const auto hi = legendre_table(k, 1.0, max_order);
    std::vector<Trace> traces(n + 1);
    for (int i = 0; i <= n; ++i) {
        traces[i].index = i;
        traces[i].left.assign(max_order + 1, 0.0);
        traces[i].right.assign(max_order + 1, 0.0);
    }
    for (int j = 0; j < n; ++j) {
        const auto c = field.cell(j);
        const double scale = 2.0 / m.size(j);
        double factor = 1.0;
        for (int r = 0; r <= max_order; ++r) {
            double at_left = 0.0;
            double at_right = 0.0;
            for (int mm = r; mm <= k; ++mm) {
                at_left += c[mm] * lo[r][mm];
                at_right += c[mm] * hi[r][mm];
            }
            traces[j].right[r] = at_left * factor;
            traces[j + 1].left[r] = at_right * factor;
            factor *= scale;
        }
    }
    boundary_closure(traces, m.boundary());
    return traces;
}

std::vector<std::pair<double, double>> midpoint_values(const DGField1D& field) {
    std::vector<std::pair<double, double>> out;
    out.reserve(field.cells());
    for (int j = 0; j < field.cells(); ++j) out.emplace_back(field.mesh().center(j), field.eval_local(j, 0.0));
    return out;
}

void write_snapshot_csv(std::ostream& os, const DGField1D& field) {
    os << "x,u\n" << std::setprecision(16) << std::scientific;
    for (const auto& [x, u] : midpoint_values(field)) os << x << ',' << u << '\n';
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> modes_2d(int k) {
    std::vector<std::pair<int, int>> modes;
    for (int d = 0; d <= k; ++d) {
        for (int a = d; a >= 0; --a) modes.emplace_back(a, d - a);
    }
    return modes;
}

DGField2D::DGField2D(std::shared_ptr<const Mesh2D> mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree), modes_(modes_2d(degree)) {
    if (!mesh_) throw std::invalid_argument("DGField2D: null mesh");
    if (degree < 0) throw std::invalid_argument("DGField2D: negative degree");
    coeffs_.assign(static_cast<std::size_t>(mesh_->cells() * modes()), 0.0);
}

double DGField2D::eval_local(int c, double xi, double eta, int rx, int ry) const {
    const auto tx = legendre_table(degree_, xi, rx);
    const auto ty = legendre_table(degree_, eta, ry);
    const auto v = cell(c);
    double s = 0.0;
    for (int m = 0; m < modes(); ++m) s += v[m] * tx[rx][modes_[m].first] * ty[ry][modes_[m].second];
    const int i = c % mesh_->nx();
    const int j = c / mesh_->nx();
    return s * std::pow(2.0 / mesh_->hx(i), rx) * std::pow(2.0 / mesh_->hy(j), ry);
}

DGField2D project_initial_2d(const ScalarFunction2D& f, std::shared_ptr<const Mesh2D> mesh, int degree,
                             int quad_points) {
    DGField2D field(std::move(mesh), degree);
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(quad_points > 0 ? quad_points : degree + 3));
    const std::size_t nq = q.size();
    std::vector<std::vector<double>> phi(nq);
    for (std::size_t iq = 0; iq < nq; ++iq) phi[iq] = legendre_table(degree, q.nodes[iq], 0)[0];
    const Mesh2D& m = field.mesh();
    const auto& modes = field.mode_list();
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            auto c = field.cell(m.index(i, j));
            for (std::size_t qy = 0; qy < nq; ++qy) {
                const double y = m.center_y(j) + 0.5 * m.hy(j) * q.nodes[qy];
                for (std::size_t qx = 0; qx < nq; ++qx) {
                    const double x = m.center_x(i) + 0.5 * m.hx(i) * q.nodes[qx];
                    const double w = q.weights[qx] * q.weights[qy] * f(x, y);
                    for (std::size_t k = 0; k < modes.size(); ++k) {
                        c[k] += w * phi[qx][modes[k].first] * phi[qy][modes[k].second];
                    }
                }
            }
            for (std::size_t k = 0; k < modes.size(); ++k) {
                c[k] *= (2 * modes[k].first + 1) * (2 * modes[k].second + 1) / 4.0;
            }
        }
    }
    return field;
}

std::vector<double> project_down_2d(const DGField2D& field, int c, int l) {
    if (l < -1) throw std::invalid_argument("project_down_2d: target degree must be >= -1");
    if (l > field.degree()) throw std::invalid_argument("project_down_2d: target degree exceeds field degree");
    const auto local = field.cell(c);
    const int keep = mode_count_2d(std::max(l, 0));
    return {local.begin(), local.begin() + keep};
}

double eval_2d(const DGField2D& field, double x, double y, int rx, int ry) {
    const Mesh2D& m = field.mesh();
    if (x < m.x_nodes().front() || x > m.x_nodes().back() || y < m.y_nodes().front() ||
        y > m.y_nodes().back()) {
        throw std::out_of_range("eval_2d: point outside the domain");
    }
    const int i = m.locate_x(x);
    const int j = m.locate_y(y);
    const double xi = std::clamp(2.0 * (x - m.center_x(i)) / m.hx(i), -1.0, 1.0);
    const double eta = std::clamp(2.0 * (y - m.center_y(j)) / m.hy(j), -1.0, 1.0);
    return field.eval_local(m.index(i, j), xi, eta, rx, ry);
}

std::vector<std::vector<double>> center_values(const DGField2D& field) {
    const Mesh2D& m = field.mesh();
    std::vector<std::vector<double>> grid(m.ny(), std::vector<double>(m.nx()));
    // P_a(0) P_b(0) is nonzero only for even a, b.
    const auto p0 = legendre_table(field.degree(), 0.0, 0)[0];
    const auto& modes = field.mode_list();
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const auto c = field.cell(m.index(i, j));
            double s = 0.0;
            for (std::size_t k = 0; k < modes.size(); ++k) s += c[k] * p0[modes[k].first] * p0[modes[k].second];
            grid[j][i] = s;
        }
    }
    return grid;
}

void write_snapshot_csv(std::ostream& os, const DGField2D& field) {
    const Mesh2D& m = field.mesh();
    const auto grid = center_values(field);
    os << "x,y,u\n" << std::setprecision(16) << std::scientific;
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) os << m.center_x(i) << ',' << m.center_y(j) << ',' << grid[j][i] << '\n';
    }
}

}  // namespace ofedg
