#include "ofedg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ofedg/basis.hpp"

namespace ofedg {

double l2_error(const DGField1D& field, const ScalarFunction1D& exact, int quad_points) {
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(quad_points > 0 ? quad_points : field.degree() + 5));
    const Mesh1D& m = field.mesh();
    double sum = 0.0;
    for (int j = 0; j < m.cells(); ++j) {
        for (std::size_t iq = 0; iq < q.size(); ++iq) {
            const double x = m.center(j) + 0.5 * m.size(j) * q.nodes[iq];
            const double e = field.eval_local(j, q.nodes[iq]) - exact(x);
            sum += 0.5 * m.size(j) * q.weights[iq] * e * e;
        }
    }
    return std::sqrt(sum);
}

double h1_semi_error(const DGField1D& field, const ScalarFunction1D& exact_dx, int quad_points) {
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(quad_points > 0 ? quad_points : field.degree() + 5));
    const Mesh1D& m = field.mesh();
    double sum = 0.0;
    for (int j = 0; j < m.cells(); ++j) {
        for (std::size_t iq = 0; iq < q.size(); ++iq) {
            const double x = m.center(j) + 0.5 * m.size(j) * q.nodes[iq];
            const double e = field.eval_local(j, q.nodes[iq], 1) - exact_dx(x);
            sum += 0.5 * m.size(j) * q.weights[iq] * e * e;
        }
    }
    return std::sqrt(sum);
}

double l2_error(const DGField2D& field, const ScalarFunction2D& exact, int quad_points) {
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(quad_points > 0 ? quad_points : field.degree() + 5));
    const std::size_t nq = q.size();
    std::vector<std::vector<double>> phi(nq);
    for (std::size_t iq = 0; iq < nq; ++iq) phi[iq] = legendre_table(field.degree(), q.nodes[iq], 0)[0];
    const Mesh2D& m = field.mesh();
    const auto& modes = field.mode_list();
    double sum = 0.0;
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const auto c = field.cell(m.index(i, j));
            const double jac = 0.25 * m.hx(i) * m.hy(j);
            for (std::size_t qy = 0; qy < nq; ++qy) {
                const double y = m.center_y(j) + 0.5 * m.hy(j) * q.nodes[qy];
                for (std::size_t qx = 0; qx < nq; ++qx) {
                    const double x = m.center_x(i) + 0.5 * m.hx(i) * q.nodes[qx];
                    double uh = 0.0;
                    for (std::size_t k = 0; k < modes.size(); ++k) {
                        uh += c[k] * phi[qx][modes[k].first] * phi[qy][modes[k].second];
                    }
                    const double e = uh - exact(x, y);
                    sum += jac * q.weights[qx] * q.weights[qy] * e * e;
                }
            }
        }
    }
    return std::sqrt(sum);
}

RateFit fit_rates(const ConvergenceTable& table) {
    const auto& rows = table.rows;
    if (rows.size() < 2) throw std::invalid_argument("fit_rates: need at least two levels");
    RateFit fit;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].error <= 0.0 || rows[i + 1].error <= 0.0) {
            fit.pairwise.push_back(std::numeric_limits<double>::quiet_NaN());
            fit.saturated = true;
            continue;
        }
        fit.pairwise.push_back(std::log(rows[i].error / rows[i + 1].error) / std::log(rows[i].h / rows[i + 1].h));
    }
    if (fit.saturated) {
        fit.least_squares = std::numeric_limits<double>::quiet_NaN();
        return fit;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        const double x = std::log(r.h);
        const double y = std::log(r.error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.least_squares = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table) {
    const RateFit fit = fit_rates(table);
    os << "N,h,error,slope\n" << std::setprecision(16) << std::scientific;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        os << r.n << ',' << r.h << ',' << r.error << ',';
        if (i > 0) os << fit.pairwise[i - 1];
        os << '\n';
    }
}

OscillationReport oscillation_metrics(const std::vector<double>& samples, double lower, double upper) {
    OscillationReport r;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        r.overshoot = std::max(r.overshoot, samples[i] - upper);
        r.undershoot = std::max(r.undershoot, lower - samples[i]);
        if (i > 0) r.total_variation += std::abs(samples[i] - samples[i - 1]);
    }
    return r;
}

OscillationReport oscillation_metrics(const DGField1D& field, double lower, double upper) {
    std::vector<double> samples;
    for (const auto& [x, u] : midpoint_values(field)) samples.push_back(u);
    return oscillation_metrics(samples, lower, upper);
}

std::vector<double> level_crossings(const std::vector<double>& x, const std::vector<double>& y, double level) {
    if (x.size() != y.size()) throw std::invalid_argument("level_crossings: size mismatch");
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = y[i] - level;
        const double b = y[i + 1] - level;
        if ((a < 0.0 && b >= 0.0) || (a >= 0.0 && b < 0.0)) {
            out.push_back(x[i] + (x[i + 1] - x[i]) * a / (a - b));
        }
    }
    return out;
}

bool fronts_match(const std::vector<double>& a, const std::vector<double>& b, double tolerance) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tolerance) return false;
    }
    return true;
}

}  // namespace ofedg
