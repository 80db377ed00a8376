#include "ofedg/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofedg {

double legendre_eval(int m, double xi) {
    if (m == 0) return 1.0;
    double p_prev = 1.0;
    double p = xi;
    for (int k = 1; k < m; ++k) {
        const double p_next = ((2 * k + 1) * xi * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
    }
    return p;
}

std::vector<std::vector<double>> legendre_table(int max_degree, double xi, int max_order) {
    std::vector<std::vector<double>> t(max_order + 1, std::vector<double>(max_degree + 1, 0.0));
    for (int r = 0; r <= max_order; ++r) {
        // Differentiating (m+1) P_{m+1} = (2m+1) xi P_m - m P_{m-1} r times.
        t[r][0] = (r == 0) ? 1.0 : 0.0;
        if (max_degree >= 1) t[r][1] = (r == 0) ? xi : (r == 1 ? 1.0 : 0.0);
        for (int m = 1; m < max_degree; ++m) {
            double rhs = xi * t[r][m];
            if (r > 0) rhs += r * t[r - 1][m];
            t[r][m + 1] = ((2 * m + 1) * rhs - m * t[r][m - 1]) / (m + 1);
        }
    }
    return t;
}

double legendre_deriv(int m, double xi, int r) {
    if (r > m) return 0.0;
    return legendre_table(m, xi, r)[r][m];
}

QuadratureRule gauss_rule(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_rule: node count must be positive");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int ni = static_cast<int>(n);
    for (int i = 0; i < (ni + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (ni + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const double p = legendre_eval(ni, x);
            dp = ni * (x * p - legendre_eval(ni - 1, x)) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        dp = ni * (x * legendre_eval(ni, x) - legendre_eval(ni - 1, x)) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[ni - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[ni - 1 - i] = w;
    }
    if (ni % 2 == 1) rule.nodes[ni / 2] = 0.0;
    return rule;
}

ReferenceMatrices::ReferenceMatrices(int k) : degree(k) {
    const int n = k + 1;
    mass.resize(n);
    stiff.assign(n, std::vector<double>(n, 0.0));
    mixed.assign(n, std::vector<double>(n, 0.0));
    const QuadratureRule q = gauss_rule(static_cast<std::size_t>(k + 2));
    for (std::size_t iq = 0; iq < q.size(); ++iq) {
        const auto t = legendre_table(k, q.nodes[iq], 1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                stiff[a][b] += q.weights[iq] * t[1][a] * t[1][b];
                mixed[a][b] += q.weights[iq] * t[0][a] * t[1][b];
            }
        }
    }
    for (int m = 0; m < n; ++m) mass[m] = 2.0 / (2 * m + 1);
    for (int s = 0; s < 2; ++s) end_value[s] = legendre_table(k, s == 0 ? -1.0 : 1.0, k);
}

std::vector<double> differentiate_series(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    std::vector<double> d(n, 0.0);
    for (int m = 1; m < n; ++m) {
        for (int j = m - 1; j >= 0; j -= 2) d[j] += (2 * j + 1) * coeffs[m];
    }
    return d;
}

}  // namespace ofedg
