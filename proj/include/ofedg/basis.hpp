#pragma once

#include <cstddef>
#include <vector>

namespace ofedg {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Legendre polynomial P_m(xi) by the three-term recurrence.
double legendre_eval(int m, double xi);

/// r-th derivative of P_m at xi. Zero when r > m.
double legendre_deriv(int m, double xi, int r);

/// Table t[r][m] = d^r/dxi^r P_m(xi) for m = 0..max_degree, r = 0..max_order.
std::vector<std::vector<double>> legendre_table(int max_degree, double xi, int max_order);

/// n-point Gauss-Legendre rule. Throws std::invalid_argument for n == 0.
QuadratureRule gauss_rule(std::size_t n);

/// Reference-interval matrices for the modal Legendre basis up to degree k.
///
/// mass[m]      = int P_m P_m            = 2/(2m+1)
/// stiff[m][n]  = int P_m' P_n'
/// mixed[n][m]  = int P_n  P_m'
/// end_value[s][r][m] = P_m^{(r)}(s), s = 0 for xi = -1 and 1 for xi = +1
struct ReferenceMatrices {
    int degree = 0;
    std::vector<double> mass;
    std::vector<std::vector<double>> stiff;
    std::vector<std::vector<double>> mixed;
    std::vector<std::vector<double>> end_value[2];

    explicit ReferenceMatrices(int k);
};

/// Legendre coefficients of d/dxi of a Legendre series of degree k.
/// Uses P_m' = sum_{n = m-1, m-3, ...} (2n + 1) P_n.
std::vector<double> differentiate_series(const std::vector<double>& coeffs);

}  // namespace ofedg
