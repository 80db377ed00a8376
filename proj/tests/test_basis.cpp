#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ofedg/basis.hpp"
#include "oracle.hpp"

using namespace ofedg;

TEST(Legendre, SpecValues) {
    EXPECT_DOUBLE_EQ(legendre_eval(0, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(legendre_eval(1, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(legendre_eval(2, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(legendre_deriv(1, 0.2, 1), 1.0);
    EXPECT_DOUBLE_EQ(legendre_deriv(3, 0.0, 4), 0.0);
    EXPECT_NEAR(legendre_deriv(2, 0.5, 1), 1.5, 1e-15);
}

TEST(Legendre, MatchesMonomialExpansion) {
    for (int m = 0; m <= 8; ++m) {
        const auto c = oracle::legendre_monomial(m);
        for (double xi : {-1.0, -0.7, -0.1, 0.0, 0.33, 0.9, 1.0}) {
            double val = 0.0, d1 = 0.0, d2 = 0.0;
            for (int k = 0; k <= m; ++k) {
                val += c[k] * std::pow(xi, k);
                if (k >= 1) d1 += k * c[k] * std::pow(xi, k - 1);
                if (k >= 2) d2 += k * (k - 1) * c[k] * std::pow(xi, k - 2);
            }
            EXPECT_NEAR(legendre_eval(m, xi), val, 1e-12) << m << " " << xi;
            EXPECT_NEAR(legendre_deriv(m, xi, 1), d1, 1e-11) << m << " " << xi;
            EXPECT_NEAR(legendre_deriv(m, xi, 2), d2, 1e-10) << m << " " << xi;
        }
    }
}

TEST(Legendre, EndpointDerivatives) {
    // P_m^{(r)}(1) = (m+r)! / (2^r r! (m-r)!), and P_m(-xi) = (-1)^m P_m(xi).
    for (int m = 0; m <= 6; ++m) {
        for (int r = 0; r <= m; ++r) {
            const double expect = std::tgamma(m + r + 1) / (std::pow(2.0, r) * std::tgamma(r + 1) * std::tgamma(m - r + 1));
            EXPECT_NEAR(legendre_deriv(m, 1.0, r), expect, 1e-9 * expect);
            EXPECT_NEAR(legendre_deriv(m, -1.0, r), ((m + r) % 2 ? -expect : expect), 1e-9 * expect);
        }
    }
}

TEST(Legendre, TableMatchesPointwise) {
    const auto t = legendre_table(5, 0.37, 3);
    for (int r = 0; r <= 3; ++r)
        for (int m = 0; m <= 5; ++m) EXPECT_NEAR(t[r][m], legendre_deriv(m, 0.37, r), 1e-13);
}

TEST(Gauss, SpecRules) {
    const auto r1 = gauss_rule(1);
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_DOUBLE_EQ(r1.nodes[0], 0.0);
    EXPECT_DOUBLE_EQ(r1.weights[0], 2.0);
    const auto r2 = gauss_rule(2);
    EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r2.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(r2.weights[1], 1.0, 1e-15);
    EXPECT_THROW(gauss_rule(0), std::invalid_argument);
}

TEST(Gauss, ExactForDegreeTwoNMinusOne) {
    for (std::size_t n = 1; n <= 20; ++n) {
        const auto r = gauss_rule(n);
        double wsum = 0.0;
        for (double w : r.weights) wsum += w;
        EXPECT_NEAR(wsum, 2.0, 1e-14);
        for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], static_cast<double>(k));
            const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
            EXPECT_NEAR(s, exact, 1e-13) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Gauss, AgreesWithGolubWelsch) {
    for (int n : {3, 7, 12}) {
        const auto r = gauss_rule(n);
        const auto [x, w] = oracle::golub_welsch(n);
        for (int i = 0; i < n; ++i) {
            EXPECT_NEAR(r.nodes[i], x[i], 1e-13);
            EXPECT_NEAR(r.weights[i], w[i], 1e-13);
        }
    }
}

TEST(ReferenceMatrices, AgainstQuadrature) {
    const int k = 5;
    ReferenceMatrices ref(k);
    const auto g = gauss_rule(12);
    for (int m = 0; m <= k; ++m) {
        EXPECT_NEAR(ref.mass[m], 2.0 / (2 * m + 1), 1e-15);
        for (int n = 0; n <= k; ++n) {
            double st = 0.0, mx = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double xi = g.nodes[i];
                st += g.weights[i] * legendre_deriv(m, xi, 1) * legendre_deriv(n, xi, 1);
                mx += g.weights[i] * legendre_eval(n, xi) * legendre_deriv(m, xi, 1);
            }
            EXPECT_NEAR(ref.stiff[m][n], st, 1e-12);
            EXPECT_NEAR(ref.mixed[n][m], mx, 1e-12);
        }
        for (int r = 0; r <= k; ++r) {
            EXPECT_NEAR(ref.end_value[0][r][m], legendre_deriv(m, -1.0, r), 1e-12);
            EXPECT_NEAR(ref.end_value[1][r][m], legendre_deriv(m, 1.0, r), 1e-12);
        }
    }
}

TEST(DifferentiateSeries, MatchesPointwiseDerivative) {
    const std::vector<double> c{0.3, -1.2, 0.8, 2.0, -0.4, 0.25};
    const auto d = differentiate_series(c);
    for (double xi : {-0.9, -0.2, 0.4, 0.95}) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t m = 0; m < c.size(); ++m) lhs += c[m] * legendre_deriv(static_cast<int>(m), xi, 1);
        for (std::size_t m = 0; m < d.size(); ++m) rhs += d[m] * legendre_eval(static_cast<int>(m), xi);
        EXPECT_NEAR(lhs, rhs, 1e-12);
    }
}
