#pragma once

#include <iosfwd>
#include <vector>

#include "ofedg/field.hpp"

namespace ofedg {

/// sqrt(sum_j int_{I_j} (w_h - f)^2), by an n-point Gauss rule per cell (0 -> degree + 5).
double l2_error(const DGField1D& field, const ScalarFunction1D& exact, int quad_points = 0);
double l2_error(const DGField2D& field, const ScalarFunction2D& exact, int quad_points = 0);

/// || (w_h)_x - f' ||, the displacement part of the energy-norm error.
double h1_semi_error(const DGField1D& field, const ScalarFunction1D& exact_dx, int quad_points = 0);

struct ConvergenceRow {
    int n = 0;
    double h = 0.0;
    double error = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

struct RateFit {
    /// log(e_i / e_{i+1}) / log(h_i / h_{i+1}); NaN where an error is zero.
    std::vector<double> pairwise;
    double least_squares = 0.0;
    bool saturated = false;
};

RateFit fit_rates(const ConvergenceTable& table);

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table);

struct OscillationReport {
    double overshoot = 0.0;
    double undershoot = 0.0;
    double total_variation = 0.0;
};

OscillationReport oscillation_metrics(const std::vector<double>& samples, double lower, double upper);
OscillationReport oscillation_metrics(const DGField1D& field, double lower, double upper);

/// Positions where the piecewise-linear interpolant of (x, y) crosses `level`.
std::vector<double> level_crossings(const std::vector<double>& x, const std::vector<double>& y, double level);

/// True when both lists have the same length and paired entries differ by at most `tolerance`.
bool fronts_match(const std::vector<double>& a, const std::vector<double>& b, double tolerance);

}  // namespace ofedg
