#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ofedg/basis.hpp"
#include "ofedg/field.hpp"
#include "ofedg/source.hpp"

namespace ofedg {

enum class FluxKind { central, alternating, sommerfeld, custom };

std::string to_string(FluxKind kind);
FluxKind flux_kind_from_string(const std::string& name);

/// Interface flux family
///   v_hat  = alpha v+ + (1 - alpha) v- + tau [[u_x]]
///   ux_hat = (1 - alpha) u_x+ + alpha u_x- + beta [[v]]
struct FluxParams {
    FluxKind kind = FluxKind::alternating;
    double alpha = 0.0;
    double tau = 0.0;
    double beta = 0.0;
    double speed = 0.0;  ///< Sommerfeld speed s; zero for the other families.

    static FluxParams central();
    static FluxParams alternating(double alpha = 0.0);
    static FluxParams sommerfeld(double s = 1.0);
    static FluxParams custom(double alpha, double tau, double beta);

    void validate() const;
    bool operator==(const FluxParams&) const = default;
};

struct InterfaceFlux {
    double v_hat = 0.0;
    double ux_hat = 0.0;
};

/// Minus is the left limit, plus the right limit at the interface.
InterfaceFlux numerical_fluxes(double v_minus, double v_plus, double ux_minus, double ux_plus,
                               const FluxParams& fp);

enum class PenaltyScale { global, local };

/// Scheme parameters shared by the 1D and 2D assemblies.
struct SolverConfig {
    int p = 2;
    int q = 1;
    double c = 1.0;
    bool damping = true;
    bool penalty = true;
    FluxParams flux = FluxParams::alternating();
    int chi = 1;
    SourceTerm source;
    PenaltyScale penalty_scale = PenaltyScale::global;
    /// Volume quadrature points per direction; 0 means p + 3.
    int quad_points = 0;

    int volume_points() const { return quad_points > 0 ? quad_points : p + 3; }
    /// Throws std::invalid_argument on p < 2, q < 1, q outside [p - 2, p], c < 0 or chi not in {0, 1}.
    void validate() const;
};

/// sigma[j][l] for l = 1..p (index 0 unused) and sigma_tilde[j][l] for l = 0..q.
struct DampingCoeffs {
    std::vector<std::vector<double>> sigma;
    std::vector<std::vector<double>> sigma_tilde;
};

DampingCoeffs damping_coeffs_1d(const Mesh1D& mesh, const std::vector<Trace>& u_traces,
                                const std::vector<Trace>& v_traces, int p, int q);
DampingCoeffs damping_coeffs_1d(const DGField1D& u, const DGField1D& v, const SolverConfig& config);

/// (u_h, v_h) pair; arithmetic acts on the coefficient vectors.
struct State1D {
    DGField1D u;
    DGField1D v;
};

State1D operator+(const State1D& a, const State1D& b);
State1D operator*(double s, const State1D& a);
double max_abs(const State1D& s);
bool all_finite(const State1D& s);

/// Semi-discrete OF-EDG operator in one space dimension.
class Scheme1D {
public:
    Scheme1D(std::shared_ptr<const Mesh1D> mesh, SolverConfig config);

    const Mesh1D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
    const SolverConfig& config() const { return config_; }

    State1D initial_state(const ScalarFunction1D& u0, const ScalarFunction1D& u1) const;
    State1D zero_state() const;

    /// (d u_h / dt, d v_h / dt).
    State1D rhs(const State1D& state) const;

    /// Derivative-tested u equation with the mean row, chi = 0.
    DGField1D solve_ut(const State1D& state, const std::vector<InterfaceFlux>& fluxes,
                       const std::vector<Trace>& u_traces, const DampingCoeffs* damping) const;

    /// Re-solves the local u_t systems with the term chi int phi (g(u)/u) (u_t - v).
    DGField1D chi_source_correction(const State1D& state, const DGField1D& candidate) const;

    DGField1D solve_vt(const State1D& state, const std::vector<InterfaceFlux>& fluxes,
                       const DampingCoeffs* damping) const;

    /// int (u_x^2 + v^2).
    double linear_energy(const State1D& state) const;
    /// (1/2) int (v^2 + u_x^2) + int G(u).
    double nonlinear_energy(const State1D& state) const;
    /// Linear energy, or the nonlinear one when a source is configured.
    double energy(const State1D& state) const;
    /// d/dt int (u_x^2 + v^2) = 2 int (u_x (u_t)_x + v v_t).
    double linear_energy_rate(const State1D& state, const State1D& rate) const;

    double penalty_h(int j) const;

private:
    std::shared_ptr<const Mesh1D> mesh_;
    SolverConfig config_;
    ReferenceMatrices ref_;
    QuadratureRule quad_;
    std::vector<std::vector<double>> phi_at_quad_;  // [iq][m]
    Eigen::LLT<Eigen::MatrixXd> stiff_llt_;        // modes 1..p
};

}  // namespace ofedg
