#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ofedg/basis.hpp"
#include "ofedg/field.hpp"
#include "ofedg/scheme1d.hpp"

namespace ofedg {

using Vec2 = std::array<double, 2>;

/// 2D flux parameters. zeta = (1/2 - alpha)(1, 1), so that on every
/// axis-aligned face the fluxes coincide with the 1D family for the same alpha.
struct FluxParams2D {
    FluxParams base;

    explicit FluxParams2D(FluxParams fp) : base(fp) {}
    Vec2 zeta() const { return {0.5 - base.alpha, 0.5 - base.alpha}; }
};

/// "minus" is the trace from inside the element with outward normal n, "plus" from outside.
struct FaceState {
    double v_minus = 0.0;
    double v_plus = 0.0;
    Vec2 grad_minus{};
    Vec2 grad_plus{};
};

struct FaceFlux {
    double v_hat = 0.0;
    double grad_hat_n = 0.0;  ///< (grad u)^ . n
};

/// grad_hat = (grad+ + grad-)/2 - ((zeta.n+) grad+ + (zeta.n-) grad-) - beta [[v]]
/// v_hat    = (v+ + v-)/2 + zeta.(v+ n+ + v- n-) - tau [[grad u]],   n- = n, n+ = -n.
FaceFlux fluxes_2d(const FaceState& s, const FluxParams2D& fp, const Vec2& normal);

/// Multi-indices (a1, a2) with a1 + a2 = l, a1 descending.
std::vector<std::pair<int, int>> multi_indices(int l);

/// Squared vertex jumps of d^alpha w for every |alpha| = l.
/// Corner c of a cell is (sx, sy) with c = (sx > 0) + 2 (sy > 0). Each
/// vertex jump uses the two edge neighbours whose shared faces contain it.
struct VertexJumpSet {
    int order = 0;
    std::vector<std::pair<int, int>> alphas;
    std::vector<double> squared;  ///< [cell][alpha][corner]

    double at(int cell, int alpha, int corner) const {
        return squared[(static_cast<std::size_t>(cell) * alphas.size() + alpha) * 4 + corner];
    }
};

VertexJumpSet vertex_jumps(const DGField2D& field, int l);

DampingCoeffs damping_coeffs_2d(const DGField2D& u, const DGField2D& v, const SolverConfig& config);

struct State2D {
    DGField2D u;
    DGField2D v;
};

State2D operator+(const State2D& a, const State2D& b);
State2D operator*(double s, const State2D& a);
double max_abs(const State2D& s);
bool all_finite(const State2D& s);

/// Semi-discrete OF-EDG operator on a periodic Cartesian mesh (chi = 0).
class Scheme2D {
public:
    Scheme2D(std::shared_ptr<const Mesh2D> mesh, SolverConfig config);

    const Mesh2D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh2D>& mesh_ptr() const { return mesh_; }
    const SolverConfig& config() const { return config_; }

    State2D initial_state(const ScalarFunction2D& u0, const ScalarFunction2D& u1) const;
    State2D zero_state() const;

    State2D rhs(const State2D& state) const;

    double linear_energy(const State2D& state) const;
    double nonlinear_energy(const State2D& state) const;
    double energy(const State2D& state) const;
    double linear_energy_rate(const State2D& state, const State2D& rate) const;

private:
    enum Face { left = 0, right = 1, bottom = 2, top = 3 };

    std::shared_ptr<const Mesh2D> mesh_;
    SolverConfig config_;
    FluxParams2D flux_;
    ReferenceMatrices ref_;
    std::vector<std::pair<int, int>> modes_;
    int nu_ = 0;  // modes of u
    int nv_ = 0;  // modes of v (a prefix of the u modes)
    QuadratureRule face_rule_;
    QuadratureRule vol_rule_;
    // face_val_[f][iq][k], face_dn_[f][iq][k] (reference derivative across the face)
    std::vector<std::vector<std::vector<double>>> face_val_;
    std::vector<std::vector<std::vector<double>>> face_dn_;
    std::vector<std::vector<double>> vol_val_;  // [qx * nq + qy][k]
    Eigen::MatrixXd ax_, ay_, bx_, by_, dx_, dy_;
    std::vector<int> mode_degree_;
    std::vector<Eigen::MatrixXd> lhs_inverse_;  // per distinct aspect ratio
    std::vector<int> lhs_index_;                // per cell

    double penalty_h(int i, int j) const;
};

}  // namespace ofedg
