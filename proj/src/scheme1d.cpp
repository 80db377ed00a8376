#include "ofedg/scheme1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofedg {

std::string to_string(FluxKind kind) {
    switch (kind) {
        case FluxKind::central: return "C";
        case FluxKind::alternating: return "A";
        case FluxKind::sommerfeld: return "S";
        case FluxKind::custom: return "custom";
    }
    return "custom";
}

FluxKind flux_kind_from_string(const std::string& name) {
    if (name == "C" || name == "central") return FluxKind::central;
    if (name == "A" || name == "alternating") return FluxKind::alternating;
    if (name == "S" || name == "sommerfeld") return FluxKind::sommerfeld;
    if (name == "custom") return FluxKind::custom;
    throw std::invalid_argument("unknown flux '" + name + "'");
}

FluxParams FluxParams::central() { return {FluxKind::central, 0.5, 0.0, 0.0, 0.0}; }

FluxParams FluxParams::alternating(double alpha) {
    if (alpha != 0.0 && alpha != 1.0) throw std::invalid_argument("alternating flux needs alpha = 0 or 1");
    return {FluxKind::alternating, alpha, 0.0, 0.0, 0.0};
}

FluxParams FluxParams::sommerfeld(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("Sommerfeld flux needs s > 0");
    return {FluxKind::sommerfeld, 0.5, 0.5 * s, 0.5 / s, s};
}

FluxParams FluxParams::custom(double alpha, double tau, double beta) {
    FluxParams fp{FluxKind::custom, alpha, tau, beta, 0.0};
    fp.validate();
    return fp;
}

void FluxParams::validate() const {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("flux alpha must lie in [0, 1]");
    if (tau < 0.0 || beta < 0.0) throw std::invalid_argument("flux tau and beta must be nonnegative");
}

InterfaceFlux numerical_fluxes(double v_minus, double v_plus, double ux_minus, double ux_plus,
                               const FluxParams& fp) {
    InterfaceFlux f;
    f.v_hat = fp.alpha * v_plus + (1.0 - fp.alpha) * v_minus + fp.tau * (ux_plus - ux_minus);
    f.ux_hat = (1.0 - fp.alpha) * ux_plus + fp.alpha * ux_minus + fp.beta * (v_plus - v_minus);
    return f;
}

void SolverConfig::validate() const {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (q > p || q < p - 2) throw std::invalid_argument("q must satisfy p - 2 <= q <= p");
    if (c < 0.0) throw std::invalid_argument("penalty c must be nonnegative");
    if (chi != 0 && chi != 1) throw std::invalid_argument("chi must be 0 or 1");
    flux.validate();
}

// ---------------------------------------------------------------------------

DampingCoeffs damping_coeffs_1d(const Mesh1D& mesh, const std::vector<Trace>& u_traces,
                                const std::vector<Trace>& v_traces, int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("damping_coeffs_1d: need p >= 2 and q >= 1");
    const int n = mesh.cells();
    DampingCoeffs d;
    d.sigma.assign(n, std::vector<double>(p + 1, 0.0));
    d.sigma_tilde.assign(n, std::vector<double>(q + 1, 0.0));
    for (int j = 0; j < n; ++j) {
        const double h = mesh.size(j);
        const Trace& tl = u_traces[j];
        const Trace& tr = u_traces[j + 1];
        double hl = h;  // h^l
        double fact = 1.0;
        for (int l = 1; l <= p; ++l) {
            fact *= l;
            const double jl = l < static_cast<int>(tl.left.size()) ? tl.jump(l) : 0.0;
            const double jr = l < static_cast<int>(tr.left.size()) ? tr.jump(l) : 0.0;
            d.sigma[j][l] = 2.0 * (2 * l + 1) / (2 * p - 1) * hl / fact * std::sqrt(jl * jl + jr * jr);
            hl *= h;
        }
        const Trace& sl = v_traces[j];
        const Trace& sr = v_traces[j + 1];
        hl = h;  // h^{l+1}
        fact = 1.0;
        for (int l = 0; l <= q; ++l) {
            if (l > 0) fact *= l;
            const double jl = l < static_cast<int>(sl.left.size()) ? sl.jump(l) : 0.0;
            const double jr = l < static_cast<int>(sr.left.size()) ? sr.jump(l) : 0.0;
            d.sigma_tilde[j][l] = 2.0 * (2 * l + 1) / (2 * q - 1) * hl / fact * std::sqrt(jl * jl + jr * jr);
            hl *= h;
        }
    }
    return d;
}

DampingCoeffs damping_coeffs_1d(const DGField1D& u, const DGField1D& v, const SolverConfig& config) {
    return damping_coeffs_1d(u.mesh(), interface_traces(u, config.p), interface_traces(v, config.q), config.p,
                             config.q);
}

// ---------------------------------------------------------------------------

State1D operator+(const State1D& a, const State1D& b) {
    State1D r = a;
    for (std::size_t i = 0; i < r.u.coeffs().size(); ++i) r.u.coeffs()[i] += b.u.coeffs()[i];
    for (std::size_t i = 0; i < r.v.coeffs().size(); ++i) r.v.coeffs()[i] += b.v.coeffs()[i];
    return r;
}

State1D operator*(double s, const State1D& a) {
    State1D r = a;
    for (double& x : r.u.coeffs()) x *= s;
    for (double& x : r.v.coeffs()) x *= s;
    return r;
}

double max_abs(const State1D& s) {
    double m = 0.0;
    for (double x : s.u.coeffs()) m = std::max(m, std::abs(x));
    for (double x : s.v.coeffs()) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(const State1D& s) {
    auto finite = [](const std::vector<double>& c) {
        return std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); });
    };
    return finite(s.u.coeffs()) && finite(s.v.coeffs());
}

// ---------------------------------------------------------------------------

Scheme1D::Scheme1D(std::shared_ptr<const Mesh1D> mesh, SolverConfig config)
    : mesh_(std::move(mesh)), config_(std::move(config)), ref_(std::max(config_.p, config_.q)) {
    config_.validate();
    quad_ = gauss_rule(static_cast<std::size_t>(config_.volume_points()));
    for (double xi : quad_.nodes) phi_at_quad_.push_back(legendre_table(config_.p, xi, 0)[0]);
    const int p = config_.p;
    Eigen::MatrixXd k(p, p);
    for (int m = 1; m <= p; ++m) {
        for (int n = 1; n <= p; ++n) k(m - 1, n - 1) = ref_.stiff[m][n];
    }
    stiff_llt_.compute(k);
    if (stiff_llt_.info() != Eigen::Success) throw std::runtime_error("Scheme1D: singular reference stiffness");
}

State1D Scheme1D::initial_state(const ScalarFunction1D& u0, const ScalarFunction1D& u1) const {
    const int n = config_.volume_points();
    return {project_initial(u0, mesh_, config_.p, n), project_initial(u1, mesh_, config_.q, n)};
}

State1D Scheme1D::zero_state() const { return {DGField1D(mesh_, config_.p), DGField1D(mesh_, config_.q)}; }

double Scheme1D::penalty_h(int j) const {
    return config_.penalty_scale == PenaltyScale::global ? mesh_->h() : mesh_->size(j);
}

State1D Scheme1D::rhs(const State1D& state) const {
    const auto u_traces = interface_traces(state.u, config_.p);
    const auto v_traces = interface_traces(state.v, config_.q);
    std::vector<InterfaceFlux> fluxes(u_traces.size());
    // On mirrored Neumann boundaries alpha = 1/2, so that ux_hat = 0 for every flux family.
    FluxParams wall = config_.flux;
    wall.alpha = 0.5;
    const bool neumann = mesh_->boundary() == BoundaryKind::neumann;
    for (std::size_t i = 0; i < u_traces.size(); ++i) {
        const bool on_wall = neumann && (i == 0 || i + 1 == u_traces.size());
        fluxes[i] = numerical_fluxes(v_traces[i].left[0], v_traces[i].right[0], u_traces[i].left[1],
                                     u_traces[i].right[1], on_wall ? wall : config_.flux);
    }
    DampingCoeffs damping;
    if (config_.damping) damping = damping_coeffs_1d(*mesh_, u_traces, v_traces, config_.p, config_.q);
    const DampingCoeffs* dp = config_.damping ? &damping : nullptr;

    State1D out{solve_ut(state, fluxes, u_traces, dp), solve_vt(state, fluxes, dp)};
    if (config_.chi == 1 && config_.source.active()) out.u = chi_source_correction(state, out.u);
    return out;
}

DGField1D Scheme1D::solve_ut(const State1D& state, const std::vector<InterfaceFlux>& fluxes,
                             const std::vector<Trace>& u_traces, const DampingCoeffs* damping) const {
    const int p = config_.p;
    const int q = config_.q;
    const int n = mesh_->cells();
    const auto& ev = ref_.end_value;  // [side][r][m]
    DGField1D ut(mesh_, p);
    Eigen::VectorXd rhs(p);
    std::vector<double> ux_coeffs;
    for (int j = 0; j < n; ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        const auto v = state.v.cell(j);
        const double vl = state.v.eval_local(j, -1.0);
        const double vr = state.v.eval_local(j, 1.0);
        const double jump_l = u_traces[j].jump(0);
        const double jump_r = u_traces[j + 1].jump(0);
        const double pen = config_.penalty ? config_.c / (penalty_h(j) * penalty_h(j)) : 0.0;

        // Legendre coefficients of (u_h)_x and their damping weights.
        std::vector<double> weight(p + 1, 0.0);
        if (damping) {
            ux_coeffs = differentiate_series({u.begin(), u.end()});
            for (double& e : ux_coeffs) e *= 2.0 / h;
            for (int l = 1; l <= p; ++l) {
                for (int nn = std::max(l - 1, 0) + 1; nn <= p; ++nn) weight[nn] += (*damping).sigma[j][l];
            }
        }

        for (int m = 1; m <= p; ++m) {
            double r = 0.0;
            for (int nn = 1; nn <= q; ++nn) r += (2.0 / h) * v[nn] * ref_.stiff[nn][m];
            r += (fluxes[j + 1].v_hat - vr) * ev[1][1][m] * (2.0 / h);
            r -= (fluxes[j].v_hat - vl) * ev[0][1][m] * (2.0 / h);
            r += pen * (jump_r * ev[1][0][m] - jump_l * ev[0][0][m]);
            if (damping) {
                for (int nn = 1; nn < p; ++nn) r -= weight[nn] / h * ux_coeffs[nn] * ref_.mixed[nn][m];
            }
            rhs(m - 1) = r;
        }
        const Eigen::VectorXd w = stiff_llt_.solve(rhs) * (0.5 * h);
        auto out = ut.cell(j);
        out[0] = v[0];
        for (int m = 1; m <= p; ++m) out[m] = w(m - 1);
    }
    return ut;
}

DGField1D Scheme1D::chi_source_correction(const State1D& state, const DGField1D& candidate) const {
    if (config_.chi == 0 || !config_.source.active()) return candidate;
    const int p = config_.p;
    const int q = config_.q;
    const int n = mesh_->cells();
    DGField1D ut = candidate;
    Eigen::MatrixXd a(p, p);
    Eigen::MatrixXd m_rho(p + 1, p + 1);
    Eigen::VectorXd rhs(p);
    for (int j = 0; j < n; ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        const auto v = state.v.cell(j);
        const auto w0 = candidate.cell(j);
        m_rho.setZero();
        for (std::size_t iq = 0; iq < quad_.size(); ++iq) {
            const auto& phi = phi_at_quad_[iq];
            double uq = 0.0;
            for (int k = 0; k <= p; ++k) uq += u[k] * phi[k];
            const double wr = 0.5 * h * quad_.weights[iq] * config_.source.g_over_u(uq);
            for (int a1 = 0; a1 <= p; ++a1) {
                for (int b1 = 0; b1 <= p; ++b1) m_rho(a1, b1) += wr * phi[a1] * phi[b1];
            }
        }
        // (2/h) K w - chi M_rho (w - v) = (2/h) K w0, with w_0 = v_0 known.
        for (int m = 1; m <= p; ++m) {
            double r = 0.0;
            for (int k = 1; k <= p; ++k) {
                r += (2.0 / h) * ref_.stiff[m][k] * w0[k];
                a(m - 1, k - 1) = (2.0 / h) * ref_.stiff[m][k] - m_rho(m, k);
                const double vk = k <= q ? v[k] : 0.0;
                r -= m_rho(m, k) * vk;
            }
            rhs(m - 1) = r;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
        if (std::abs(lu.determinant()) < 1e-300) {
            throw std::runtime_error("chi_source_correction: singular local system in cell " + std::to_string(j));
        }
        const Eigen::VectorXd w = lu.solve(rhs);
        auto out = ut.cell(j);
        for (int m = 1; m <= p; ++m) out[m] = w(m - 1);
    }
    return ut;
}

DGField1D Scheme1D::solve_vt(const State1D& state, const std::vector<InterfaceFlux>& fluxes,
                             const DampingCoeffs* damping) const {
    const int p = config_.p;
    const int q = config_.q;
    const int n = mesh_->cells();
    const auto& ev = ref_.end_value;
    const bool source = config_.source.active();
    DGField1D vt(mesh_, q);
    std::vector<double> gq(quad_.size());
    for (int j = 0; j < n; ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        const auto v = state.v.cell(j);
        if (source) {
            for (std::size_t iq = 0; iq < quad_.size(); ++iq) {
                double uq = 0.0;
                for (int k = 0; k <= p; ++k) uq += u[k] * phi_at_quad_[iq][k];
                gq[iq] = config_.source.g(uq);
            }
        }
        auto out = vt.cell(j);
        for (int m = 0; m <= q; ++m) {
            double r = 0.0;
            for (int k = 1; k <= p; ++k) r -= (2.0 / h) * u[k] * ref_.stiff[k][m];
            r += fluxes[j + 1].ux_hat * ev[1][0][m] - fluxes[j].ux_hat * ev[0][0][m];
            if (source) {
                for (std::size_t iq = 0; iq < quad_.size(); ++iq) {
                    r += 0.5 * h * quad_.weights[iq] * gq[iq] * phi_at_quad_[iq][m];
                }
            }
            const double mass = h / (2 * m + 1);
            double val = r / mass;
            if (damping) {
                double w = 0.0;
                for (int l = 0; l <= q; ++l) {
                    if (m > std::max(l - 1, 0)) w += (*damping).sigma_tilde[j][l];
                }
                val -= w / h * v[m];
            }
            out[m] = val;
        }
    }
    return vt;
}

double Scheme1D::linear_energy(const State1D& state) const {
    double e = 0.0;
    for (int j = 0; j < mesh_->cells(); ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        const auto v = state.v.cell(j);
        for (int a = 1; a <= config_.p; ++a) {
            for (int b = 1; b <= config_.p; ++b) e += (2.0 / h) * u[a] * u[b] * ref_.stiff[a][b];
        }
        for (int m = 0; m <= config_.q; ++m) e += v[m] * v[m] * h / (2 * m + 1);
    }
    return e;
}

double Scheme1D::nonlinear_energy(const State1D& state) const {
    double e = 0.5 * linear_energy(state);
    if (!config_.source.potential) return e;
    for (int j = 0; j < mesh_->cells(); ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        for (std::size_t iq = 0; iq < quad_.size(); ++iq) {
            double uq = 0.0;
            for (int k = 0; k <= config_.p; ++k) uq += u[k] * phi_at_quad_[iq][k];
            e += 0.5 * h * quad_.weights[iq] * config_.source.potential(uq);
        }
    }
    return e;
}

double Scheme1D::energy(const State1D& state) const {
    return config_.source.active() ? nonlinear_energy(state) : linear_energy(state);
}

double Scheme1D::linear_energy_rate(const State1D& state, const State1D& rate) const {
    double e = 0.0;
    for (int j = 0; j < mesh_->cells(); ++j) {
        const double h = mesh_->size(j);
        const auto u = state.u.cell(j);
        const auto w = rate.u.cell(j);
        const auto v = state.v.cell(j);
        const auto vt = rate.v.cell(j);
        for (int a = 1; a <= config_.p; ++a) {
            for (int b = 1; b <= config_.p; ++b) e += (2.0 / h) * u[a] * w[b] * ref_.stiff[a][b];
        }
        for (int m = 0; m <= config_.q; ++m) e += v[m] * vt[m] * h / (2 * m + 1);
    }
    return 2.0 * e;
}

}  // namespace ofedg
