#include "ofedg/scheme2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofedg {

FaceFlux fluxes_2d(const FaceState& s, const FluxParams2D& fp, const Vec2& n) {
    const Vec2 z = fp.zeta();
    const double zn_minus = z[0] * n[0] + z[1] * n[1];
    const double zn_plus = -zn_minus;
    const double g_minus = s.grad_minus[0] * n[0] + s.grad_minus[1] * n[1];
    const double g_plus = s.grad_plus[0] * n[0] + s.grad_plus[1] * n[1];
    // [[v]] . n = v- - v+,  [[grad u]] = g- - g+
    FaceFlux f;
    f.grad_hat_n = 0.5 * (g_plus + g_minus) - (zn_plus * g_plus + zn_minus * g_minus) -
                   fp.base.beta * (s.v_minus - s.v_plus);
    f.v_hat = 0.5 * (s.v_plus + s.v_minus) + zn_minus * (s.v_minus - s.v_plus) - fp.base.tau * (g_minus - g_plus);
    return f;
}

std::vector<std::pair<int, int>> multi_indices(int l) {
    std::vector<std::pair<int, int>> out;
    for (int a = l; a >= 0; --a) out.emplace_back(a, l - a);
    return out;
}

namespace {

constexpr int kCornerSx[4] = {-1, 1, -1, 1};
constexpr int kCornerSy[4] = {-1, -1, 1, 1};

int corner_index(int sx, int sy) { return (sx > 0 ? 1 : 0) + (sy > 0 ? 2 : 0); }

/// d^alpha w at the four corners of every cell: [cell][alpha][corner].
std::vector<double> corner_derivatives(const DGField2D& field, const std::vector<std::pair<int, int>>& alphas) {
    const Mesh2D& m = field.mesh();
    const int k = field.degree();
    const auto& modes = field.mode_list();
    const auto lo = legendre_table(k, -1.0, k);
    const auto hi = legendre_table(k, 1.0, k);
    std::vector<double> out(static_cast<std::size_t>(m.cells()) * alphas.size() * 4, 0.0);
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            const auto coeffs = field.cell(c);
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                const auto [rx, ry] = alphas[a];
                const double scale = std::pow(2.0 / m.hx(i), rx) * std::pow(2.0 / m.hy(j), ry);
                for (int corner = 0; corner < 4; ++corner) {
                    const auto& tx = kCornerSx[corner] > 0 ? hi : lo;
                    const auto& ty = kCornerSy[corner] > 0 ? hi : lo;
                    double s = 0.0;
                    if (rx <= k && ry <= k) {
                        for (std::size_t mm = 0; mm < modes.size(); ++mm) {
                            s += coeffs[mm] * tx[rx][modes[mm].first] * ty[ry][modes[mm].second];
                        }
                    }
                    out[(static_cast<std::size_t>(c) * alphas.size() + a) * 4 + corner] = s * scale;
                }
            }
        }
    }
    return out;
}

/// Per cell: sum_{|alpha| = l} sqrt( (1/4) sum_v [[d^alpha w]]_v^2 ).
std::vector<double> jump_measure(const DGField2D& field, int l) {
    const VertexJumpSet set = vertex_jumps(field, l);
    const int cells = field.mesh().cells();
    std::vector<double> out(cells, 0.0);
    for (int c = 0; c < cells; ++c) {
        for (std::size_t a = 0; a < set.alphas.size(); ++a) {
            double s = 0.0;
            for (int corner = 0; corner < 4; ++corner) s += set.at(c, static_cast<int>(a), corner);
            out[c] += std::sqrt(0.25 * s);
        }
    }
    return out;
}

}  // namespace

VertexJumpSet vertex_jumps(const DGField2D& field, int l) {
    const Mesh2D& m = field.mesh();
    VertexJumpSet set;
    set.order = l;
    set.alphas = multi_indices(l);
    const std::size_t na = set.alphas.size();
    const auto vals = corner_derivatives(field, set.alphas);
    auto value = [&](int c, std::size_t a, int corner) { return vals[(static_cast<std::size_t>(c) * na + a) * 4 + corner]; };
    set.squared.assign(vals.size(), 0.0);
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            for (int corner = 0; corner < 4; ++corner) {
                const int sx = kCornerSx[corner];
                const int sy = kCornerSy[corner];
                const int cx = m.index(m.wrap_x(i + sx), j);
                const int cy = m.index(i, m.wrap_y(j + sy));
                for (std::size_t a = 0; a < na; ++a) {
                    const double own = value(c, a, corner);
                    const double dx = own - value(cx, a, corner_index(-sx, sy));
                    const double dy = own - value(cy, a, corner_index(sx, -sy));
                    set.squared[(static_cast<std::size_t>(c) * na + a) * 4 + corner] = dx * dx + dy * dy;
                }
            }
        }
    }
    return set;
}

DampingCoeffs damping_coeffs_2d(const DGField2D& u, const DGField2D& v, const SolverConfig& config) {
    const int p = config.p;
    const int q = config.q;
    if (p < 2 || q < 1) throw std::invalid_argument("damping_coeffs_2d: need p >= 2 and q >= 1");
    const Mesh2D& m = u.mesh();
    const int cells = m.cells();
    DampingCoeffs d;
    d.sigma.assign(cells, std::vector<double>(p + 1, 0.0));
    d.sigma_tilde.assign(cells, std::vector<double>(q + 1, 0.0));
    double fact = 1.0;
    for (int l = 1; l <= p; ++l) {
        fact *= l;
        const auto jm = jump_measure(u, l);
        for (int j = 0; j < m.ny(); ++j) {
            for (int i = 0; i < m.nx(); ++i) {
                const int c = m.index(i, j);
                d.sigma[c][l] = 2.0 * (2 * l + 1) / (2 * p - 1) * std::pow(m.diag(i, j), l) / fact * jm[c];
            }
        }
    }
    fact = 1.0;  // (l+1)!
    for (int l = 0; l <= q; ++l) {
        fact *= (l + 1);
        const auto jm = jump_measure(v, l);
        for (int j = 0; j < m.ny(); ++j) {
            for (int i = 0; i < m.nx(); ++i) {
                const int c = m.index(i, j);
                d.sigma_tilde[c][l] = 2.0 * (2 * l + 1) / (2 * q - 1) * std::pow(m.diag(i, j), l + 1) / fact * jm[c];
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------

State2D operator+(const State2D& a, const State2D& b) {
    State2D r = a;
    for (std::size_t i = 0; i < r.u.coeffs().size(); ++i) r.u.coeffs()[i] += b.u.coeffs()[i];
    for (std::size_t i = 0; i < r.v.coeffs().size(); ++i) r.v.coeffs()[i] += b.v.coeffs()[i];
    return r;
}

State2D operator*(double s, const State2D& a) {
    State2D r = a;
    for (double& x : r.u.coeffs()) x *= s;
    for (double& x : r.v.coeffs()) x *= s;
    return r;
}

double max_abs(const State2D& s) {
    double m = 0.0;
    for (double x : s.u.coeffs()) m = std::max(m, std::abs(x));
    for (double x : s.v.coeffs()) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(const State2D& s) {
    auto finite = [](const std::vector<double>& c) {
        return std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); });
    };
    return finite(s.u.coeffs()) && finite(s.v.coeffs());
}

// ---------------------------------------------------------------------------

Scheme2D::Scheme2D(std::shared_ptr<const Mesh2D> mesh, SolverConfig config)
    : mesh_(std::move(mesh)), config_(std::move(config)), flux_(config_.flux), ref_(config_.p) {
    config_.validate();
    if (config_.chi != 0) throw std::invalid_argument("Scheme2D: only chi = 0 is supported in two dimensions");
    const int p = config_.p;
    modes_ = modes_2d(p);
    nu_ = static_cast<int>(modes_.size());
    nv_ = mode_count_2d(config_.q);
    mode_degree_.resize(nu_);
    for (int k = 0; k < nu_; ++k) mode_degree_[k] = modes_[k].first + modes_[k].second;

    face_rule_ = gauss_rule(static_cast<std::size_t>(p + 3));
    vol_rule_ = gauss_rule(static_cast<std::size_t>(config_.volume_points()));
    const std::size_t nf = face_rule_.size();
    face_val_.assign(4, std::vector<std::vector<double>>(nf, std::vector<double>(nu_)));
    face_dn_ = face_val_;
    const auto lo = legendre_table(p, -1.0, 1);
    const auto hi = legendre_table(p, 1.0, 1);
    for (std::size_t iq = 0; iq < nf; ++iq) {
        const auto t = legendre_table(p, face_rule_.nodes[iq], 1);
        for (int k = 0; k < nu_; ++k) {
            const auto [a, b] = modes_[k];
            face_val_[left][iq][k] = lo[0][a] * t[0][b];
            face_dn_[left][iq][k] = lo[1][a] * t[0][b];
            face_val_[right][iq][k] = hi[0][a] * t[0][b];
            face_dn_[right][iq][k] = hi[1][a] * t[0][b];
            face_val_[bottom][iq][k] = t[0][a] * lo[0][b];
            face_dn_[bottom][iq][k] = t[0][a] * lo[1][b];
            face_val_[top][iq][k] = t[0][a] * hi[0][b];
            face_dn_[top][iq][k] = t[0][a] * hi[1][b];
        }
    }
    const std::size_t nq = vol_rule_.size();
    vol_val_.assign(nq * nq, std::vector<double>(nu_));
    for (std::size_t qx = 0; qx < nq; ++qx) {
        const auto tx = legendre_table(p, vol_rule_.nodes[qx], 0)[0];
        for (std::size_t qy = 0; qy < nq; ++qy) {
            const auto ty = legendre_table(p, vol_rule_.nodes[qy], 0)[0];
            for (int k = 0; k < nu_; ++k) vol_val_[qx * nq + qy][k] = tx[modes_[k].first] * ty[modes_[k].second];
        }
    }

    ax_.resize(nu_, nu_);
    ay_.resize(nu_, nu_);
    bx_.resize(nu_, nu_);
    by_.resize(nu_, nu_);
    dx_.setZero(nu_, nu_);
    dy_.setZero(nu_, nu_);
    for (int m = 0; m < nu_; ++m) {
        const auto [am, bm] = modes_[m];
        for (int k = 0; k < nu_; ++k) {
            const auto [ak, bk] = modes_[k];
            const double mx = am == ak ? ref_.mass[am] : 0.0;
            const double my = bm == bk ? ref_.mass[bm] : 0.0;
            ax_(m, k) = ref_.stiff[am][ak] * my;
            ay_(m, k) = mx * ref_.stiff[bm][bk];
            bx_(m, k) = ref_.mixed[am][ak] * my;
            by_(m, k) = mx * ref_.mixed[bm][bk];
            // d/dxi (P_a P_b) = sum_{n = a-1, a-3, ...} (2n+1) P_n P_b
            if (bm == bk && ak > am && (ak - am) % 2 == 1) dx_(m, k) = 2 * am + 1;
            if (am == ak && bk > bm && (bk - bm) % 2 == 1) dy_(m, k) = 2 * bm + 1;
        }
    }

    // Local stiffness on nonconstant modes depends only on hy / hx.
    std::vector<double> ratios;
    lhs_index_.resize(mesh_->cells());
    for (int j = 0; j < mesh_->ny(); ++j) {
        for (int i = 0; i < mesh_->nx(); ++i) {
            const double r = mesh_->hy(j) / mesh_->hx(i);
            auto it = std::find_if(ratios.begin(), ratios.end(), [r](double x) { return std::abs(x - r) <= 1e-14 * r; });
            if (it == ratios.end()) {
                ratios.push_back(r);
                const Eigen::MatrixXd a = (r * ax_ + ay_ / r).bottomRightCorner(nu_ - 1, nu_ - 1);
                lhs_inverse_.push_back(a.inverse());
                it = ratios.end() - 1;
            }
            lhs_index_[mesh_->index(i, j)] = static_cast<int>(it - ratios.begin());
        }
    }
}

State2D Scheme2D::initial_state(const ScalarFunction2D& u0, const ScalarFunction2D& u1) const {
    const int n = config_.volume_points();
    return {project_initial_2d(u0, mesh_, config_.p, n), project_initial_2d(u1, mesh_, config_.q, n)};
}

State2D Scheme2D::zero_state() const { return {DGField2D(mesh_, config_.p), DGField2D(mesh_, config_.q)}; }

double Scheme2D::penalty_h(int i, int j) const {
    return config_.penalty_scale == PenaltyScale::global ? mesh_->h() : mesh_->diag(i, j);
}

State2D Scheme2D::rhs(const State2D& state) const {
    const Mesh2D& m = *mesh_;
    const int cells = m.cells();
    const std::size_t nf = face_rule_.size();
    const std::size_t slot = 4 * nf;

    // Face traces: value, outward normal derivative, v value.
    std::vector<double> tu(cells * slot), tun(cells * slot), tv(cells * slot);
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            const auto uc = state.u.cell(c);
            const auto vc = state.v.cell(c);
            for (int f = 0; f < 4; ++f) {
                const double dn = (f == left || f == bottom ? -1.0 : 1.0) * 2.0 / (f < 2 ? m.hx(i) : m.hy(j));
                for (std::size_t iq = 0; iq < nf; ++iq) {
                    const auto& val = face_val_[f][iq];
                    const auto& der = face_dn_[f][iq];
                    double su = 0.0, sd = 0.0, sv = 0.0;
                    for (int k = 0; k < nu_; ++k) {
                        su += uc[k] * val[k];
                        sd += uc[k] * der[k];
                    }
                    for (int k = 0; k < nv_; ++k) sv += vc[k] * val[k];
                    const std::size_t at = c * slot + f * nf + iq;
                    tu[at] = su;
                    tun[at] = sd * dn;
                    tv[at] = sv;
                }
            }
        }
    }

    DampingCoeffs damping;
    if (config_.damping) damping = damping_coeffs_2d(state.u, state.v, config_);

    State2D out = zero_state();
    const bool source = config_.source.active();
    const std::size_t nq = vol_rule_.size();
    Eigen::VectorXd ru(nu_), rv(nv_), uc_vec(nu_), ex(nu_), ey(nu_);
    std::vector<double> weight_u(nu_), weight_v(nv_);
    constexpr int opposite[4] = {right, left, top, bottom};
    const double z = flux_.zeta()[0];

    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            const double hx = m.hx(i);
            const double hy = m.hy(j);
            const double r = hy / hx;
            const auto uc = state.u.cell(c);
            const auto vc = state.v.cell(c);
            ru.setZero();
            rv.setZero();

            // Volume: int grad v . grad phi and -int grad u . grad phi.
            for (int k = 1; k < nu_; ++k) {
                double s = 0.0;
                for (int mm = 0; mm < nv_; ++mm) s += vc[mm] * (r * ax_(mm, k) + ay_(mm, k) / r);
                ru(k) = s;
            }
            for (int k = 0; k < nv_; ++k) {
                double s = 0.0;
                for (int mm = 0; mm < nu_; ++mm) s += uc[mm] * (r * ax_(mm, k) + ay_(mm, k) / r);
                rv(k) = -s;
            }

            const double pen = config_.penalty ? config_.c / std::pow(penalty_h(i, j), 2) : 0.0;
            const int nbr[4] = {m.index(m.wrap_x(i - 1), j), m.index(m.wrap_x(i + 1), j),
                                m.index(i, m.wrap_y(j - 1)), m.index(i, m.wrap_y(j + 1))};
            for (int f = 0; f < 4; ++f) {
                const double sign = (f == left || f == bottom) ? -1.0 : 1.0;
                const double h_normal = f < 2 ? hx : hy;
                const double h_tangent = f < 2 ? hy : hx;
                const double zn = z * sign;  // zeta . n with zeta = z (1, 1)
                const int o = nbr[f];
                const int fo = opposite[f];
                for (std::size_t iq = 0; iq < nf; ++iq) {
                    const std::size_t in = c * slot + f * nf + iq;
                    const std::size_t out_at = o * slot + fo * nf + iq;
                    const double um = tu[in], up = tu[out_at];
                    const double gm = tun[in], gp = -tun[out_at];
                    const double vm = tv[in], vp = tv[out_at];
                    const double g_hat = 0.5 * (gp + gm) + zn * gp - zn * gm - config_.flux.beta * (vm - vp);
                    const double v_hat = 0.5 * (vp + vm) + zn * (vm - vp) - config_.flux.tau * (gm - gp);
                    const double ds = 0.5 * h_tangent * face_rule_.weights[iq];
                    const double a1 = ds * (v_hat - vm) * sign * 2.0 / h_normal;
                    const double a2 = ds * pen * (up - um);
                    const double a3 = ds * g_hat;
                    const auto& val = face_val_[f][iq];
                    const auto& der = face_dn_[f][iq];
                    for (int k = 1; k < nu_; ++k) ru(k) += a1 * der[k] + a2 * val[k];
                    for (int k = 0; k < nv_; ++k) rv(k) += a3 * val[k];
                }
            }

            if (config_.damping) {
                const double hd = m.diag(i, j);
                std::fill(weight_u.begin(), weight_u.end(), 0.0);
                std::fill(weight_v.begin(), weight_v.end(), 0.0);
                for (int l = 1; l <= config_.p; ++l) {
                    for (int k = 0; k < nu_; ++k) {
                        if (mode_degree_[k] > std::max(l - 1, 0)) weight_u[k] += damping.sigma[c][l];
                    }
                }
                for (int l = 0; l <= config_.q; ++l) {
                    for (int k = 0; k < nv_; ++k) {
                        if (mode_degree_[k] > std::max(l - 1, 0)) weight_v[k] += damping.sigma_tilde[c][l];
                    }
                }
                for (int k = 0; k < nu_; ++k) uc_vec(k) = uc[k];
                ex = (2.0 / hx) * (dx_ * uc_vec);
                ey = (2.0 / hy) * (dy_ * uc_vec);
                for (int k = 1; k < nu_; ++k) {
                    double s = 0.0;
                    for (int mm = 0; mm < nu_; ++mm) {
                        s += weight_u[mm] * (0.5 * hy * ex(mm) * bx_(mm, k) + 0.5 * hx * ey(mm) * by_(mm, k));
                    }
                    ru(k) -= s / hd;
                }
                for (int k = 0; k < nv_; ++k) weight_v[k] /= hd;
            }

            if (source) {
                const double jac = 0.25 * hx * hy;
                for (std::size_t iq = 0; iq < nq * nq; ++iq) {
                    const auto& phi = vol_val_[iq];
                    double uq = 0.0;
                    for (int k = 0; k < nu_; ++k) uq += uc[k] * phi[k];
                    const double w = jac * vol_rule_.weights[iq / nq] * vol_rule_.weights[iq % nq] * config_.source.g(uq);
                    for (int k = 0; k < nv_; ++k) rv(k) += w * phi[k];
                }
            }

            auto ut = out.u.cell(c);
            auto vt = out.v.cell(c);
            ut[0] = vc[0];
            const Eigen::VectorXd w = lhs_inverse_[lhs_index_[c]] * ru.tail(nu_ - 1);
            for (int k = 1; k < nu_; ++k) ut[k] = w(k - 1);
            for (int k = 0; k < nv_; ++k) {
                const auto [a, b] = modes_[k];
                const double mass = 0.25 * hx * hy * ref_.mass[a] * ref_.mass[b];
                vt[k] = rv(k) / mass;
                if (config_.damping) vt[k] -= weight_v[k] * vc[k];
            }
        }
    }
    return out;
}

double Scheme2D::linear_energy(const State2D& state) const {
    const Mesh2D& m = *mesh_;
    double e = 0.0;
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            const double r = m.hy(j) / m.hx(i);
            const auto u = state.u.cell(c);
            const auto v = state.v.cell(c);
            for (int a = 0; a < nu_; ++a) {
                for (int b = 0; b < nu_; ++b) e += u[a] * u[b] * (r * ax_(a, b) + ay_(a, b) / r);
            }
            for (int k = 0; k < nv_; ++k) {
                e += v[k] * v[k] * 0.25 * m.hx(i) * m.hy(j) * ref_.mass[modes_[k].first] * ref_.mass[modes_[k].second];
            }
        }
    }
    return e;
}

double Scheme2D::nonlinear_energy(const State2D& state) const {
    double e = 0.5 * linear_energy(state);
    if (!config_.source.potential) return e;
    const Mesh2D& m = *mesh_;
    const std::size_t nq = vol_rule_.size();
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const auto u = state.u.cell(m.index(i, j));
            const double jac = 0.25 * m.hx(i) * m.hy(j);
            for (std::size_t iq = 0; iq < nq * nq; ++iq) {
                double uq = 0.0;
                for (int k = 0; k < nu_; ++k) uq += u[k] * vol_val_[iq][k];
                e += jac * vol_rule_.weights[iq / nq] * vol_rule_.weights[iq % nq] * config_.source.potential(uq);
            }
        }
    }
    return e;
}

double Scheme2D::energy(const State2D& state) const {
    return config_.source.active() ? nonlinear_energy(state) : linear_energy(state);
}

double Scheme2D::linear_energy_rate(const State2D& state, const State2D& rate) const {
    const Mesh2D& m = *mesh_;
    double e = 0.0;
    for (int j = 0; j < m.ny(); ++j) {
        for (int i = 0; i < m.nx(); ++i) {
            const int c = m.index(i, j);
            const double r = m.hy(j) / m.hx(i);
            const auto u = state.u.cell(c);
            const auto w = rate.u.cell(c);
            const auto v = state.v.cell(c);
            const auto vt = rate.v.cell(c);
            for (int a = 0; a < nu_; ++a) {
                for (int b = 0; b < nu_; ++b) e += u[a] * w[b] * (r * ax_(a, b) + ay_(a, b) / r);
            }
            for (int k = 0; k < nv_; ++k) {
                e += v[k] * vt[k] * 0.25 * m.hx(i) * m.hy(j) * ref_.mass[modes_[k].first] * ref_.mass[modes_[k].second];
            }
        }
    }
    return 2.0 * e;
}

}  // namespace ofedg
