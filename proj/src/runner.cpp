#include "ofedg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ofedg/problems.hpp"
#include "ofedg/reference.hpp"

namespace ofedg {

using json = nlohmann::ordered_json;

namespace {

std::string context(const ExperimentConfig& cfg, int cells, const std::string& flux) {
    return cfg.problem + " N=" + std::to_string(cells) + " flux=" + flux + ": ";
}

std::string dt_rule_name(const ExperimentConfig& cfg) { return cfg.dt ? "explicit" : "h^e/20"; }

json config_json(const ExperimentConfig& cfg) {
    json j = json::object();
    for (const auto& [k, v] : config_settings(cfg)) j[k] = v;
    return j;
}

json resolved_json(const ExperimentConfig& cfg) {
    const SolverConfig sc = cfg.solver_config();
    json j;
    j["dimension"] = cfg.dim();
    j["p"] = sc.p;
    j["q"] = sc.q;
    j["c"] = sc.c;
    j["chi"] = sc.chi;
    j["damping"] = sc.damping;
    j["penalty"] = sc.penalty;
    j["penalty_h"] = cfg.penalty_h;
    j["source"] = cfg.source_or_default();
    j["boundary"] = to_string(cfg.boundary_or_default());
    j["T"] = cfg.final_time_or_default();
    j["dt_rule"] = dt_rule_name(cfg);
    j["operator"] = cfg.dim() == 1 ? "u_xx" : "u_xx + u_yy";
    json fl = json::array();
    for (const auto& f : cfg.fluxes) {
        const FluxParams fp = cfg.flux_params(f);
        fl.push_back({{"kind", to_string(fp.kind)}, {"alpha", fp.alpha}, {"tau", fp.tau}, {"beta", fp.beta},
                      {"s", fp.speed}});
    }
    j["fluxes"] = fl;
    j["quadrature"] = {{"projection_points", sc.p + 3},
                       {"volume_points", sc.volume_points()},
                       {"face_points", sc.p + 3},
                       {"error_points", sc.p + 5}};
    j["energy"] = {{"linear", "int (u_x^2 + v^2)"}, {"nonlinear", "1/2 int (v^2 + u_x^2) + int G(u), G' = -g"}};
    return j;
}

json mesh_json(const Mesh1D& m) {
    return {{"N", m.cells()},          {"h", m.h()},        {"h_min", m.h_min()}, {"h_max", m.h()},
            {"seed", m.seed()},         {"perturbation", m.perturbation()}, {"a", m.a()}, {"b", m.b()}};
}

json mesh_json(const Mesh2D& m) {
    return {{"N", m.nx()}, {"nx", m.nx()}, {"ny", m.ny()}, {"h", m.h()},
            {"x", {m.x_nodes().front(), m.x_nodes().back()}},
            {"y", {m.y_nodes().front(), m.y_nodes().back()}}};
}

json plan_json(const TimePlan& plan) {
    return {{"dt", plan.dt}, {"steps", plan.steps}, {"last_dt", plan.step_size(plan.steps - 1)}};
}

json metadata(const std::string& command, const ExperimentConfig& cfg) {
    json j;
    j["version"] = kVersionTag;
    j["command"] = command;
    j["config"] = config_json(cfg);
    j["resolved"] = resolved_json(cfg);
    return j;
}

std::filesystem::path output_dir(const ExperimentConfig& cfg) {
    std::filesystem::path dir(cfg.output);
    std::filesystem::create_directories(dir);
    return dir;
}

template <class Writer>
void write_file(RunArtifact& art, const ExperimentConfig& cfg, const std::string& name, Writer&& writer) {
    if (cfg.output.empty()) return;
    const auto path = output_dir(cfg) / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    writer(out);
    art.files.push_back(path.string());
}

void finish(RunArtifact& art, const ExperimentConfig& cfg, const json& meta) {
    art.metadata_json = meta.dump(2);
    write_file(art, cfg, "metadata.json", [&](std::ostream& os) { os << art.metadata_json << '\n'; });
    write_file(art, cfg, "config.cfg", [&](std::ostream& os) { os << emit_config(cfg); });
}

std::pair<double, double> domain_x(const ExperimentConfig& cfg) {
    if (cfg.dim() == 1) {
        const auto& prob = problem_1d(cfg.problem);
        return {cfg.a.value_or(prob.a), cfg.b.value_or(prob.b)};
    }
    const auto& prob = problem_2d(cfg.problem);
    return {cfg.a.value_or(prob.ax), cfg.b.value_or(prob.bx)};
}

std::pair<double, double> domain_y(const ExperimentConfig& cfg) {
    const auto& prob = problem_2d(cfg.problem);
    return {cfg.ay.value_or(prob.ay), cfg.by.value_or(prob.by)};
}

double sum_l1(const Profile& a, const Profile& b, const std::vector<double>& weights) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.u.size(); ++i) s += weights[i] * std::abs(a.u[i] - b.u[i]);
    return s;
}

/// Bilinear interpolation on the periodic CTCS grid.
double interpolate_2d(const std::vector<double>& values, const FDGrid2D& g, double x, double y) {
    const double fx = (x - g.ax) / g.dx();
    const double fy = (y - g.ay) / g.dy();
    const int i0 = static_cast<int>(std::floor(fx));
    const int j0 = static_cast<int>(std::floor(fy));
    const double tx = fx - i0;
    const double ty = fy - j0;
    auto at = [&](int i, int j) {
        i = ((i % g.nx) + g.nx) % g.nx;
        j = ((j % g.ny) + g.ny) % g.ny;
        return values[static_cast<std::size_t>(j) * g.nx + i];
    };
    return (1 - tx) * (1 - ty) * at(i0, j0) + tx * (1 - ty) * at(i0 + 1, j0) + (1 - tx) * ty * at(i0, j0 + 1) +
           tx * ty * at(i0 + 1, j0 + 1);
}

/// Cell centres (i, j(i)) along the problem line, with j snapped to the nearest row.
std::vector<std::pair<int, int>> line_cells(const Mesh2D& mesh, const Problem2D& prob) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < mesh.nx(); ++i) {
        const double x = mesh.center_x(i);
        const double y = prob.line_y0 + (x - prob.line_x0) * prob.line_dy / prob.line_dx;
        int best = 0;
        for (int j = 1; j < mesh.ny(); ++j) {
            if (std::abs(mesh.center_y(j) - y) < std::abs(mesh.center_y(best) - y)) best = j;
        }
        cells.emplace_back(i, best);
    }
    return cells;
}

/// Arc-length coordinate along the cut, used for front positions.
std::vector<double> arc_length(const Profile& p) {
    std::vector<double> s(p.x.size(), 0.0);
    for (std::size_t i = 1; i < s.size(); ++i) s[i] = s[i - 1] + std::hypot(p.x[i] - p.x[i - 1], p.y[i] - p.y[i - 1]);
    return s;
}

/// Fronts: crossings of the half-height level of the coarse CTCS profile.
void compare_fronts(ShockResult& r, double cell_size) {
    const auto& ref = *r.ctcs_coarse;
    const auto [mn, mx] = std::minmax_element(ref.u.begin(), ref.u.end());
    r.front_level = 0.5 * (*mn + *mx);
    const std::vector<double> s = r.dg.y.empty() ? r.dg.x : arc_length(r.dg);
    r.dg_fronts = level_crossings(s, r.dg.u, r.front_level);
    r.ctcs_fronts = level_crossings(s, ref.u, r.front_level);
    r.front_tolerance = 2.0 * cell_size;
    r.fronts_agree = fronts_match(r.dg_fronts, r.ctcs_fronts, r.front_tolerance);
}

/// Piecewise-linear interpolant of the 1D CTCS grid values.
double interpolate_1d(const std::vector<double>& values, const FDGrid1D& g, double x) {
    const double f = std::clamp((x - g.a) / g.dx(), 0.0, static_cast<double>(g.intervals));
    const int i = std::min(static_cast<int>(std::floor(f)), g.intervals - 1);
    const double t = f - i;
    const int next = (g.boundary == BoundaryKind::periodic && i + 1 == g.intervals) ? 0 : i + 1;
    return (1 - t) * values[i] + t * values[next];
}

json shock_json(const ShockResult& r) {
    json j;
    j["oscillation"] = {{"overshoot", r.oscillation.overshoot},
                        {"undershoot", r.oscillation.undershoot},
                        {"total_variation", r.oscillation.total_variation}};
    j["linf_change"] = r.linf_change;
    if (r.l1_error) j["l1_error"] = *r.l1_error;
    if (r.ctcs) {
        j["fronts"] = {{"level", r.front_level},
                       {"dg", r.dg_fronts},
                       {"ctcs", r.ctcs_fronts},
                       {"tolerance", r.front_tolerance},
                       {"agree", r.fronts_agree}};
    }
    return j;
}

ShockResult shock_1d(const ExperimentConfig& cfg, json& meta) {
    const auto& prob = problem_1d(cfg.problem);
    const int n = cfg.cells_or_default().front();
    const Run1D run = run_dg_1d(cfg, n);
    const double T = run.plan.final_time;

    ShockResult r;
    std::vector<double> weights;
    for (const auto& [x, u] : midpoint_values(run.final.u)) {
        r.dg.x.push_back(x);
        r.dg.u.push_back(u);
    }
    for (const auto& [x, u] : midpoint_values(run.initial.u)) {
        r.initial.x.push_back(x);
        r.initial.u.push_back(u);
    }
    for (int j = 0; j < run.mesh->cells(); ++j) weights.push_back(run.mesh->size(j));
    for (std::size_t i = 0; i < r.dg.u.size(); ++i) r.linf_change = std::max(r.linf_change, std::abs(r.dg.u[i] - r.initial.u[i]));
    r.oscillation = oscillation_metrics(r.dg.u, prob.lower, prob.upper);
    if (prob.exact) {
        Profile ex;
        ex.x = r.dg.x;
        for (const double x : ex.x) ex.u.push_back(prob.exact->u(x, T));
        r.l1_error = sum_l1(r.dg, ex, weights);
        r.exact = ex;
    }

    json runs = json::array();
    runs.push_back({{"mesh", mesh_json(*run.mesh)}, {"time", plan_json(run.plan)}});
    meta["runs"] = runs;

    if (prob.has_ctcs_comparator) {
        const auto [a, b] = domain_x(cfg);
        const FDGrid1D grid = make_fd_grid_1d(a, b, cfg.ctcs_cells_or_default(), cfg.boundary_or_default());
        const auto values = ctcs_solve_1d(prob.u0, prob.u1, source_from_string(cfg.source_or_default()), grid, T);
        Profile c;
        for (int i = 0; i < grid.points(); ++i) {
            c.x.push_back(grid.x(i));
            c.u.push_back(values[i]);
        }
        r.ctcs = c;
        const QuadratureRule rule = gauss_rule(8);
        Profile coarse;
        for (int j = 0; j < run.mesh->cells(); ++j) {
            double avg = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                const double x = run.mesh->center(j) + 0.5 * run.mesh->size(j) * rule.nodes[k];
                avg += 0.5 * rule.weights[k] * interpolate_1d(values, grid, x);
            }
            coarse.x.push_back(run.mesh->center(j));
            coarse.u.push_back(avg);
        }
        r.ctcs_coarse = coarse;
        compare_fronts(r, run.mesh->h());
        meta["ctcs"] = {{"intervals", grid.intervals}, {"dx", grid.dx()}, {"dt_max", grid.dt},
                        {"boundary", to_string(grid.boundary)}};
    }
    return r;
}

ShockResult shock_2d(const ExperimentConfig& cfg, json& meta, RunArtifact& art) {
    const auto& prob = problem_2d(cfg.problem);
    const int n = cfg.cells_or_default().front();
    const Run2D run = run_dg_2d(cfg, n);
    const double T = run.plan.final_time;
    const Mesh2D& mesh = *run.mesh;

    ShockResult r;
    const auto grid_final = center_values(run.final.u);
    const auto grid_initial = center_values(run.initial.u);
    std::vector<double> all;
    for (int j = 0; j < mesh.ny(); ++j) {
        for (int i = 0; i < mesh.nx(); ++i) {
            all.push_back(grid_final[j][i]);
            r.linf_change = std::max(r.linf_change, std::abs(grid_final[j][i] - grid_initial[j][i]));
        }
    }
    r.oscillation = oscillation_metrics(all, prob.lower, prob.upper);
    r.oscillation.total_variation = 0.0;
    for (const auto& [i, j] : line_cells(mesh, prob)) {
        r.dg.x.push_back(mesh.center_x(i));
        r.dg.y.push_back(mesh.center_y(j));
        r.dg.u.push_back(grid_final[j][i]);
        r.initial.x.push_back(mesh.center_x(i));
        r.initial.y.push_back(mesh.center_y(j));
        r.initial.u.push_back(grid_initial[j][i]);
    }
    for (std::size_t k = 1; k < r.dg.u.size(); ++k) r.oscillation.total_variation += std::abs(r.dg.u[k] - r.dg.u[k - 1]);
    if (prob.exact) {
        Profile ex = r.dg;
        double s = 0.0;
        for (std::size_t k = 0; k < ex.u.size(); ++k) {
            ex.u[k] = prob.exact->u(ex.x[k], ex.y[k], T);
            s += std::abs(ex.u[k] - r.dg.u[k]);
        }
        r.l1_error = s * mesh.hx(0);
        r.exact = ex;
    }
    write_file(art, cfg, "solution_grid.csv", [&](std::ostream& os) { write_snapshot_csv(os, run.final.u); });
    meta["runs"] = json::array({{{"mesh", mesh_json(mesh)}, {"time", plan_json(run.plan)}}});

    if (prob.has_ctcs_comparator) {
        const auto [ax, bx] = domain_x(cfg);
        const auto [ay, by] = domain_y(cfg);
        const int m = cfg.ctcs_cells_or_default();
        const FDGrid2D grid = make_fd_grid_2d(ax, bx, ay, by, m, m);
        const auto values = ctcs_solve_2d(prob.u0, prob.u1, source_from_string(cfg.source_or_default()), grid, T);
        Profile c;
        for (std::size_t k = 0; k < r.dg.x.size(); ++k) {
            c.x.push_back(r.dg.x[k]);
            c.y.push_back(r.dg.y[k]);
            c.u.push_back(interpolate_2d(values, grid, r.dg.x[k], r.dg.y[k]));
        }
        r.ctcs = c;
        const QuadratureRule rule = gauss_rule(4);
        Profile coarse = r.dg;
        for (std::size_t k = 0; k < coarse.x.size(); ++k) {
            const int i = mesh.locate_x(coarse.x[k]);
            const int j = mesh.locate_y(coarse.y[k]);
            double avg = 0.0;
            for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
                for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
                    const double x = mesh.center_x(i) + 0.5 * mesh.hx(i) * rule.nodes[a];
                    const double y = mesh.center_y(j) + 0.5 * mesh.hy(j) * rule.nodes[b];
                    avg += 0.25 * rule.weights[a] * rule.weights[b] * interpolate_2d(values, grid, x, y);
                }
            }
            coarse.u[k] = avg;
        }
        r.ctcs_coarse = coarse;
        compare_fronts(r, mesh.hx(0) * std::hypot(1.0, prob.line_dy / prob.line_dx));
        write_file(art, cfg, "ctcs_grid.csv", [&](std::ostream& os) {
            os << "x,y,u\n" << std::setprecision(16) << std::scientific;
            for (int j = 0; j < grid.ny; ++j) {
                for (int i = 0; i < grid.nx; ++i) {
                    os << grid.x(i) << ',' << grid.y(j) << ',' << values[static_cast<std::size_t>(j) * grid.nx + i]
                       << '\n';
                }
            }
        });
        meta["ctcs"] = {{"intervals", m}, {"dx", grid.dx()}, {"dy", grid.dy()}, {"dt_max", grid.dt},
                        {"boundary", "periodic"}};
    }
    return r;
}

}  // namespace

void write_energy_csv(std::ostream& os, const EnergyTrace& trace) {
    const bool nl = !trace.nonlinear_energy.empty();
    os << (nl ? "time,energy,nonlinear_energy\n" : "time,energy\n") << std::setprecision(16) << std::scientific;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        os << trace.times[i] << ',' << trace.energy[i];
        if (nl) os << ',' << trace.nonlinear_energy[i];
        os << '\n';
    }
}

void write_profile_csv(std::ostream& os, const Profile& p) {
    const bool two = !p.y.empty();
    os << (two ? "x,y,u\n" : "x,u\n") << std::setprecision(16) << std::scientific;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        os << p.x[i] << ',';
        if (two) os << p.y[i] << ',';
        os << p.u[i] << '\n';
    }
}

Run1D run_dg_1d(const ExperimentConfig& cfg, int cells, const std::string& flux, bool record_energy) {
    const auto& prob = problem_1d(cfg.problem);
    const auto [a, b] = domain_x(cfg);
    const std::string fname = flux.empty() ? cfg.fluxes.front() : flux;
    Mesh1D mesh = uniform_mesh_1d(a, b, cells, cfg.boundary_or_default());
    if (cfg.perturb > 0.0) mesh = perturb_mesh_1d(mesh, cfg.perturb, cfg.seed);

    Run1D run;
    run.mesh = std::make_shared<const Mesh1D>(std::move(mesh));
    run.solver = cfg.solver_config(fname);
    const Scheme1D scheme(run.mesh, run.solver);
    const double dt = cfg.dt ? *cfg.dt : dt_rule(run.solver.p, run.mesh->h());
    run.plan = make_time_plan(cfg.final_time_or_default(), dt, dt_rule_name(cfg));
    run.initial = scheme.initial_state(prob.u0, prob.u1);

    std::function<double(const State1D&)> energy, nonlinear;
    if (record_energy) {
        energy = [&](const State1D& s) { return scheme.linear_energy(s); };
        if (run.solver.source.active()) nonlinear = [&](const State1D& s) { return scheme.nonlinear_energy(s); };
    }
    IntegrateOptions opt;
    opt.sample_every = cfg.energy_every;
    try {
        run.final = integrate(run.initial, [&](const State1D& s) { return scheme.rhs(s); }, run.plan,
                              record_energy ? &run.trace : nullptr, energy, nonlinear, opt);
    } catch (const SolverAbort& e) {
        throw SolverAbort(context(cfg, cells, fname) + e.what(), e.step());
    }
    return run;
}

Run2D run_dg_2d(const ExperimentConfig& cfg, int cells, const std::string& flux, bool record_energy) {
    const auto& prob = problem_2d(cfg.problem);
    const auto [ax, bx] = domain_x(cfg);
    const auto [ay, by] = domain_y(cfg);
    const std::string fname = flux.empty() ? cfg.fluxes.front() : flux;

    Run2D run;
    run.mesh = std::make_shared<const Mesh2D>(cartesian_mesh_2d(ax, bx, ay, by, cells, cells));
    run.solver = cfg.solver_config(fname);
    const Scheme2D scheme(run.mesh, run.solver);
    const double dt = cfg.dt ? *cfg.dt : dt_rule(run.solver.p, run.mesh->h());
    run.plan = make_time_plan(cfg.final_time_or_default(), dt, dt_rule_name(cfg));
    run.initial = scheme.initial_state(prob.u0, prob.u1);

    std::function<double(const State2D&)> energy, nonlinear;
    if (record_energy) {
        energy = [&](const State2D& s) { return scheme.linear_energy(s); };
        if (run.solver.source.active()) nonlinear = [&](const State2D& s) { return scheme.nonlinear_energy(s); };
    }
    IntegrateOptions opt;
    opt.sample_every = cfg.energy_every;
    try {
        run.final = integrate(run.initial, [&](const State2D& s) { return scheme.rhs(s); }, run.plan,
                              record_energy ? &run.trace : nullptr, energy, nonlinear, opt);
    } catch (const SolverAbort& e) {
        throw SolverAbort(context(cfg, cells, fname) + e.what(), e.step());
    }
    return run;
}

ConvergenceResult run_convergence(const ExperimentConfig& cfg) {
    const int dim = cfg.dim();
    if (dim == 1 && !problem_1d(cfg.problem).exact) {
        throw ConfigError("problem", cfg.problem + " has no exact solution for a convergence study");
    }
    if (dim == 2 && !problem_2d(cfg.problem).exact) {
        throw ConfigError("problem", cfg.problem + " has no exact solution for a convergence study");
    }
    const std::vector<int> levels = cfg.cells_or_default();
    const double T = cfg.final_time_or_default();

    struct Level {
        ConvergenceRow l2, en;
        double dt = 0.0;
        json meta;
    };
    auto run_level = [&](const std::string& flux, int n) {
        Level lv;
        if (dim == 1) {
            const auto& ex = *problem_1d(cfg.problem).exact;
            const Run1D run = run_dg_1d(cfg, n, flux);
            const double eu = l2_error(run.final.u, [&](double x) { return ex.u(x, T); });
            const double ex_ = h1_semi_error(run.final.u, [&](double x) { return ex.u_x(x, T); });
            const double ev = l2_error(run.final.v, [&](double x) { return ex.u_t(x, T); });
            lv.l2 = {n, run.mesh->h(), eu};
            lv.en = {n, run.mesh->h(), std::sqrt(ex_ * ex_ + ev * ev)};
            lv.dt = run.plan.dt;
            lv.meta = {{"mesh", mesh_json(*run.mesh)}, {"time", plan_json(run.plan)}, {"l2_error", eu},
                       {"energy_norm_error", lv.en.error}};
        } else {
            const auto& ex = *problem_2d(cfg.problem).exact;
            const Run2D run = run_dg_2d(cfg, n, flux);
            const double eu = l2_error(run.final.u, [&](double x, double y) { return ex.u(x, y, T); });
            lv.l2 = {n, run.mesh->h(), eu};
            lv.dt = run.plan.dt;
            lv.meta = {{"mesh", mesh_json(*run.mesh)}, {"time", plan_json(run.plan)}, {"l2_error", eu}};
        }
        return lv;
    };

    ConvergenceResult result;
    json meta = metadata("converge", cfg);
    json series_meta = json::array();
    for (const auto& flux : cfg.fluxes) {
        std::vector<Level> out;
        if (cfg.parallel) {
            std::vector<std::future<Level>> jobs;
            for (const int n : levels) jobs.push_back(std::async(std::launch::async, run_level, flux, n));
            for (auto& j : jobs) out.push_back(j.get());
        } else {
            for (const int n : levels) out.push_back(run_level(flux, n));
        }
        ConvergenceSeries s;
        s.flux = flux;
        json lm = json::array();
        for (const auto& lv : out) {
            s.l2.rows.push_back(lv.l2);
            if (dim == 1) s.energy_norm.rows.push_back(lv.en);
            s.dt.push_back(lv.dt);
            lm.push_back(lv.meta);
        }
        s.l2_fit = fit_rates(s.l2);
        if (dim == 1) s.energy_fit = fit_rates(s.energy_norm);
        json sm = {{"flux", flux}, {"levels", lm}, {"l2_slope", s.l2_fit.least_squares},
                   {"saturated", s.l2_fit.saturated}};
        if (dim == 1) sm["energy_norm_slope"] = s.energy_fit.least_squares;
        series_meta.push_back(sm);

        write_file(result.artifact, cfg, "convergence_" + flux + ".csv",
                   [&](std::ostream& os) { write_convergence_csv(os, s.l2); });
        if (dim == 1) {
            write_file(result.artifact, cfg, "convergence_" + flux + "_energy_norm.csv",
                       [&](std::ostream& os) { write_convergence_csv(os, s.energy_norm); });
        }
        result.series.push_back(std::move(s));
    }
    meta["series"] = series_meta;
    finish(result.artifact, cfg, meta);
    return result;
}

ShockResult run_shock(const ExperimentConfig& cfg) {
    json meta = metadata("shock", cfg);
    RunArtifact art;
    ShockResult r = cfg.dim() == 1 ? shock_1d(cfg, meta) : shock_2d(cfg, meta, art);
    write_file(art, cfg, "solution.csv", [&](std::ostream& os) { write_profile_csv(os, r.dg); });
    write_file(art, cfg, "initial.csv", [&](std::ostream& os) { write_profile_csv(os, r.initial); });
    if (r.exact) write_file(art, cfg, "exact.csv", [&](std::ostream& os) { write_profile_csv(os, *r.exact); });
    if (r.ctcs) write_file(art, cfg, "ctcs.csv", [&](std::ostream& os) { write_profile_csv(os, *r.ctcs); });
    if (r.ctcs_coarse) {
        write_file(art, cfg, "ctcs_coarse.csv", [&](std::ostream& os) { write_profile_csv(os, *r.ctcs_coarse); });
    }
    meta["result"] = shock_json(r);
    finish(art, cfg, meta);
    r.artifact = std::move(art);
    return r;
}

EnergyResult run_energy(const ExperimentConfig& cfg) {
    EnergyResult r;
    json meta = metadata("energy", cfg);
    const int n = cfg.cells_or_default().front();
    if (cfg.dim() == 1) {
        const Run1D run = run_dg_1d(cfg, n, "", true);
        r.trace = run.trace;
        meta["runs"] = json::array({{{"mesh", mesh_json(*run.mesh)}, {"time", plan_json(run.plan)}}});
        write_file(r.artifact, cfg, "solution.csv", [&](std::ostream& os) { write_snapshot_csv(os, run.final.u); });
    } else {
        const Run2D run = run_dg_2d(cfg, n, "", true);
        r.trace = run.trace;
        meta["runs"] = json::array({{{"mesh", mesh_json(*run.mesh)}, {"time", plan_json(run.plan)}}});
        write_file(r.artifact, cfg, "solution_grid.csv", [&](std::ostream& os) { write_snapshot_csv(os, run.final.u); });
    }
    const auto& e = r.trace.nonlinear_energy.empty() ? r.trace.energy : r.trace.nonlinear_energy;
    constexpr double tiny = std::numeric_limits<double>::min();
    r.max_relative_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < e.size(); ++i) {
        r.max_relative_increase = std::max(r.max_relative_increase, (e[i] - e[i - 1]) / std::max(std::abs(e[i - 1]), tiny));
    }
    if (e.size() < 2) r.max_relative_increase = 0.0;
    r.relative_drift = e.empty() ? 0.0 : (e.back() - e.front()) / std::max(std::abs(e.front()), tiny);
    write_file(r.artifact, cfg, "energy.csv", [&](std::ostream& os) { write_energy_csv(os, r.trace); });
    meta["result"] = {{"samples", e.size()},
                      {"max_relative_increase", r.max_relative_increase},
                      {"relative_drift", r.relative_drift},
                      {"monitored", r.trace.nonlinear_energy.empty() ? "linear" : "nonlinear"}};
    finish(r.artifact, cfg, meta);
    return r;
}

CtcsComparison run_compare_ctcs(const ExperimentConfig& cfg) {
    CtcsComparison out;
    const int dim = cfg.dim();
    const bool shock = dim == 1 ? problem_1d(cfg.problem).has_ctcs_comparator : problem_2d(cfg.problem).has_ctcs_comparator;
    if (shock) {
        ExperimentConfig c = cfg;
        out.shock = run_shock(c);
        out.artifact = out.shock->artifact;
        return out;
    }
    json meta = metadata("compare-ctcs", cfg);
    const double T = cfg.final_time_or_default();
    const auto source = source_from_string(cfg.source_or_default());
    ConvergenceTable table;
    json levels = json::array();
    for (const int m : cfg.cells_or_default()) {
        double err = 0.0;
        double dt = 0.0;
        if (dim == 1) {
            const auto& prob = problem_1d(cfg.problem);
            if (!prob.exact) throw ConfigError("problem", cfg.problem + " has no exact solution");
            const auto [a, b] = domain_x(cfg);
            const FDGrid1D grid = make_fd_grid_1d(a, b, m, cfg.boundary_or_default());
            const auto u = ctcs_solve_1d(prob.u0, prob.u1, source, grid, T);
            double s = 0.0;
            for (int i = 0; i < grid.points(); ++i) {
                const double d = u[i] - prob.exact->u(grid.x(i), T);
                s += d * d;
            }
            err = std::sqrt(s * grid.dx());
            dt = grid.dt;
            table.rows.push_back({m, grid.dx(), err});
        } else {
            const auto& prob = problem_2d(cfg.problem);
            if (!prob.exact) throw ConfigError("problem", cfg.problem + " has no exact solution");
            const auto [ax, bx] = domain_x(cfg);
            const auto [ay, by] = domain_y(cfg);
            const FDGrid2D grid = make_fd_grid_2d(ax, bx, ay, by, m, m);
            const auto u = ctcs_solve_2d(prob.u0, prob.u1, source, grid, T);
            double s = 0.0;
            for (int j = 0; j < grid.ny; ++j) {
                for (int i = 0; i < grid.nx; ++i) {
                    const double d = u[static_cast<std::size_t>(j) * grid.nx + i] - prob.exact->u(grid.x(i), grid.y(j), T);
                    s += d * d;
                }
            }
            err = std::sqrt(s * grid.dx() * grid.dy());
            dt = grid.dt;
            table.rows.push_back({m, grid.dx(), err});
        }
        levels.push_back({{"intervals", m}, {"dt_max", dt}, {"l2_error", err}});
    }
    out.fit = fit_rates(table);
    out.table = table;
    write_file(out.artifact, cfg, "convergence_ctcs.csv", [&](std::ostream& os) { write_convergence_csv(os, table); });
    meta["ctcs"] = {{"levels", levels}, {"l2_slope", out.fit->least_squares}};
    finish(out.artifact, cfg, meta);
    return out;
}

std::string list_examples() {
    std::ostringstream os;
    for (const auto& id : problem_ids()) {
        os << id << "  " << problem_dimension(id) << "D  " << problem_title(id) << '\n';
    }
    return os.str();
}

}  // namespace ofedg
