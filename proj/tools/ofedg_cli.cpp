// Experiment runner: converge, shock, energy, compare-ctcs, list-examples.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "ofedg/config.hpp"
#include "ofedg/runner.hpp"

namespace {

enum ExitCode { ok = 0, config_error = 2, solver_abort = 3, check_failed = 4 };

struct Options {
    std::string config_path;
    std::map<std::string, std::string> flags;
    std::string variant;
    std::string expect_slope;
    bool check = false;
};

void add_config_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--config", opt.config_path, "key = value file, or a metadata.json from an earlier run");
    for (const auto& key : ofedg::config_keys()) {
        sub->add_option_function<std::string>(
            "--" + key, [&opt, key](const std::string& v) { opt.flags[key] = v; }, "config key " + key);
    }
}

/// Metadata files carry the settings under "config".
std::map<std::string, std::string> settings_from_metadata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ofedg::ConfigError("", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ofedg::ConfigError("", path + ": " + e.what());
    }
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.at("config").items()) out[k] = v.get<std::string>();
    return out;
}

ofedg::ExperimentConfig load(const Options& opt) {
    auto flags = opt.flags;
    if (!opt.variant.empty()) {
        const std::map<std::string, std::pair<const char*, const char*>> variants = {
            {"edg", {"false", "false"}},
            {"edg+damping", {"true", "false"}},
            {"edg+penalty", {"false", "true"}},
            {"of-edg", {"true", "true"}}};
        const auto it = variants.find(opt.variant);
        if (it == variants.end()) throw ofedg::ConfigError("variant", "expected edg, edg+damping, edg+penalty or of-edg");
        flags.emplace("damping", it->second.first);
        flags.emplace("penalty", it->second.second);
    }
    const bool is_json = opt.config_path.size() > 5 && opt.config_path.substr(opt.config_path.size() - 5) == ".json";
    if (!is_json) return ofedg::parse_config(opt.config_path, flags);
    auto merged = settings_from_metadata(opt.config_path);
    for (const auto& [k, v] : flags) merged[k] = v;
    return ofedg::parse_config("", merged);
}

int converge(const Options& opt) {
    const auto cfg = load(opt);
    const auto result = ofedg::run_convergence(cfg);
    bool pass = true;
    double lo = 0.0, hi = 0.0;
    if (!opt.expect_slope.empty() && std::sscanf(opt.expect_slope.c_str(), "%lf:%lf", &lo, &hi) != 2) {
        throw ofedg::ConfigError("expect-slope", "expected lo:hi");
    }
    for (const auto& s : result.series) {
        std::printf("flux %s\n%6s %14s %14s %8s\n", s.flux.c_str(), "N", "h", "L2 error", "rate");
        for (std::size_t i = 0; i < s.l2.rows.size(); ++i) {
            const auto& r = s.l2.rows[i];
            if (i == 0) std::printf("%6d %14.6e %14.6e %8s\n", r.n, r.h, r.error, "-");
            else std::printf("%6d %14.6e %14.6e %8.3f\n", r.n, r.h, r.error, s.l2_fit.pairwise[i - 1]);
        }
        std::printf("least-squares slope %.3f%s\n", s.l2_fit.least_squares, s.l2_fit.saturated ? " (saturated)" : "");
        if (!s.energy_norm.rows.empty()) std::printf("energy-norm slope   %.3f\n", s.energy_fit.least_squares);
        if (!opt.expect_slope.empty() && !(s.l2_fit.least_squares >= lo && s.l2_fit.least_squares <= hi)) pass = false;
    }
    for (const auto& f : result.artifact.files) std::printf("wrote %s\n", f.c_str());
    return pass ? ok : check_failed;
}

void print_shock(const ofedg::ShockResult& r) {
    std::printf("overshoot %.6e  undershoot %.6e  total variation %.6e\n", r.oscillation.overshoot,
                r.oscillation.undershoot, r.oscillation.total_variation);
    std::printf("max |u(T) - u(0)| %.6e\n", r.linf_change);
    if (r.l1_error) std::printf("L1 midpoint error %.6e\n", *r.l1_error);
    if (r.ctcs) {
        std::printf("fronts at level %.6g: DG %zu, CTCS %zu, tolerance %.4g -> %s\n", r.front_level,
                    r.dg_fronts.size(), r.ctcs_fronts.size(), r.front_tolerance, r.fronts_agree ? "agree" : "differ");
    }
    for (const auto& f : r.artifact.files) std::printf("wrote %s\n", f.c_str());
}

int shock(const Options& opt) {
    const auto r = ofedg::run_shock(load(opt));
    print_shock(r);
    return (opt.check && r.ctcs && !r.fronts_agree) ? check_failed : ok;
}

int energy(const Options& opt) {
    const auto r = ofedg::run_energy(load(opt));
    std::printf("samples %zu  max relative step increase %.6e  relative drift %.6e\n", r.trace.times.size(),
                r.max_relative_increase, r.relative_drift);
    for (const auto& f : r.artifact.files) std::printf("wrote %s\n", f.c_str());
    return (opt.check && r.max_relative_increase > 1e-10) ? check_failed : ok;
}

int compare_ctcs(const Options& opt) {
    const auto r = ofedg::run_compare_ctcs(load(opt));
    if (r.shock) {
        print_shock(*r.shock);
        return (opt.check && !r.shock->fronts_agree) ? check_failed : ok;
    }
    std::printf("%6s %14s %14s\n", "M", "dx", "L2 error");
    for (const auto& row : r.table->rows) std::printf("%6d %14.6e %14.6e\n", row.n, row.h, row.error);
    std::printf("least-squares slope %.3f\n", r.fit->least_squares);
    for (const auto& f : r.artifact.files) std::printf("wrote %s\n", f.c_str());
    return (opt.check && std::abs(r.fit->least_squares - 2.0) > 0.2) ? check_failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OF-EDG wave-equation experiments"};
    app.require_subcommand(1);
    Options opt;

    auto* c = app.add_subcommand("converge", "refinement sweep against an exact solution");
    add_config_flags(c, opt);
    c->add_option("--expect-slope", opt.expect_slope, "lo:hi; exit 4 when a least-squares slope falls outside");

    auto* s = app.add_subcommand("shock", "single run with midpoint snapshots and oscillation metrics");
    add_config_flags(s, opt);
    s->add_option("--variant", opt.variant, "edg, edg+damping, edg+penalty or of-edg");
    s->add_flag("--check", opt.check, "exit 4 when DG and CTCS fronts disagree");

    auto* e = app.add_subcommand("energy", "energy history");
    add_config_flags(e, opt);
    e->add_option("--variant", opt.variant, "edg, edg+damping, edg+penalty or of-edg");
    e->add_flag("--check", opt.check, "exit 4 when the energy grows by more than 1e-10 in one step");

    auto* x = app.add_subcommand("compare-ctcs", "CTCS order study or paired DG / CTCS snapshots");
    add_config_flags(x, opt);
    x->add_option("--variant", opt.variant, "edg, edg+damping, edg+penalty or of-edg");
    x->add_flag("--check", opt.check, "exit 4 on front disagreement or a CTCS slope outside 2 +- 0.2");

    app.add_subcommand("list-examples", "print the example catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? ok : config_error;
    }

    try {
        if (c->parsed()) return converge(opt);
        if (s->parsed()) return shock(opt);
        if (e->parsed()) return energy(opt);
        if (x->parsed()) return compare_ctcs(opt);
        std::cout << ofedg::list_examples();
        return ok;
    } catch (const ofedg::ConfigError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return config_error;
    } catch (const ofedg::SolverAbort& err) {
        std::cerr << "solver abort: " << err.what() << '\n';
        return solver_abort;
    } catch (const std::invalid_argument& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return config_error;
    }
}
