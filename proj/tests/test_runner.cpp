#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ofedg/problems.hpp"
#include "ofedg/runner.hpp"

using namespace ofedg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("ofedg_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

ExperimentConfig config(std::map<std::string, std::string> kv) { return parse_config("", kv); }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(OFEDG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Problems, Catalog) {
    EXPECT_EQ(problem_ids().size(), 8u);
    EXPECT_EQ(problem_dimension("ex5"), 1);
    EXPECT_EQ(problem_dimension("ex8"), 2);
    EXPECT_THROW(problem_dimension("ex9"), std::invalid_argument);
    const auto& ex3 = problem_1d("ex3");
    EXPECT_EQ(ex3.exact->u(0.0, 0.25), 1.0);
    EXPECT_EQ(ex3.exact->u(0.6, 0.25), 0.75);
    EXPECT_EQ(ex3.exact->u(-0.9, 0.25), 0.5);
    // d'Alembert wraps periodically
    EXPECT_EQ(dalembert(ex3.u0, -1.0, 1.0, 0.9, 0.25), 0.5);
    const auto& ex1 = problem_1d("ex1");
    EXPECT_NEAR(ex1.exact->u(0.3, 0.1), std::sin(std::numbers::pi * 0.2), 1e-15);
    const auto& ex2 = problem_1d("ex2");
    EXPECT_EQ(ex2.boundary, BoundaryKind::neumann);
    // The breather solves u_tt = u_xx - sin u; check the residual by finite differences.
    const double x = 1.3, t = 0.7, d = 1e-3;
    const auto& u = ex2.exact->u;
    const double utt = (u(x, t + d) - 2 * u(x, t) + u(x, t - d)) / (d * d);
    const double uxx = (u(x + d, t) - 2 * u(x, t) + u(x - d, t)) / (d * d);
    EXPECT_NEAR(utt - uxx + std::sin(u(x, t)), 0.0, 1e-5);
    EXPECT_NEAR((u(x + d, t) - u(x - d, t)) / (2 * d), ex2.exact->u_x(x, t), 1e-6);
    EXPECT_NEAR((u(x, t + d) - u(x, t - d)) / (2 * d), ex2.exact->u_t(x, t), 1e-6);
    const auto& ex6 = problem_2d("ex6");
    EXPECT_NEAR(ex6.exact->u(0.1, 0.2, 0.3), std::sin(0.3 + std::sqrt(2.0) * 0.3), 1e-15);
    const std::string listing = list_examples();
    EXPECT_EQ(std::count(listing.begin(), listing.end(), '\n'), 8);
}

TEST(Runner, ConvergenceArtifacts) {
    const auto dir = scratch("conv");
    const auto r = run_convergence(config({{"problem", "ex1"}, {"N", "10,20"}, {"flux", "A,C"}, {"output", dir}}));
    ASSERT_EQ(r.series.size(), 2u);
    EXPECT_EQ(r.series[0].flux, "A");
    EXPECT_EQ(r.series[0].l2.rows.size(), 2u);
    EXPECT_LT(r.series[0].l2.rows[1].error, r.series[0].l2.rows[0].error);
    for (const char* f : {"convergence_A.csv", "convergence_C.csv", "convergence_A_energy_norm.csv", "metadata.json",
                          "config.cfg"})
        EXPECT_TRUE(fs::exists(dir / f)) << f;
    EXPECT_EQ(first_line(dir / "convergence_A.csv"), "N,h,error,slope");
    const auto meta = nlohmann::json::parse(slurp(dir / "metadata.json"));
    EXPECT_EQ(meta.at("version"), kVersionTag);
    EXPECT_EQ(meta.at("command"), "converge");
    EXPECT_EQ(meta.at("config").at("problem"), "ex1");
    EXPECT_EQ(meta.at("resolved").at("quadrature").at("volume_points"), 5);
    EXPECT_TRUE(meta.contains("series"));
    fs::remove_all(dir);
}

TEST(Runner, DeterministicAndReplayableFromMetadata) {
    const auto d1 = scratch("det1");
    const auto d2 = scratch("det2");
    const auto d3 = scratch("det3");
    std::map<std::string, std::string> kv{{"problem", "ex1"}, {"N", "10,20"}, {"perturb", "0.1"}, {"seed", "3"}};
    kv["output"] = d1.string();
    run_convergence(config(kv));
    kv["output"] = d2.string();
    run_convergence(config(kv));
    EXPECT_EQ(slurp(d1 / "convergence_A.csv"), slurp(d2 / "convergence_A.csv"));

    std::map<std::string, std::string> replay;
    const auto meta = nlohmann::json::parse(slurp(d1 / "metadata.json"));
    for (const auto& [k, v] : meta.at("config").items()) replay[k] = v.get<std::string>();
    replay["output"] = d3.string();
    run_convergence(parse_config("", replay));
    EXPECT_EQ(slurp(d1 / "convergence_A.csv"), slurp(d3 / "convergence_A.csv"));

    auto file_cfg = parse_config((d1 / "config.cfg").string(), {{"output", d3.string()}});
    kv["output"] = d3.string();
    EXPECT_TRUE(file_cfg == config(kv));
    for (const auto& d : {d1, d2, d3}) fs::remove_all(d);
}

TEST(Runner, ShockFrozenStateAndCsv) {
    const auto dir = scratch("shock");
    const auto r = run_shock(
        config({{"problem", "ex3"}, {"N", "40"}, {"damping", "false"}, {"penalty", "false"}, {"output", dir}}));
    EXPECT_LE(r.linf_change, 1e-12);
    ASSERT_TRUE(r.l1_error.has_value());
    EXPECT_GT(*r.l1_error, 0.05);
    EXPECT_EQ(first_line(dir / "solution.csv"), "x,u");
    EXPECT_EQ(first_line(dir / "exact.csv"), "x,u");
    EXPECT_EQ(r.dg.x.size(), 40u);
    fs::remove_all(dir);
}

TEST(Runner, EnergyTraces) {
    const auto dir = scratch("energy");
    const auto lin = run_energy(config({{"problem", "ex1"}, {"N", "40"}, {"flux", "C"}, {"damping", "false"},
                                        {"penalty", "false"}, {"output", dir}}));
    EXPECT_LT(std::abs(lin.relative_drift), 1e-6);
    EXPECT_EQ(first_line(dir / "energy.csv"), "time,energy");
    const auto nl = run_energy(config({{"problem", "ex2"}, {"N", "40"}, {"T", "0.05"}, {"output", dir}}));
    EXPECT_FALSE(nl.trace.nonlinear_energy.empty());
    EXPECT_EQ(first_line(dir / "energy.csv"), "time,energy,nonlinear_energy");
    fs::remove_all(dir);
}

TEST(Runner, CtcsOrderStudy) {
    const auto r = run_compare_ctcs(config({{"problem", "ex1"}, {"N", "50,100,200"}}));
    ASSERT_TRUE(r.fit.has_value());
    EXPECT_NEAR(r.fit->least_squares, 2.0, 0.2);
}

TEST(Runner, TwoDimensionalConvergence) {
    const auto dir = scratch("conv2d");
    const auto r = run_convergence(config({{"problem", "ex6"}, {"N", "8,16"}, {"output", dir}}));
    ASSERT_EQ(r.series.size(), 1u);
    EXPECT_LT(r.series[0].l2.rows[1].error, r.series[0].l2.rows[0].error);
    EXPECT_TRUE(fs::exists(dir / "convergence_A.csv"));
    EXPECT_FALSE(fs::exists(dir / "convergence_A_energy_norm.csv"));
    fs::remove_all(dir);
}

TEST(Runner, BlowUpRaisesSolverAbort) {
    EXPECT_THROW(run_dg_1d(config({{"problem", "ex1"}, {"dt", "0.5"}, {"T", "100"}}), 20), SolverAbort);
}

TEST(Cli, ExitCodes) {
    const auto dir = scratch("cli");
    EXPECT_EQ(run_cli("list-examples"), 0);
    EXPECT_EQ(run_cli("converge --problem ex1 --N 10,20 --output " + dir.string()), 0);
    EXPECT_TRUE(fs::exists(dir / "metadata.json"));
    EXPECT_EQ(run_cli("converge --config " + (dir / "metadata.json").string()), 0);
    EXPECT_EQ(run_cli("converge --config " + (dir / "config.cfg").string()), 0);
    EXPECT_EQ(run_cli("converge --problem ex1 --p 1"), 2);
    EXPECT_EQ(run_cli("converge --problem ex1 --p 2 --q 3"), 2);
    EXPECT_EQ(run_cli("converge --no-such-flag 1"), 2);
    EXPECT_EQ(run_cli(""), 2);
    EXPECT_EQ(run_cli("shock --problem ex3 --variant nonsense"), 2);
    EXPECT_EQ(run_cli("converge --problem ex1 --N 20 --dt 0.5 --T 100"), 3);
    EXPECT_EQ(run_cli("converge --problem ex1 --N 10,20 --expect-slope 5:6"), 4);
    EXPECT_EQ(run_cli("converge --problem ex1 --N 10,20 --expect-slope 2:4"), 0);
    EXPECT_EQ(run_cli("energy --problem ex1 --N 20 --flux S --variant edg+damping --check"), 0);
    fs::remove_all(dir);
}
