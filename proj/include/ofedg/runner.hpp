#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ofedg/config.hpp"
#include "ofedg/diagnostics.hpp"
#include "ofedg/scheme1d.hpp"
#include "ofedg/scheme2d.hpp"
#include "ofedg/timeint.hpp"

namespace ofedg {

inline constexpr const char* kVersionTag = "ofedg 1.0.0";

/// Files written by a run plus the metadata JSON text.
struct RunArtifact {
    std::string metadata_json;
    std::vector<std::string> files;
};

struct Run1D {
    std::shared_ptr<const Mesh1D> mesh;
    SolverConfig solver;
    TimePlan plan;
    State1D initial;
    State1D final;
    EnergyTrace trace;
};

struct Run2D {
    std::shared_ptr<const Mesh2D> mesh;
    SolverConfig solver;
    TimePlan plan;
    State2D initial;
    State2D final;
    EnergyTrace trace;
};

/// Single DG runs with `cells` per direction. `flux` defaults to the first requested flux.
Run1D run_dg_1d(const ExperimentConfig& config, int cells, const std::string& flux = "", bool record_energy = false);
Run2D run_dg_2d(const ExperimentConfig& config, int cells, const std::string& flux = "", bool record_energy = false);

struct ConvergenceSeries {
    std::string flux;
    ConvergenceTable l2;           ///< || u - u_h ||
    ConvergenceTable energy_norm;  ///< (|| (u - u_h)_x ||^2 + || u_t - v_h ||^2)^{1/2}, 1D only
    RateFit l2_fit;
    RateFit energy_fit;
    std::vector<double> dt;
};

struct ConvergenceResult {
    std::vector<ConvergenceSeries> series;
    RunArtifact artifact;
};

ConvergenceResult run_convergence(const ExperimentConfig& config);

/// Samples along a 1D profile (a 2D run is cut along the problem's line).
struct Profile {
    std::vector<double> x;
    std::vector<double> y;  ///< second coordinate of 2D cuts, empty in 1D
    std::vector<double> u;
};

struct ShockResult {
    Profile dg;
    Profile initial;
    std::optional<Profile> exact;
    std::optional<Profile> ctcs;
    /// CTCS averaged over the DG cells sampled by `dg`; fronts are extracted from it.
    std::optional<Profile> ctcs_coarse;
    OscillationReport oscillation;
    double linf_change = 0.0;  ///< max |u_h(T) - u_h(0)| over the sampled points
    std::optional<double> l1_error;
    double front_level = 0.0;
    std::vector<double> dg_fronts;
    std::vector<double> ctcs_fronts;
    double front_tolerance = 0.0;
    bool fronts_agree = false;
    RunArtifact artifact;
};

ShockResult run_shock(const ExperimentConfig& config);

struct EnergyResult {
    EnergyTrace trace;
    double max_relative_increase = 0.0;  ///< max_n (E_{n+1} - E_n) / max(E_n, tiny)
    double relative_drift = 0.0;         ///< (E(T) - E(0)) / E(0)
    RunArtifact artifact;
};

EnergyResult run_energy(const ExperimentConfig& config);

/// Smooth problems: CTCS convergence sweep against the exact solution.
/// Shock problems: paired DG / CTCS snapshots (same as run_shock).
struct CtcsComparison {
    std::optional<ConvergenceTable> table;
    std::optional<RateFit> fit;
    std::optional<ShockResult> shock;
    RunArtifact artifact;
};

CtcsComparison run_compare_ctcs(const ExperimentConfig& config);

/// One line per catalog entry: id, dimension and title.
std::string list_examples();

/// Energy CSV: time,energy[,nonlinear_energy].
void write_energy_csv(std::ostream& os, const EnergyTrace& trace);
/// Profile CSV: x,u (1D) or x,y,u (2D cuts).
void write_profile_csv(std::ostream& os, const Profile& profile);

}  // namespace ofedg
