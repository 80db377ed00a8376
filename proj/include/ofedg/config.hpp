#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofedg/scheme1d.hpp"

namespace ofedg {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Experiment description. Optional members fall back to problem or scheme
/// defaults in `resolved()`; `emit` writes only the members that are set, so
/// parse(emit(c)) == c.
struct ExperimentConfig {
    std::string problem = "ex1";
    std::optional<int> dimension;
    std::optional<double> a, b;    ///< x-extent override
    std::optional<double> ay, by;  ///< y-extent override (2D)
    std::vector<int> cells;        ///< one entry for single runs, several for sweeps
    int p = 2;
    std::optional<int> q;
    std::vector<std::string> fluxes{"A"};  ///< C, A, S or custom
    double alpha = 0.0;
    double s = 1.0;
    double tau = 0.0;
    double beta = 0.0;
    double c = 1.0;
    bool damping = true;
    bool penalty = true;
    std::string penalty_h = "global";
    std::optional<int> chi;
    std::optional<std::string> source;
    std::optional<std::string> boundary;
    std::optional<double> final_time;
    std::optional<double> dt;  ///< explicit step, otherwise the degree rule
    std::uint64_t seed = 1;
    double perturb = 0.0;
    long energy_every = 1;
    std::optional<int> ctcs_cells;
    bool parallel = false;
    std::string output;

    bool operator==(const ExperimentConfig&) const = default;

    /// Problem dimension (explicit value or from the catalog).
    int dim() const;
    int q_or_default() const { return q.value_or(p - 1); }
    int chi_or_default() const { return chi.value_or(dim() == 1 ? 1 : 0); }
    double final_time_or_default() const;
    std::string source_or_default() const;
    BoundaryKind boundary_or_default() const;
    std::vector<int> cells_or_default() const;
    int ctcs_cells_or_default() const { return ctcs_cells.value_or(1000); }

    FluxParams flux_params(const std::string& kind) const;
    /// Scheme parameters for flux `kind` (the first requested flux by default).
    SolverConfig solver_config(const std::string& kind = "") const;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Known keys, in emission order.
const std::vector<std::string>& config_keys();

/// Applies one key = value assignment; throws ConfigError for unknown keys or bad values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Line-oriented `key = value` text; `#` starts a comment.
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});
ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig base = {});

/// Layers defaults, then the file (if any), then the overrides, and validates.
ExperimentConfig parse_config(const std::string& path, const std::map<std::string, std::string>& overrides);

std::string emit_config(const ExperimentConfig& config);

/// Settings as key/value strings (set members only).
std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig& config);

}  // namespace ofedg
