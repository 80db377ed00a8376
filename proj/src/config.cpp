#include "ofedg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ofedg/problems.hpp"

namespace ofedg {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + v + "'");
    }
}

long to_long(const std::string& key, const std::string& v) {
    long x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key, "expected an integer, got '" + v + "'");
    return x;
}

int to_int(const std::string& key, const std::string& v) {
    const long x = to_long(key, v);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ConfigError(key, "integer out of range: '" + v + "'");
    }
    return static_cast<int>(x);
}

std::uint64_t to_uint64(const std::string& key, const std::string& v) {
    std::uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError(key, "expected a non-negative integer, got '" + v + "'");
    }
    return x;
}

bool to_bool(const std::string& key, std::string v) {
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "off" || v == "no") return false;
    throw ConfigError(key, "expected a boolean, got '" + v + "'");
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out;
}

std::string join(const std::vector<int>& items) {
    std::vector<std::string> s;
    for (const int i : items) s.push_back(std::to_string(i));
    return join(s);
}

}  // namespace

int ExperimentConfig::dim() const { return dimension.value_or(problem_dimension(problem)); }

double ExperimentConfig::final_time_or_default() const {
    if (final_time) return *final_time;
    return dim() == 1 ? problem_1d(problem).final_time : problem_2d(problem).final_time;
}

std::string ExperimentConfig::source_or_default() const {
    if (source) return *source;
    return problem_dimension(problem) == 1 ? problem_1d(problem).source : problem_2d(problem).source;
}

BoundaryKind ExperimentConfig::boundary_or_default() const {
    if (boundary) return boundary_from_string(*boundary);
    return problem_dimension(problem) == 1 ? problem_1d(problem).boundary : BoundaryKind::periodic;
}

std::vector<int> ExperimentConfig::cells_or_default() const {
    if (!cells.empty()) return cells;
    return problem_dimension(problem) == 1 ? problem_1d(problem).default_cells : problem_2d(problem).default_cells;
}

FluxParams ExperimentConfig::flux_params(const std::string& kind) const {
    switch (flux_kind_from_string(kind)) {
        case FluxKind::central: return FluxParams::central();
        case FluxKind::alternating: return FluxParams::alternating(alpha);
        case FluxKind::sommerfeld: return FluxParams::sommerfeld(s);
        case FluxKind::custom: return FluxParams::custom(alpha, tau, beta);
    }
    return FluxParams::alternating();
}

SolverConfig ExperimentConfig::solver_config(const std::string& kind) const {
    SolverConfig sc;
    sc.p = p;
    sc.q = q_or_default();
    sc.c = c;
    sc.damping = damping;
    sc.penalty = penalty;
    sc.flux = flux_params(kind.empty() ? fluxes.front() : kind);
    sc.chi = chi_or_default();
    sc.source = source_from_string(source_or_default());
    sc.penalty_scale = penalty_h == "local" ? PenaltyScale::local : PenaltyScale::global;
    return sc;
}

void ExperimentConfig::validate() const {
    int d = 0;
    try {
        d = problem_dimension(problem);
    } catch (const std::exception& e) {
        throw ConfigError("problem", e.what());
    }
    if (dimension && *dimension != d) {
        throw ConfigError("dimension", "problem " + problem + " is " + std::to_string(d) + "D");
    }
    if (p < 2) throw ConfigError("p", "degree must be at least 2");
    if (p > 6 && !dt) throw ConfigError("p", "no time-step rule for p > 6; set dt explicitly");
    const int qq = q_or_default();
    if (qq > p) throw ConfigError("q", "q must not exceed p");
    if (qq < std::max(1, p - 2)) throw ConfigError("q", "q must lie in [max(1, p - 2), p]");
    if (fluxes.empty()) throw ConfigError("flux", "at least one flux is required");
    for (const auto& f : fluxes) {
        try {
            flux_params(f).validate();
        } catch (const std::exception& e) {
            throw ConfigError("flux", e.what());
        }
    }
    if (!(c >= 0.0)) throw ConfigError("c", "penalty coefficient must be non-negative");
    if (penalty_h != "global" && penalty_h != "local") throw ConfigError("penalty_h", "expected global or local");
    const int ch = chi_or_default();
    if (ch != 0 && ch != 1) throw ConfigError("chi", "chi must be 0 or 1");
    if (d == 2 && ch != 0) throw ConfigError("chi", "chi = 1 is only available in 1D");
    try {
        source_from_string(source_or_default());
    } catch (const std::exception& e) {
        throw ConfigError("source", e.what());
    }
    try {
        const BoundaryKind bk = boundary_or_default();
        if (d == 2 && bk != BoundaryKind::periodic) throw std::invalid_argument("2D meshes are periodic");
    } catch (const std::exception& e) {
        throw ConfigError("boundary", e.what());
    }
    if (!(final_time_or_default() > 0.0)) throw ConfigError("T", "final time must be positive");
    if (dt && !(*dt > 0.0)) throw ConfigError("dt", "time step must be positive");
    for (const int n : cells_or_default()) {
        if (n < 2) throw ConfigError("N", "need at least 2 cells per direction");
    }
    if (!(perturb >= 0.0 && perturb < 0.5)) throw ConfigError("perturb", "fraction must lie in [0, 0.5)");
    if (perturb > 0.0 && d == 2) throw ConfigError("perturb", "mesh perturbation is 1D only");
    if (energy_every < 1) throw ConfigError("energy_every", "must be at least 1");
    if (ctcs_cells_or_default() < 2) throw ConfigError("ctcs_N", "need at least 2 intervals");
    if (a && b && !(*a < *b)) throw ConfigError("a", "need a < b");
    if (ay && by && !(*ay < *by)) throw ConfigError("ay", "need ay < by");
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "problem", "dimension", "a",      "b",          "ay",       "by",   "N",       "p",
        "q",       "flux",      "alpha",  "s",          "tau",      "beta", "c",       "damping",
        "penalty", "penalty_h", "chi",    "source",     "boundary", "T",    "dt",      "seed",
        "perturb", "energy_every", "ctcs_N", "parallel", "output"};
    return keys;
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (key == "problem") c.problem = v;
    else if (key == "dimension") c.dimension = to_int(key, v);
    else if (key == "a") c.a = to_double(key, v);
    else if (key == "b") c.b = to_double(key, v);
    else if (key == "ay") c.ay = to_double(key, v);
    else if (key == "by") c.by = to_double(key, v);
    else if (key == "N") {
        c.cells.clear();
        for (const auto& item : split_list(v)) c.cells.push_back(to_int(key, item));
    } else if (key == "p") c.p = to_int(key, v);
    else if (key == "q") c.q = to_int(key, v);
    else if (key == "flux") {
        c.fluxes = split_list(v);
        for (const auto& f : c.fluxes) {
            try {
                flux_kind_from_string(f);
            } catch (const std::exception& e) {
                throw ConfigError(key, e.what());
            }
        }
    } else if (key == "alpha") c.alpha = to_double(key, v);
    else if (key == "s") c.s = to_double(key, v);
    else if (key == "tau") c.tau = to_double(key, v);
    else if (key == "beta") c.beta = to_double(key, v);
    else if (key == "c") c.c = to_double(key, v);
    else if (key == "damping") c.damping = to_bool(key, v);
    else if (key == "penalty") c.penalty = to_bool(key, v);
    else if (key == "penalty_h") c.penalty_h = v;
    else if (key == "chi") c.chi = to_int(key, v);
    else if (key == "source") c.source = v;
    else if (key == "boundary") c.boundary = v;
    else if (key == "T") c.final_time = to_double(key, v);
    else if (key == "dt") c.dt = to_double(key, v);
    else if (key == "seed") {
        c.seed = to_uint64(key, v);
    } else if (key == "perturb") c.perturb = to_double(key, v);
    else if (key == "energy_every") c.energy_every = to_long(key, v);
    else if (key == "ctcs_N") c.ctcs_cells = to_int(key, v);
    else if (key == "parallel") c.parallel = to_bool(key, v);
    else if (key == "output") c.output = v;
    else throw ConfigError(key, "unknown key");
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected key = value");
        }
        apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

ExperimentConfig parse_config(const std::string& path, const std::map<std::string, std::string>& overrides) {
    ExperimentConfig config;
    // The problem id decides several defaults, so apply it first.
    if (const auto it = overrides.find("problem"); it != overrides.end()) apply_setting(config, "problem", it->second);
    if (!path.empty()) config = parse_config_file(path, config);
    for (const auto& [key, value] : overrides) apply_setting(config, key, value);
    config.validate();
    return config;
}

std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig& c) {
    std::vector<std::pair<std::string, std::string>> out;
    auto opt = [&](const char* key, const auto& value, auto&& format) {
        if (value) out.emplace_back(key, format(*value));
    };
    auto num = [](double x) { return fmt(x); };
    auto integer = [](long x) { return std::to_string(x); };
    auto str = [](const std::string& x) { return x; };
    auto boolean = [](bool x) { return std::string(x ? "true" : "false"); };

    out.emplace_back("problem", c.problem);
    opt("dimension", c.dimension, integer);
    opt("a", c.a, num);
    opt("b", c.b, num);
    opt("ay", c.ay, num);
    opt("by", c.by, num);
    if (!c.cells.empty()) out.emplace_back("N", join(c.cells));
    out.emplace_back("p", integer(c.p));
    opt("q", c.q, integer);
    out.emplace_back("flux", join(c.fluxes));
    out.emplace_back("alpha", num(c.alpha));
    out.emplace_back("s", num(c.s));
    out.emplace_back("tau", num(c.tau));
    out.emplace_back("beta", num(c.beta));
    out.emplace_back("c", num(c.c));
    out.emplace_back("damping", boolean(c.damping));
    out.emplace_back("penalty", boolean(c.penalty));
    out.emplace_back("penalty_h", c.penalty_h);
    opt("chi", c.chi, integer);
    opt("source", c.source, str);
    opt("boundary", c.boundary, str);
    opt("T", c.final_time, num);
    opt("dt", c.dt, num);
    out.emplace_back("seed", std::to_string(c.seed));
    out.emplace_back("perturb", num(c.perturb));
    out.emplace_back("energy_every", integer(c.energy_every));
    opt("ctcs_N", c.ctcs_cells, integer);
    out.emplace_back("parallel", boolean(c.parallel));
    if (!c.output.empty()) out.emplace_back("output", c.output);
    return out;
}

std::string emit_config(const ExperimentConfig& c) {
    std::string out;
    for (const auto& [key, value] : config_settings(c)) out += key + " = " + value + "\n";
    return out;
}

}  // namespace ofedg
