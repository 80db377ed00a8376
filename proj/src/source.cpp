#include "ofedg/source.hpp"

#include <cmath>
#include <stdexcept>

namespace ofedg {

double SourceTerm::g_over_u(double u) const {
    if (!g) return 0.0;
    if (std::abs(u) < kGOverUThreshold) return slope_at_zero;
    return g(u) / u;
}

SourceTerm no_source() { return {}; }

SourceTerm sine_source(double amplitude) {
    SourceTerm s;
    s.name = "sin:" + std::to_string(amplitude);
    s.g = [amplitude](double u) { return amplitude * std::sin(u); };
    s.potential = [amplitude](double u) { return -amplitude * (1.0 - std::cos(u)); };
    s.slope_at_zero = amplitude;
    return s;
}

SourceTerm cubic_source(double amplitude) {
    SourceTerm s;
    s.name = "cubic:" + std::to_string(amplitude);
    s.g = [amplitude](double u) { return amplitude * u * u * u; };
    s.potential = [amplitude](double u) { return -0.25 * amplitude * u * u * u * u; };
    s.slope_at_zero = 0.0;
    return s;
}

SourceTerm source_from_string(const std::string& spec) {
    if (spec.empty() || spec == "none") return no_source();
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("source: expected 'kind:amplitude', got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    double amplitude = 0.0;
    try {
        amplitude = std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("source: bad amplitude in '" + spec + "'");
    }
    SourceTerm s;
    if (kind == "sin") s = sine_source(amplitude);
    else if (kind == "cubic") s = cubic_source(amplitude);
    else throw std::invalid_argument("source: unknown kind '" + kind + "'");
    s.name = spec;
    return s;
}

}  // namespace ofedg
