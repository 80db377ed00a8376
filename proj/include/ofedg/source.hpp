#pragma once

#include <functional>
#include <string>

namespace ofedg {

/// Nonlinear source g(u) in u_tt = Laplace(u) + g(u).
struct SourceTerm {
    std::string name = "none";
    std::function<double(double)> g;
    /// G(u) = -int_0^u g(z) dz.
    std::function<double(double)> potential;
    /// g'(0); the limit of g(u)/u at u = 0.
    double slope_at_zero = 0.0;

    bool active() const { return static_cast<bool>(g); }

    /// g(u)/u, switching to g'(0) when |u| < 1e-8.
    double g_over_u(double u) const;
};

inline constexpr double kGOverUThreshold = 1e-8;

SourceTerm no_source();
/// g(u) = amplitude * sin(u).
SourceTerm sine_source(double amplitude);
/// g(u) = amplitude * u^3.
SourceTerm cubic_source(double amplitude);

/// Parses "none", "sin:<A>" or "cubic:<A>".
SourceTerm source_from_string(const std::string& spec);

}  // namespace ofedg
