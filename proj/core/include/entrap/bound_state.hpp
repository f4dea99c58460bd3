// bound_state.hpp: qubit–reservoir bound state below the continuum

#pragma once

#include <optional>

#include "entrap/spectra.hpp"

namespace entrap {

// Residue below which a bound state is treated as carrying no trapped
// population when reporting ("bound state present").
inline constexpr double kEffectiveTrappingThreshold = 1e-3;

struct BoundStateResult {
    bool exists{false};
    std::optional<double> energy;    // E_b < 0
    std::optional<double> residue;   // Z in (0, 1]
    std::optional<double> y_at_zero; // y(0); nullopt means ∫J/ω diverges
    double bracket{0.0};             // final bisection interval width

    bool effectively_trapping() const {
        return exists && residue && *residue >= kEffectiveTrappingThreshold;
    }
};

// g(E) = ω₀ − ∫J/(ω−E) − E: positive below the root, negative above.
double eigen_mismatch(const SpectralDensity& spec, double E);

BoundStateResult find_bound_state(const SpectralDensity& spec, double tol = 1e-12);

// Z = 1 / (1 + ∫J/(ω−E_b)² dω).
double residue(const SpectralDensity& spec, double energy);

} // namespace entrap
