// spectra.hpp: reservoir spectral densities J(ω) and the integrals built
// on them: the memory kernel f(s) and the level-shift integrals.
//
// Frequencies are in units of the qubit transition frequency ω₀ and times
// in 1/ω₀.  ω₀ is still carried explicitly so the formulas stay dimensionally
// honest; every caller in this project leaves it at 1.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

namespace entrap {

// J(ω) = η ω³/ω₀² e^{−ω/ω_c}
struct SuperOhmic {
    double eta{0.0};
    double omega_c{0.0};
};

// J(ω) = (1/2π) γλ² / ((ω−ω₀)² + λ²), restricted to ω ≥ 0
struct Lorentzian {
    double gamma{0.0};
    double lambda{0.0};
};

class SpectralDensity {
public:
    using Shape = std::variant<SuperOhmic, Lorentzian>;

    static SpectralDensity super_ohmic(double eta, double omega_c, double omega0 = 1.0);
    static SpectralDensity lorentzian(double gamma, double lambda, double omega0 = 1.0);

    const Shape& shape() const noexcept { return shape_; }
    double omega0() const noexcept { return omega0_; }
    bool is_lorentzian() const noexcept { return std::holds_alternative<Lorentzian>(shape_); }

    // Same family with J scaled by `factor` (η or γ multiplied).
    SpectralDensity scaled(double factor) const;

    std::string describe() const;

private:
    SpectralDensity(Shape shape, double omega0);

    Shape shape_;
    double omega0_;
};

double evaluate_J(const SpectralDensity& spec, double omega);

// f(s) = ∫_0^∞ J(ω) e^{−iωs} dω, s ≥ 0.
std::complex<double> memory_kernel(const SpectralDensity& spec, double s);

// ∫_0^∞ J(ω) dω  (= f(0)).
double spectral_weight(const SpectralDensity& spec);

// ∫_0^∞ J(ω)/(ω−E) dω for E < 0.
double level_shift(const SpectralDensity& spec, double E);

// ∫_0^∞ J(ω)/(ω−E)² dω for E < 0; the E-derivative of level_shift.
double level_shift_slope(const SpectralDensity& spec, double E);

// ∫_0^∞ J(ω)/ω dω, or nullopt when it diverges (J(0) > 0).
std::optional<double> zero_energy_shift(const SpectralDensity& spec);

// P∫_0^∞ J(ω)/(ω−ω₀) dω by symmetric excision of [ω₀−ε, ω₀+ε] with the
// analytic correction 2εJ′(ω₀).  The one-argument form picks ε small enough
// that the O(ε³) remainder is far below quadrature tolerance.
double pv_level_shift_at_omega0(const SpectralDensity& spec);
double pv_level_shift_at_omega0(const SpectralDensity& spec, double epsilon);

// Upper frequency beyond which the spectral tail is negligible at 1e−12 of
// the total weight (super-Ohmic), or the start of the algebraic tail
// (Lorentzian).
double truncation_frequency(const SpectralDensity& spec);

} // namespace entrap
