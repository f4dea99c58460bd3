// dynamics.hpp: excited-state amplitude c0(t) of one qubit in its reservoir.
//
// Solves  ċ0(t) = −iω₀ c0(t) − ∫_0^t f(t−τ) c0(τ) dτ,  c0(0) = 1,
// on a uniform grid with the implicit trapezoidal rule in time.  The memory
// integral uses product-trapezoidal weights: the kernel is integrated exactly
// (Gauss–Legendre per step) against the piecewise-linear interpolant of c0.
// Plain sampled-kernel weights alias the algebraic high-frequency tail of J
// onto E < 0 and make a bound state leak at a rate ∝ h².  The scheme is
// second order in h.  The time-dependent decay rate
// and Lamb-shifted frequency follow from the log-derivative:
//   Γ(t) = −Re[ċ0/c0],  Ω(t) = −Im[ċ0/c0].

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "entrap/spectra.hpp"

namespace entrap {

struct AmplitudeTrajectory {
    double h{0.0};
    std::vector<double> times;
    std::vector<std::complex<double>> c0;
    std::vector<double> p_exc;
    // NaN where |c0| has dropped below kAmplitudeFloor.
    std::vector<double> gamma_t;
    std::vector<double> omega_t;
    std::vector<std::complex<double>> kernel_cache;

    std::size_t size() const { return times.size(); }
};

struct MarkovianParams {
    double gamma0{0.0};          // Γ₀ = πJ(ω₀)
    double omega0_shifted{0.0};  // Ω₀ = ω₀ − P∫J/(ω−ω₀)
};

inline constexpr double kAmplitudeFloor = 1e-14;
inline constexpr double kNormOvershootError = 1e-4;
// The memory sum is quadratic in the number of steps.
inline constexpr std::size_t kMaxSteps = 1'000'000;

// Largest step satisfying h ≤ min(0.02, 0.1/λ, 0.1/ω_c, 0.1/√f(0)).
double default_step(const SpectralDensity& spec);

using KernelFunction = std::function<std::complex<double>(double)>;

// Per-step kernel moments on [m h, (m+1) h], m = 0..n_steps−1:
//   zeroth[m] = ∫ f(s) ds,   first[m] = ∫ f(s) (s − m h)/h ds.
struct KernelMoments {
    std::vector<std::complex<double>> zeroth;
    std::vector<std::complex<double>> first;
};
KernelMoments kernel_moments(const KernelFunction& f, double h, std::size_t n_steps);

AmplitudeTrajectory solve_amplitude(const SpectralDensity& spec, double t_max, double h);

// Same integrator for an arbitrary kernel f(s) and bare frequency ω₀.
AmplitudeTrajectory solve_amplitude(const KernelFunction& kernel, double omega0, double h, std::size_t n_steps);

MarkovianParams markovian_params(const SpectralDensity& spec);

// e^{−(iΩ₀+Γ₀)t}
std::complex<double> markovian_amplitude(const MarkovianParams& mp, double t);

// Running ∫_0^{t_n} Γ dt, with Γ taken along the scheme's piecewise-quadratic
// amplitude (nodal slopes ċ0).  NaN once Γ is unavailable.
std::vector<double> integrated_decay(const AmplitudeTrajectory& traj);

} // namespace entrap
