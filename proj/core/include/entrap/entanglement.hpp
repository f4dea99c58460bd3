// entanglement.hpp: concurrence of two qubits decaying in independent
// zero-temperature reservoirs, starting from α|−−⟩ + β|++⟩.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace entrap {

// α real and non-negative; the relative phase is carried by β.
struct InitialState {
    double alpha{0.0};
    std::complex<double> beta{};

    // β = √(1−α²), real.
    static InitialState from_alpha(double alpha);
    static InitialState from_amplitudes(double alpha, std::complex<double> beta);
};

// Product basis {|−−⟩, |−+⟩, |+−⟩, |++⟩}; '+' is the excited state.
using TwoQubitDensity = Eigen::Matrix4cd;

inline constexpr double kPopulationOvershoot = 1e-6;

// max{0, 2|αβ|p − 2|β|²p(1−p)} with p = |c0|².
double concurrence_from_amplitude(double p, const InitialState& st);

// Raw Q before clipping at zero.
double concurrence_witness(double p, const InitialState& st);

// Both qubits of |ψ(0)⟩⟨ψ(0)| sent through the amplitude-damping channel
// with surviving amplitude c0.
TwoQubitDensity two_qubit_state(const InitialState& st, std::complex<double> c0);

// Wootters concurrence max{0, √λ₁−√λ₂−√λ₃−√λ₄}.
double wootters_concurrence(const TwoQubitDensity& rho);

// max{0, 2e^{−2Γ₀t}|β|(|α| − |β|(1−e^{−2Γ₀t}))}
double markovian_concurrence(const InitialState& st, double gamma0, double t);

// −ln(1 − |α|/|β|) / (2Γ₀); +inf when |α| ≥ |β| (no sudden death).
double markovian_death_time(const InitialState& st, double gamma0);

// Concurrence on the plateau p = Z².
double residual_concurrence_from_residue(const InitialState& st, double Z);

} // namespace entrap
